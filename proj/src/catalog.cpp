#include <map>
#include <mutex>

#include "stc/error.hpp"
#include "stc/families.hpp"
#include "stc/io.hpp"

namespace stc::detail {
const std::map<std::string, std::string_view>& embedded_files();
}

namespace stc {

namespace {

const json& sidecar() {
  static const json j = [] {
    auto f = catalog_file("catalog.json");
    if (!f) fail(ErrorKind::NotFound, "catalog.json is not embedded");
    return json::parse(*f);
  }();
  return j;
}

const json* find_entry(const std::string& key) {
  for (auto& e : sidecar().at("entries"))
    if (e.at("key").get<std::string>() == key) return &e;
  return nullptr;
}

std::string embedded_text(const std::string& path) {
  auto f = catalog_file(path);
  if (!f) fail(ErrorKind::NotFound, "catalog data file '" + path + "' missing");
  return std::string(*f);
}

void check_expectations(const CatalogEntry& c, const json& expect) {
  auto bad = [&](const std::string& what) { fail(ErrorKind::InvalidArgument, "catalog " + c.key + ": " + what); };
  const Graph& g = *c.graph;
  if (expect.contains("n") && expect["n"].get<int>() != g.n()) bad("vertex count " + std::to_string(g.n()));
  if (expect.contains("m") && expect["m"].get<int>() != g.m()) bad("edge count " + std::to_string(g.m()));
  if (expect.contains("degree") && (!g.is_regular() || g.max_degree() != expect["degree"].get<int>()))
    bad("not regular of the expected degree");
  if (expect.contains("girth") && g.girth() != std::optional<int>(expect["girth"].get<int>())) bad("girth mismatch");
}

// Every listed arc (a,b) must be the chord a -> a+offset[a] of the LCF.
void check_arcs(const CatalogEntry& c, const LcfNotation& lcf, const std::string& path) {
  auto arcs = json::parse(embedded_text(path)).at("arcs");
  const int n = c.graph->n();
  if (static_cast<int>(arcs.size()) != n) fail(ErrorKind::InvalidArgument, "catalog " + c.key + ": arc list size");
  std::vector<char> seen(n, 0);
  for (auto& a : arcs) {
    int u = a[0].get<int>(), v = a[1].get<int>();
    if (u < 0 || u >= n || seen[u]) fail(ErrorKind::InvalidArgument, "catalog " + c.key + ": bad arc source");
    seen[u] = 1;
    int off = lcf.groups[u % lcf.groups.size()][0];
    if (((u + off) % n + n) % n != v)
      fail(ErrorKind::InvalidArgument, "catalog " + c.key + ": arc (" + std::to_string(u) + "," + std::to_string(v) +
                                           ") disagrees with the LCF");
  }
}

Graph family_graph(const json& e, std::optional<HamiltonDecomposition>& ham) {
  const std::string fam = e.at("family").get<std::string>();
  auto args = e.value("args", std::vector<int>{});
  auto arg = [&](size_t i) {
    if (i >= args.size()) fail(ErrorKind::InvalidArgument, "catalog family " + fam + " needs more arguments");
    return args[i];
  };
  if (fam == "generalized_petersen") return generalized_petersen(arg(0), arg(1));
  if (fam == "mobius_ladder") return mobius_ladder(arg(0));
  if (fam == "fat_mobius") return fat_mobius(arg(0));
  if (fam == "prism") {
    auto p = prism(arg(0));
    ham = p.hamilton;
    return p.graph;
  }
  if (fam == "vertex_expand") {
    std::string base = e.at("base").get<std::string>();
    Graph b = base == "k4" ? complete_graph(4) : base == "prism3" ? prism(3).graph : catalog(base).graph->renamed(base);
    std::string variant = e.at("variant").get<std::string>();
    return vertex_expand(b, variant == "K23" ? ExpandVariant::K23 : ExpandVariant::K23WithOneTriangle);
  }
  fail(ErrorKind::InvalidArgument, "unknown catalog family '" + fam + "'");
}

std::unique_ptr<CatalogEntry> build_entry(const std::string& key) {
  std::string base = key;
  int param = 0;
  if (auto colon = key.find(':'); colon != std::string::npos) {
    base = key.substr(0, colon);
    try {
      param = std::stoi(key.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::NotFound, "bad catalog parameter in '" + key + "'");
    }
  }
  const json* ep = find_entry(base);
  if (!ep) fail(ErrorKind::NotFound, "unknown catalog key '" + key + "'");
  const json& e = *ep;
  auto c = std::make_unique<CatalogEntry>();
  c->key = key;
  c->label = e.value("label", key);
  c->provenance = e.value("provenance", std::string{});

  if (e.value("parametric", false)) {
    if (param < 1) fail(ErrorKind::NotFound, "catalog key '" + base + "' needs a parameter, e.g. " + base + ":2");
    Graph g = mobius_ladder(3 * param).renamed(key);
    std::vector<int> cyc(g.n());
    for (int i = 0; i < g.n(); ++i) cyc[i] = i;
    c->hamilton = verify_hamilton(g, cyc);
    c->graph = std::make_shared<const Graph>(std::move(g));
    std::string pat = e.at("pattern").get<std::string>();
    auto pos = pat.find("{2k}");
    if (pos != std::string::npos) pat.replace(pos, 4, std::to_string(2 * param));
    c->pattern = pat;
    c->label = "Mob" + std::to_string(3 * param);
    return c;
  }
  if (param != 0) fail(ErrorKind::NotFound, "catalog key '" + base + "' takes no parameter");

  std::optional<LcfNotation> lcf;
  if (e.contains("lcf")) {
    lcf = parse_lcf(e["lcf"].get<std::string>());
    auto g = from_lcf(*lcf, 0, key);
    c->graph = std::make_shared<const Graph>(std::move(g.graph));
    c->hamilton = g.hamilton;
  } else if (e.contains("extended_lcf")) {
    std::optional<int> deg, girth;
    if (e.contains("expect")) {
      if (e["expect"].contains("degree")) deg = e["expect"]["degree"].get<int>();
      if (e["expect"].contains("girth")) girth = e["expect"]["girth"].get<int>();
    }
    auto g = from_extended_lcf(parse_lcf(e["extended_lcf"].get<std::string>()), e.at("n").get<int>(), deg, girth, key);
    c->graph = std::make_shared<const Graph>(std::move(g.graph));
    c->hamilton = g.hamilton;
    c->validation = g.validation;
  } else if (e.contains("file")) {
    c->graph = std::make_shared<const Graph>(graph_from_json(json::parse(embedded_text(e["file"]))).renamed(key));
  } else if (e.contains("family")) {
    std::optional<HamiltonDecomposition> ham;
    c->graph = std::make_shared<const Graph>(family_graph(e, ham).renamed(key));
    c->hamilton = ham;
  } else {
    fail(ErrorKind::InvalidArgument, "catalog entry '" + key + "' has no graph source");
  }
  if (e.contains("hamilton")) c->hamilton = verify_hamilton(*c->graph, e["hamilton"].get<std::vector<int>>());
  if (e.contains("pattern")) c->pattern = e["pattern"].get<std::string>();
  if (e.contains("trace")) c->trace = embedded_text(e["trace"]);
  if (e.contains("coloring")) c->coloring = embedded_text(e["coloring"]);
  // data checks: a failed extended-LCF validation is reported on the entry, not thrown
  if (e.contains("expect") && !c->validation) check_expectations(*c, e["expect"]);
  if (e.contains("arcs") && lcf) check_arcs(*c, *lcf, e["arcs"]);
  return c;
}

}  // namespace

std::optional<std::string_view> catalog_file(const std::string& path) {
  const auto& files = detail::embedded_files();
  auto it = files.find(path);
  if (it == files.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> catalog_files() {
  std::vector<std::string> out;
  for (auto& [k, v] : detail::embedded_files()) out.push_back(k);
  return out;
}

std::vector<std::string> catalog_keys() {
  std::vector<std::string> out;
  for (auto& e : sidecar().at("entries")) out.push_back(e.at("key").get<std::string>());
  return out;
}

const CatalogEntry& catalog(const std::string& key) {
  static std::recursive_mutex mu;
  static std::map<std::string, std::unique_ptr<CatalogEntry>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto entry = build_entry(key);
  return *cache.emplace(key, std::move(entry)).first->second;
}

}  // namespace stc
