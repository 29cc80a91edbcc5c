#include "stc/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "stc/error.hpp"

namespace stc {

namespace {

// Elements in BFS order from a highest-degree vertex; each vertex is followed by
// its edges to already placed vertices.
struct Layout {
  int count = 0;
  std::vector<std::vector<int>> conflict_stc;  // earlier elements that must differ (STC rules)
  std::vector<std::vector<int>> adjacent_vertices;  // vertex elements: earlier adjacent vertex elements
};

Layout layout(const Graph& g) {
  Layout L;
  const int n = g.n();
  std::vector<int> vpos(n, -1), epos(g.m(), -1);
  std::vector<char> queued(n, 0);
  std::vector<std::pair<bool, int>> order;  // (is_vertex, id)
  for (;;) {
    int root = -1;
    for (int v = 0; v < n; ++v)
      if (!queued[v] && (root < 0 || g.degree(v) > g.degree(root))) root = v;
    if (root < 0) break;
    std::vector<int> q{root};
    queued[root] = 1;
    for (size_t i = 0; i < q.size(); ++i) {
      int v = q[i];
      vpos[v] = static_cast<int>(order.size());
      order.push_back({true, v});
      for (auto [w, e] : g.neighbors(v)) {
        if (vpos[w] >= 0 && w != v) {
          epos[e] = static_cast<int>(order.size());
          order.push_back({false, e});
        }
        if (!queued[w]) {
          queued[w] = 1;
          q.push_back(w);
        }
      }
    }
  }
  L.count = static_cast<int>(order.size());
  L.conflict_stc.assign(L.count, {});
  L.adjacent_vertices.assign(L.count, {});
  for (int i = 0; i < L.count; ++i) {
    auto [isv, id] = order[i];
    auto& c = L.conflict_stc[i];
    if (isv) {
      for (auto [w, e] : g.neighbors(id)) {
        if (epos[e] < i) c.push_back(epos[e]);
        if (vpos[w] < i) L.adjacent_vertices[i].push_back(vpos[w]);
      }
    } else {
      auto [u, v] = g.edge(id);
      c.push_back(vpos[u]);
      c.push_back(vpos[v]);
      for (int x : {u, v})
        for (auto [w, f] : g.neighbors(x))
          if (f != id && epos[f] < i) c.push_back(epos[f]);
    }
  }
  return L;
}

enum class Mode { Feasible, MinBeta, MinGamma };

struct Search {
  const Layout& L;
  int colors;
  Mode mode;
  bool total;  // forbid equal adjacent vertices
  std::vector<int> assign;
  std::vector<int> totals;
  int best = -1;
  int floor = 0;  // best possible objective value: stop when reached
  std::int64_t nodes = 0;

  int gamma_lower_bound(int remaining) const {
    int mx = *std::max_element(totals.begin(), totals.end());
    // pour the remaining elements into the lowest classes, never above the current max
    std::vector<int> t = totals;
    for (int u = 0; u < remaining; ++u) {
      auto it = std::min_element(t.begin(), t.end());
      if (*it >= mx) break;
      ++*it;
    }
    int mn = *std::min_element(t.begin(), t.end());
    return mn >= mx ? floor : mx - mn;
  }

  bool done() const { return best >= 0 && best <= floor; }

  void run(int i, int maxused, int beta) {
    ++nodes;
    if (i == L.count) {
      int val = 0;
      if (mode == Mode::MinBeta) val = beta;
      if (mode == Mode::MinGamma) {
        auto [a, b] = std::minmax_element(totals.begin(), totals.end());
        val = *b - *a;
      }
      if (best < 0 || val < best) best = val;
      return;
    }
    if (mode == Mode::MinGamma && best >= 0 && gamma_lower_bound(L.count - i) >= best) return;
    int limit = std::min(colors - 1, maxused + 1);  // colors are interchangeable
    for (int c = 0; c <= limit; ++c) {
      bool ok = true;
      for (int j : L.conflict_stc[i])
        if (assign[j] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      int nb = beta;
      for (int j : L.adjacent_vertices[i])
        if (assign[j] == c) ++nb;
      if (total && nb != beta) continue;
      if (mode == Mode::MinBeta && best >= 0 && nb >= best) continue;
      assign[i] = c;
      ++totals[c];
      run(i + 1, std::max(maxused, c), nb);
      --totals[c];
      assign[i] = -1;
      if (done()) return;
    }
  }
};

bool over_cap(const Graph& g, const OracleOptions& o, OracleResult& r) {
  r.elements = g.elements();
  if (r.elements > o.cap && !o.allow_large) {
    r.cap_hit = true;
    return true;
  }
  return false;
}

}  // namespace

OracleResult exact_total_chromatic(const Graph& g, const OracleOptions& opts) {
  OracleResult r;
  if (over_cap(g, opts, r)) return r;
  if (g.elements() == 0) {
    r.value = 0;
    return r;
  }
  Layout L = layout(g);
  for (int k = g.max_degree() + 1;; ++k) {
    Search s{L, k, Mode::Feasible, true, std::vector<int>(L.count, -1), std::vector<int>(k, 0)};
    s.run(0, -1, 0);
    r.nodes += s.nodes;
    if (s.best >= 0) {
      r.value = k;
      return r;
    }
  }
}

OracleResult min_beta(const Graph& g, const OracleOptions& opts) {
  OracleResult r;
  if (over_cap(g, opts, r)) return r;
  Layout L = layout(g);
  int k = g.max_degree() + 1;
  Search s{L, k, Mode::MinBeta, false, std::vector<int>(L.count, -1), std::vector<int>(k, 0)};
  s.run(0, -1, 0);
  r.nodes = s.nodes;
  if (s.best >= 0) r.value = s.best;
  return r;
}

OracleResult min_gamma(const Graph& g, const OracleOptions& opts) {
  OracleResult r;
  if (over_cap(g, opts, r)) return r;
  Layout L = layout(g);
  int k = g.max_degree() + 1;
  Search s{L, k, Mode::MinGamma, true, std::vector<int>(L.count, -1), std::vector<int>(k, 0)};
  s.floor = L.count % k == 0 ? 0 : 1;
  s.run(0, -1, 0);
  r.nodes = s.nodes;
  if (s.best >= 0)
    r.value = s.best;
  else
    r.no_tc = true;
  return r;
}

ClosedForm closed_form(Family family, int n) {
  if (family == Family::Cycle) {
    if (n < 3) fail(ErrorKind::InvalidArgument, "cycle needs n >= 3");
    bool t1 = n % 3 == 0;
    return {t1 ? 1 : 2, t1 ? 0 : 2};
  }
  if (n < 1) fail(ErrorKind::InvalidArgument, "complete graph needs n >= 1");
  bool t1 = n % 2 == 1;
  return {t1 ? 1 : 2, t1 ? 0 : n / 2};
}

OracleCache::OracleCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::string OracleCache::key(const std::string& op, const Graph& g, int cap) {
  std::ostringstream os;
  os << op << ';' << cap << ';' << g.n() << ';';
  for (auto& e : g.edges()) os << e.u << ',' << e.v << ';';
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return op + "_" + buf;
}

std::optional<OracleResult> OracleCache::get(const std::string& op, const Graph& g, int cap) const {
  std::ifstream in(dir_ / (key(op, g, cap) + ".json"));
  if (!in) return std::nullopt;
  auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  OracleResult r;
  if (!j["value"].is_null()) r.value = j["value"].get<int>();
  r.elements = j.value("elements", 0);
  r.nodes = j.value("nodes", std::int64_t{0});
  r.cap_hit = j.value("cap_hit", false);
  r.no_tc = j.value("no_tc", false);
  return r;
}

void OracleCache::put(const std::string& op, const Graph& g, int cap, const OracleResult& r) const {
  nlohmann::json j;
  j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
  j["elements"] = r.elements;
  j["nodes"] = r.nodes;
  j["cap_hit"] = r.cap_hit;
  j["no_tc"] = r.no_tc;
  std::ofstream(dir_ / (key(op, g, cap) + ".json")) << j.dump(2) << "\n";
}

}  // namespace stc
