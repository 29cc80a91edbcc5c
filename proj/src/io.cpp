#include "stc/io.hpp"

#include <cmath>
#include <sstream>

#include "stc/error.hpp"

namespace stc {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json graph_to_json(const Graph& g) {
  json j;
  if (!g.name().empty()) j["name"] = g.name();
  j["n"] = g.n();
  json edges = json::array();
  for (auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const json& j) {
  try {
    std::vector<std::pair<int, int>> edges;
    for (auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::InvalidArgument, "edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::build(j.at("n").get<int>(), edges, j.value("name", std::string{}));
  } catch (const json::exception& ex) {
    fail(ErrorKind::InvalidArgument, std::string("bad graph JSON: ") + ex.what());
  }
}

GraphPtr catalog_graph(const std::string& key) { return catalog(key).graph; }

GraphResolver catalog_resolver() {
  return [](const std::string& name) { return catalog_graph(name); };
}

GraphPtr resolve_graph(const json& ref, const GraphResolver& resolve) {
  if (ref.is_string()) return resolve(ref.get<std::string>());
  if (ref.is_object()) return std::make_shared<const Graph>(graph_from_json(ref));
  fail(ErrorKind::InvalidArgument, "graph reference must be a name or a graph object");
}

json coloring_to_json(const Coloring& mu) {
  json j;
  const Graph& g = mu.graph();
  bool by_name = false;
  if (!g.name().empty()) {
    try {
      by_name = catalog(g.name()).graph->same_edges(g);
    } catch (const Error&) {
    }
  }
  j["graph"] = by_name ? json(g.name()) : graph_to_json(g);
  j["palette"] = mu.palette();
  j["vertex_colors"] = mu.vertex_colors();
  j["edge_colors"] = mu.edge_colors();
  return j;
}

Coloring coloring_from_json(const json& j, const GraphResolver& resolve) {
  try {
    GraphPtr g = resolve_graph(j.at("graph"), resolve);
    if (j.contains("palette") && j["palette"].get<int>() != g->max_degree() + 1)
      fail(ErrorKind::InvalidColoring, "palette must be max degree + 1 = " + std::to_string(g->max_degree() + 1));
    return Coloring(g, j.at("vertex_colors").get<std::vector<int>>(), j.at("edge_colors").get<std::vector<int>>());
  } catch (const json::exception& ex) {
    fail(ErrorKind::InvalidArgument, std::string("bad coloring JSON: ") + ex.what());
  }
}

json listing_to_json(const ClassListing& l, const std::string& label) {
  json j;
  j["vertex_counts"] = l.vertex_count;
  j["edge_counts"] = l.edge_count;
  j["totals"] = l.total;
  j["beta"] = l.beta;
  j["gamma"] = l.gamma;
  j["is_stc"] = l.is_stc;
  j["is_tc"] = l.is_tc;
  j["is_equitable"] = l.is_equitable;
  j["lacunar_colors"] = l.lacunar_colors;
  if (!label.empty()) {
    j["summary"] = listing_tuple(l, label);
    j["compressed"] = listing_compressed(l, label);
  }
  return j;
}

json validation_to_json(const ValidationReport& r) {
  json j;
  j["proper_edges"] = r.proper_edges;
  j["vertex_incidence"] = r.vertex_incidence;
  j["vertex_adjacency"] = r.vertex_adjacency;
  j["is_stc"] = r.is_stc();
  j["is_tc"] = r.is_tc();
  json v = json::array();
  for (auto& x : r.violations) {
    const char* kind = x.kind == ViolationKind::EdgeEdge ? "edge-edge"
                       : x.kind == ViolationKind::VertexEdge ? "vertex-edge"
                                                             : "vertex-vertex";
    v.push_back({{"kind", kind}, {"elements", {x.a.str(), x.b.str()}}, {"color", x.color}});
  }
  j["violations"] = std::move(v);
  return j;
}

json mcap_to_json(const Mcap& m) {
  json j;
  json path = json::array();
  for (auto& r : m.path()) path.push_back(r.str());
  j["path"] = std::move(path);
  j["colors"] = {m.c0, m.c1};
  j["k"] = m.length();
  j["vertices"] = m.vertices;
  return j;
}

Mcap mcap_from_json(const json& j) {
  try {
    std::vector<ElementRef> refs;
    for (auto& r : j.at("path")) refs.push_back(ElementRef::parse(r.get<std::string>()));
    auto colors = j.at("colors");
    if (!colors.is_array() || colors.size() != 2) fail(ErrorKind::InvalidArgument, "colors must be [c0,c1]");
    return Mcap::from_path(refs, colors[0].get<int>(), colors[1].get<int>());
  } catch (const json::exception& ex) {
    fail(ErrorKind::InvalidArgument, std::string("bad path JSON: ") + ex.what());
  }
}

json step_to_json(const ReductionStep& s) {
  json j;
  j["kind"] = s.kind == MoveKind::Flip ? "flip" : "swap";
  json path = json::array();
  for (auto& r : s.path.path()) path.push_back(r.str());
  j["path"] = std::move(path);
  j["colors"] = {s.path.c0, s.path.c1};
  j["before"] = {s.before.first, s.before.second};
  j["after"] = {s.after.first, s.after.second};
  j["class"] = s.cls.label();
  return j;
}

ReductionStep step_from_json(const json& j) {
  ReductionStep s;
  try {
    std::string kind = j.value("kind", std::string("swap"));
    if (kind != "swap" && kind != "flip") fail(ErrorKind::InvalidArgument, "step kind must be swap or flip");
    s.kind = kind == "flip" ? MoveKind::Flip : MoveKind::Swap;
    s.path = mcap_from_json(j);
    s.before = {-1, -1};
    s.after = {-1, -1};
    if (j.contains("before")) s.before = {j["before"][0].get<int>(), j["before"][1].get<int>()};
    if (j.contains("after")) s.after = {j["after"][0].get<int>(), j["after"][1].get<int>()};
    if (s.before.first >= 0 && s.after.first >= 0)
      s.cls = classify_values(s.before.first, s.before.second, s.after.first, s.after.second);
  } catch (const json::exception& ex) {
    fail(ErrorKind::InvalidArgument, std::string("bad step JSON: ") + ex.what());
  }
  return s;
}

json steps_to_json(const Coloring& initial, const std::vector<ReductionStep>& steps) {
  json j;
  json c = coloring_to_json(initial);
  j["graph"] = c["graph"];
  j["initial"] = std::move(c);
  json arr = json::array();
  for (auto& s : steps) arr.push_back(step_to_json(s));
  j["steps"] = std::move(arr);
  return j;
}

json trace_to_json(const ReductionTrace& t) {
  json j = steps_to_json(t.initial, t.steps);
  j["goal"] = goal_name(t.goal);
  j["reached"] = t.reached;
  j["nodes"] = t.nodes;
  j["budget_exhausted"] = t.budget_exhausted;
  j["final"] = coloring_to_json(t.final);
  std::string label;
  if (!t.final.graph().name().empty()) {
    try {
      label = catalog(t.final.graph().name()).label;
    } catch (const Error&) {
      label = t.final.graph().name();
    }
  }
  j["final_listing"] = listing_to_json(listing(t.final), label);
  return j;
}

TraceDocument trace_from_json(const json& j, const GraphResolver& resolve) {
  try {
    const json& init = j.at("initial");
    if (init.is_string()) {
      if (init.get<std::string>() != "catalog_pattern")
        fail(ErrorKind::InvalidArgument, "unknown initial coloring reference");
      TraceDocument d{catalog_coloring(catalog(j.at("graph").get<std::string>())), {}};
      for (auto& s : j.at("steps")) d.steps.push_back(step_from_json(s));
      return d;
    }
    TraceDocument d{coloring_from_json(init, resolve), {}};
    for (auto& s : j.at("steps")) d.steps.push_back(step_from_json(s));
    return d;
  } catch (const json::exception& ex) {
    fail(ErrorKind::InvalidArgument, std::string("bad trace JSON: ") + ex.what());
  }
}

json covering_to_json(const CoveringMap& cm) {
  json j;
  j["source"] = cm.source->name().empty() ? graph_to_json(*cm.source) : json(cm.source->name());
  j["target"] = cm.target->name().empty() ? graph_to_json(*cm.target) : json(cm.target->name());
  j["map"] = cm.vertex_map;
  j["fold"] = cm.fold;
  return j;
}

CoveringMap covering_from_json(const json& j, const GraphResolver& resolve) {
  try {
    return verify_covering(resolve_graph(j.at("source"), resolve), resolve_graph(j.at("target"), resolve),
                           j.at("map").get<std::vector<int>>());
  } catch (const json::exception& ex) {
    fail(ErrorKind::InvalidArgument, std::string("bad covering map JSON: ") + ex.what());
  }
}

json code_report_to_json(const CodeReport& r) {
  json j;
  json classes = json::array();
  for (auto& c : r.classes)
    classes.push_back({{"color", c.color},
                       {"vertices", c.vertices},
                       {"perfect_code", c.perfect_code},
                       {"total_perfect_code", c.total_perfect_code}});
  j["classes"] = std::move(classes);
  j["efficient_tc"] = r.efficient_tc;
  j["total_perfect_rank"] = r.total_perfect_rank ? json(*r.total_perfect_rank) : json(nullptr);
  j["note"] = r.note;
  return j;
}

json oracle_to_json(const OracleResult& r) {
  json j;
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  j["elements"] = r.elements;
  j["nodes"] = r.nodes;
  j["cap_hit"] = r.cap_hit;
  j["no_tc"] = r.no_tc;
  return j;
}

Coloring catalog_coloring(const CatalogEntry& e) {
  if (e.pattern && e.hamilton) return apply_pattern(e.graph, *e.hamilton, *e.pattern);
  if (e.coloring) return coloring_from_json(json::parse(*e.coloring));
  if (e.hamilton && e.graph->is_regular() && e.graph->max_degree() == 3) return default_lacunar_stc(e.graph, *e.hamilton);
  return construct_stc(e.graph);
}

namespace {

const char* kNames[] = {"hazel", "red", "blue", "green", "orange", "purple", "brown", "pink", "gray", "olive", "cyan"};
const char* kHex[] = {"#8e7618", "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kNamed = 11;

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string positions(const Graph& g, const DotOptions& opts, int v) {
  if (!opts.circular) return {};
  const auto& cyc = opts.circular->cycle;
  int idx = 0;
  for (size_t i = 0; i < cyc.size(); ++i)
    if (cyc[i] == v) idx = static_cast<int>(i);
  double r = std::max(2.0, g.n() / 4.0);
  double a = M_PI / 2 - 2 * M_PI * idx / g.n();
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << ", pos=\"" << r * std::cos(a) << "," << r * std::sin(a) << "!\"";
  return os.str();
}

std::string dot_impl(const Graph& g, const Coloring* mu, const DotOptions& opts) {
  std::ostringstream os;
  os << "graph " << quoted(g.name().empty() ? "G" : g.name()) << " {\n";
  if (opts.circular) os << "  layout=neato;\n";
  os << "  node [shape=circle, style=filled, fontcolor=white];\n";
  for (int v = 0; v < g.n(); ++v) {
    os << "  " << v << " [label=\"" << v << "\"";
    if (mu) {
      int c = mu->vertex_color(v);
      os << ", color=" << quoted(color_hex(c)) << ", fillcolor=" << quoted(color_hex(c))
         << ", colorname=" << quoted(color_name(c)) << ", tcolor=" << c;
    }
    os << positions(g, opts, v) << "];\n";
  }
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    os << "  " << u << " -- " << v << " [id=\"e" << e << "\"";
    if (mu) {
      int c = mu->edge_color(e);
      os << ", color=" << quoted(color_hex(c)) << ", colorname=" << quoted(color_name(c)) << ", tcolor=" << c;
      if (mu->vertex_color(u) == mu->vertex_color(v)) os << ", label=\"beta\", penwidth=3";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string color_name(int c) { return c >= 0 && c < kNamed ? kNames[c] : "color" + std::to_string(c); }
std::string color_hex(int c) { return c >= 0 && c < kNamed ? kHex[c] : "#000000"; }

std::string to_dot(const Coloring& mu, const DotOptions& opts) { return dot_impl(mu.graph(), &mu, opts); }
std::string to_dot(const Graph& g, const DotOptions& opts) { return dot_impl(g, nullptr, opts); }

}  // namespace stc
