#include "stc/kempe.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <unordered_map>

#include "stc/error.hpp"

namespace stc {

std::vector<ElementRef> Mcap::skeleton() const {
  std::vector<ElementRef> out;
  if (vertices.empty()) return out;
  out.push_back(ElementRef::vertex(vertices.front()));
  for (int e : edges) out.push_back(ElementRef::edge(e));
  out.push_back(ElementRef::vertex(vertices.back()));
  return out;
}

std::vector<ElementRef> Mcap::path() const {
  std::vector<ElementRef> out;
  for (size_t i = 0; i < vertices.size(); ++i) {
    out.push_back(ElementRef::vertex(vertices[i]));
    if (i < edges.size()) out.push_back(ElementRef::edge(edges[i]));
  }
  return out;
}

Mcap Mcap::from_path(const std::vector<ElementRef>& refs, int c0, int c1) {
  Mcap m;
  m.c0 = c0;
  m.c1 = c1;
  for (size_t i = 0; i < refs.size(); ++i) {
    bool want_vertex = i % 2 == 0;
    if (refs[i].is_vertex() != want_vertex)
      fail(ErrorKind::InvalidArgument, "path must alternate vertex, edge, vertex, ...");
    (want_vertex ? m.vertices : m.edges).push_back(refs[i].index);
  }
  if (refs.size() < 3 || refs.size() % 2 == 0)
    fail(ErrorKind::InvalidArgument, "path must start and end at a vertex and contain an edge");
  return m;
}

std::optional<Mcap> trace_alternating(const Coloring& mu, int v0, int c0, int c1) {
  require_stc(mu, "trace_alternating");
  const Graph& g = mu.graph();
  if (v0 < 0 || v0 >= g.n()) fail(ErrorKind::InvalidArgument, "start vertex out of range");
  if (c0 == c1 || c1 < 0 || c1 >= mu.palette() || c0 < 0 || c0 >= mu.palette())
    fail(ErrorKind::InvalidArgument, "need two distinct colors in the palette");
  if (mu.vertex_color(v0) != c0)
    fail(ErrorKind::InvalidArgument, "start vertex " + std::to_string(v0) + " is not colored " + std::to_string(c0));
  Mcap m;
  m.c0 = c0;
  m.c1 = c1;
  m.vertices.push_back(v0);
  std::vector<char> on_path(g.n(), 0);
  on_path[v0] = 1;
  int cur = v0, want = c1;
  for (;;) {
    int next = -1, via = -1;
    for (auto [w, e] : g.neighbors(cur)) {
      if (mu.edge_color(e) != want) continue;
      if (via >= 0) fail(ErrorKind::InvalidColoring, "alternating walk is not unique");
      next = w;
      via = e;
    }
    if (via < 0) break;
    if (on_path[next]) return std::nullopt;
    on_path[next] = 1;
    m.vertices.push_back(next);
    m.edges.push_back(via);
    cur = next;
    want = want == c1 ? c0 : c1;
  }
  if (m.edges.empty()) return std::nullopt;
  int last_vertex = mu.vertex_color(cur), last_edge = mu.edge_color(m.edges.back());
  if ((last_vertex != c0 && last_vertex != c1) || last_vertex == last_edge) return std::nullopt;
  return m;
}

std::vector<Mcap> enumerate_mcaps(const Coloring& mu, std::optional<std::pair<int, int>> filter) {
  require_stc(mu, "enumerate_mcaps");
  if (filter && filter->first == filter->second) fail(ErrorKind::InvalidArgument, "color filter needs two distinct colors");
  std::vector<Mcap> out;
  std::set<std::vector<int>> seen;
  const int p = mu.palette();
  for (int v = 0; v < mu.graph().n(); ++v) {
    int c0 = mu.vertex_color(v);
    for (int c1 = 0; c1 < p; ++c1) {
      if (c1 == c0) continue;
      if (filter && !((filter->first == c0 && filter->second == c1) || (filter->first == c1 && filter->second == c0)))
        continue;
      auto m = trace_alternating(mu, v, c0, c1);
      if (!m || m->length() < 2) continue;
      auto key = m->edges;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      out.push_back(std::move(*m));
    }
  }
  return out;
}

void check_path(const Coloring& mu, const Mcap& path) {
  const Graph& g = mu.graph();
  const int k = path.length();
  auto bad = [](const std::string& what) { fail(ErrorKind::Mismatch, "path does not match coloring: " + what); };
  if (k < 1 || static_cast<int>(path.vertices.size()) != k + 1) bad("need k >= 1 edges and k+1 vertices");
  if (path.c0 == path.c1 || path.c0 < 0 || path.c1 < 0 || path.c0 >= mu.palette() || path.c1 >= mu.palette())
    bad("colors must be two distinct palette colors");
  std::vector<char> seen(g.n(), 0);
  for (int v : path.vertices) {
    if (v < 0 || v >= g.n()) bad("vertex out of range");
    if (seen[v]) bad("vertex " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
  for (int i = 0; i < k; ++i) {
    int e = path.edges[i];
    auto expect = g.edge_between(path.vertices[i], path.vertices[i + 1]);
    if (!expect || *expect != e) bad("edge " + std::to_string(e) + " does not join consecutive path vertices");
    int want = (i % 2 == 0) ? path.c1 : path.c0;
    if (mu.edge_color(e) != want)
      bad("edge " + std::to_string(e) + " has color " + std::to_string(mu.edge_color(e)) + ", expected " +
          std::to_string(want));
  }
  if (mu.vertex_color(path.vertices.front()) != path.c0) bad("start vertex is not colored c0");
  int last = mu.vertex_color(path.vertices.back());
  if ((last != path.c0 && last != path.c1) || last == mu.edge_color(path.edges.back()))
    bad("end vertex fails the terminal condition");
}

Coloring swap(const Coloring& mu, const Mcap& path) {
  require_stc(mu, "swap");
  check_path(mu, path);
  Coloring out = mu;
  auto x = [&](int c) { return c == path.c0 ? path.c1 : (c == path.c1 ? path.c0 : c); };
  for (auto r : path.skeleton()) {
    if (r.is_vertex())
      out.set_vertex_color(r.index, x(mu.vertex_color(r.index)));
    else
      out.set_edge_color(r.index, x(mu.edge_color(r.index)));
  }
  if (!is_stc(out)) fail(ErrorKind::Mismatch, "swap result is not semi-total (malformed path)");
  return out;
}

Mcap beta_edge_move(const Coloring& mu, int edge) {
  const Graph& g = mu.graph();
  if (edge < 0 || edge >= g.m()) fail(ErrorKind::InvalidArgument, "edge index out of range");
  auto [u, v] = g.edge(edge);
  if (mu.vertex_color(u) != mu.vertex_color(v))
    fail(ErrorKind::Mismatch, "edge " + std::to_string(edge) + " is not a beta-edge");
  Mcap m;
  m.vertices = {u, v};
  m.edges = {edge};
  m.c0 = mu.vertex_color(u);
  m.c1 = mu.edge_color(edge);
  return m;
}

Coloring flip_beta_edge(const Coloring& mu, int edge) { return swap(mu, beta_edge_move(mu, edge)); }

std::string StepClass::label() const {
  switch (kind) {
    case StepKind::Neutral: return "neutral";
    case StepKind::Beta: return total ? "total-beta" : "partial-beta";
    case StepKind::Gamma: return total ? "total-gamma" : "partial-gamma";
    case StepKind::BetaGamma: return total ? "total-beta-gamma" : "partial-beta-gamma";
  }
  return "neutral";
}

StepClass classify_values(int b0, int g0, int b1, int g1) {
  bool bd = b1 < b0, gd = g1 < g0;
  if (bd && gd) return {StepKind::BetaGamma, b1 == 0 && g1 <= 1};
  if (bd) return {StepKind::Beta, b1 == 0};
  if (gd) return {StepKind::Gamma, g1 <= 1};
  return {};
}

StepClass classify_step(const Coloring& before, const Coloring& after) {
  if (!before.graph().same_edges(after.graph())) fail(ErrorKind::Mismatch, "colorings are on different graphs");
  auto lb = listing(before), la = listing(after);
  return classify_values(lb.beta, lb.gamma, la.beta, la.gamma);
}

Goal parse_goal(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), '-', '_');
  if (t == "tc") return Goal::Tc;
  if (t == "equitable_tc") return Goal::EquitableTc;
  if (t == "equitable_stc") return Goal::EquitableStc;
  if (t == "min_beta_gamma") return Goal::MinBetaGamma;
  fail(ErrorKind::InvalidArgument, "unknown goal '" + s + "'");
}

std::string goal_name(Goal g) {
  switch (g) {
    case Goal::Tc: return "tc";
    case Goal::EquitableTc: return "equitable_tc";
    case Goal::EquitableStc: return "equitable_stc";
    case Goal::MinBetaGamma: return "min_beta_gamma";
  }
  return "tc";
}

bool goal_reached(Goal g, int b, int gm) {
  switch (g) {
    case Goal::Tc: return b == 0;
    case Goal::EquitableTc: return b == 0 && gm <= 1;
    case Goal::EquitableStc: return gm <= 1;
    case Goal::MinBetaGamma: return false;
  }
  return false;
}

ReductionStep apply_move(Coloring& mu, MoveKind kind, const Mcap& path) {
  if (kind == MoveKind::Flip) {
    // check_path (inside swap) covers colors and the terminal condition
    if (path.length() != 1) fail(ErrorKind::Mismatch, "a flip acts on a single beta-edge");
  }
  ReductionStep s;
  s.kind = kind;
  s.path = path;
  auto lb = listing(mu);
  Coloring next = swap(mu, path);
  auto la = listing(next);
  s.before = {lb.beta, lb.gamma};
  s.after = {la.beta, la.gamma};
  s.cls = classify_values(lb.beta, lb.gamma, la.beta, la.gamma);
  mu = std::move(next);
  return s;
}

Coloring replay(const Coloring& initial, const std::vector<ReductionStep>& steps, bool check_values) {
  Coloring mu = initial;
  for (size_t i = 0; i < steps.size(); ++i) {
    const auto& st = steps[i];
    auto got = apply_move(mu, st.kind, st.path);
    bool recorded = st.before.first >= 0;
    if (check_values && recorded && (got.before != st.before || got.after != st.after))
      fail(ErrorKind::Mismatch, "replay step " + std::to_string(i) + ": recorded (beta,gamma) values differ");
  }
  return mu;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct Node {
  std::vector<std::uint8_t> colors;  // vertices then edges
  int parent;
  MoveKind kind;
  Mcap move;
  std::pair<int, int> score;
  int depth;
  int beta;
  std::vector<int> totals;
  std::uint64_t hash;
};

struct QueueItem {
  std::pair<int, int> score;
  int depth;
  std::uint64_t tie;
  int id;
  bool operator>(const QueueItem& o) const {
    return std::tie(score, depth, tie, id) > std::tie(o.score, o.depth, o.tie, o.id);
  }
};

}  // namespace

ReductionTrace reduce(const Coloring& mu, Goal goal, const SearchOptions& opts) {
  require_stc(mu, "reduce");
  const Graph& g = mu.graph();
  const int n = g.n(), m = g.m(), p = mu.palette();
  const bool gamma_first = goal == Goal::EquitableStc;
  auto score_of = [&](int b, int gm) { return gamma_first ? std::make_pair(gm, b) : std::make_pair(b, gm); };
  auto gamma_of = [](const std::vector<int>& t) {
    auto [mn, mx] = std::minmax_element(t.begin(), t.end());
    return *mx - *mn;
  };

  std::vector<std::uint64_t> zob(static_cast<size_t>(n + m) * p);
  std::mt19937_64 rng(0x5eed5eedull);
  for (auto& z : zob) z = rng();
  auto zk = [&](int elem, int c) { return zob[static_cast<size_t>(elem) * p + c]; };

  std::vector<Node> nodes;
  std::unordered_map<std::uint64_t, std::vector<int>> visited;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> frontier;

  {
    Node root;
    root.colors.resize(n + m);
    std::uint64_t h = 0;
    for (int v = 0; v < n; ++v) root.colors[v] = static_cast<std::uint8_t>(mu.vertex_color(v));
    for (int e = 0; e < m; ++e) root.colors[n + e] = static_cast<std::uint8_t>(mu.edge_color(e));
    for (int x = 0; x < n + m; ++x) h ^= zk(x, root.colors[x]);
    auto l = listing(mu);
    root.parent = -1;
    root.kind = MoveKind::Swap;
    root.beta = l.beta;
    root.totals = l.total;
    root.score = score_of(l.beta, l.gamma);
    root.depth = 0;
    root.hash = h;
    visited[h].push_back(0);
    nodes.push_back(std::move(root));
    frontier.push({nodes[0].score, 0, splitmix(h ^ opts.seed), 0});
  }

  ReductionTrace tr;
  tr.initial = mu;
  tr.goal = goal;
  int best = 0, found = -1;
  std::int64_t admitted = 0;

  auto to_coloring = [&](const Node& nd) {
    std::vector<int> vc(nd.colors.begin(), nd.colors.begin() + n), ec(nd.colors.begin() + n, nd.colors.end());
    return Coloring(mu.graph_ptr(), std::move(vc), std::move(ec));
  };

  while (!frontier.empty()) {
    int id = frontier.top().id;
    frontier.pop();
    const int pb = nodes[id].beta;
    const int pg = gamma_of(nodes[id].totals);
    if (goal_reached(goal, pb, pg)) {
      found = id;
      break;
    }
    if (admitted >= opts.budget) {
      tr.budget_exhausted = true;
      break;
    }
    Coloring cur = to_coloring(nodes[id]);
    std::vector<std::pair<MoveKind, Mcap>> moves;
    for (int e : beta_edges(cur)) moves.emplace_back(MoveKind::Flip, beta_edge_move(cur, e));
    for (auto& mc : enumerate_mcaps(cur)) moves.emplace_back(MoveKind::Swap, std::move(mc));

    for (auto& [kind, mv] : moves) {
      const auto& pc = nodes[id].colors;
      auto x = [&](int c) { return c == mv.c0 ? mv.c1 : (c == mv.c1 ? mv.c0 : c); };
      auto newv = [&](int v) {
        return (v == mv.vertices.front() || v == mv.vertices.back()) ? x(pc[v]) : static_cast<int>(pc[v]);
      };
      // beta changes only on edges at the two endpoints
      int b = pb;
      std::set<int> touched;
      for (int v : {mv.vertices.front(), mv.vertices.back()})
        for (auto [w, e] : g.neighbors(v)) touched.insert(e);
      for (int e : touched) {
        auto [u, w] = g.edge(e);
        b -= pc[u] == pc[w];
        b += newv(u) == newv(w);
      }
      std::vector<int> totals = nodes[id].totals;
      std::uint64_t h = nodes[id].hash;
      for (auto r : mv.skeleton()) {
        int elem = r.is_vertex() ? r.index : n + r.index;
        int c = pc[elem], c2 = x(c);
        --totals[c];
        ++totals[c2];
        h ^= zk(elem, c) ^ zk(elem, c2);
      }
      auto sc = score_of(b, gamma_of(totals));
      if (!(sc < nodes[id].score)) continue;
      auto colors = pc;
      for (auto r : mv.skeleton()) {
        int elem = r.is_vertex() ? r.index : n + r.index;
        colors[elem] = static_cast<std::uint8_t>(x(colors[elem]));
      }
      auto& bucket = visited[h];
      bool dup = false;
      for (int other : bucket)
        if (nodes[other].colors == colors) {
          dup = true;
          break;
        }
      if (dup) continue;
      int cid = static_cast<int>(nodes.size());
      bucket.push_back(cid);
      Node child{std::move(colors), id, kind, mv, sc, nodes[id].depth + 1, b, std::move(totals), h};
      nodes.push_back(std::move(child));
      frontier.push({sc, nodes[cid].depth, splitmix(h ^ opts.seed), cid});
      if (sc < nodes[best].score) best = cid;
      ++admitted;
    }
  }
  tr.nodes = admitted;
  int end = found >= 0 ? found : best;
  std::vector<int> chain;
  for (int c = end; c > 0; c = nodes[c].parent) chain.push_back(c);
  std::reverse(chain.begin(), chain.end());
  Coloring cur = mu;
  for (int c : chain) tr.steps.push_back(apply_move(cur, nodes[c].kind, nodes[c].move));
  tr.final = cur;
  auto l = listing(cur);
  tr.reached = goal == Goal::MinBetaGamma ? !tr.budget_exhausted : goal_reached(goal, l.beta, l.gamma);
  return tr;
}

}  // namespace stc
