#include "stc/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "stc/error.hpp"

namespace stc {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges, std::string name) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative vertex count");
  std::vector<std::pair<int, int>> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(ErrorKind::InvalidArgument, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) fail(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(u));
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  for (size_t i = 1; i < canon.size(); ++i)
    if (canon[i] == canon[i - 1])
      fail(ErrorKind::InvalidArgument, "duplicate edge (" + std::to_string(canon[i].first) + "," +
                                           std::to_string(canon[i].second) + ")");
  Graph g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.adj_.assign(n, {});
  for (auto [u, v] : canon) {
    int id = static_cast<int>(g.edges_.size());
    g.edges_.push_back({u, v});
    g.adj_[u].push_back({v, id});
    g.adj_[v].push_back({u, id});
  }
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end(), [](const Incidence& x, const Incidence& y) { return x.vertex < y.vertex; });
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(a.size()));
  }
  return g;
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

std::optional<int> Graph::edge_between(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v, [](const Incidence& x, int w) { return x.vertex < w; });
  if (it != a.end() && it->vertex == v) return it->edge;
  return std::nullopt;
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

bool Graph::is_regular() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != max_degree_) return false;
  return true;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : adj_[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> Graph::girth() const {
  int best = -1;
  std::vector<int> dist(n_), via(n_);
  for (int s = 0; s < n_; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    via[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (best >= 0 && 2 * dist[v] + 1 >= best) break;
      for (auto [w, e] : adj_[v]) {
        if (e == via[v]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          via[w] = e;
          q.push(w);
        } else {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::string ElementRef::str() const { return (is_vertex() ? "v" : "e") + std::to_string(index); }

ElementRef ElementRef::parse(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'v' && s[0] != 'e'))
    fail(ErrorKind::InvalidArgument, "bad element reference '" + s + "'");
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') fail(ErrorKind::InvalidArgument, "bad element reference '" + s + "'");
  int idx = std::stoi(s.substr(1));
  return s[0] == 'v' ? vertex(idx) : edge(idx);
}

HamiltonDecomposition verify_hamilton(const Graph& g, const std::vector<int>& cycle) {
  const int n = g.n();
  if (static_cast<int>(cycle.size()) != n)
    fail(ErrorKind::InvalidArgument, "Hamilton sequence has length " + std::to_string(cycle.size()) +
                                         ", expected " + std::to_string(n));
  std::vector<char> seen(n, 0);
  for (int v : cycle) {
    if (v < 0 || v >= n) fail(ErrorKind::InvalidArgument, "Hamilton sequence vertex out of range");
    if (seen[v]) fail(ErrorKind::InvalidArgument, "Hamilton sequence repeats vertex " + std::to_string(v));
    seen[v] = 1;
  }
  HamiltonDecomposition h;
  h.cycle = cycle;
  std::vector<char> on_cycle(g.m(), 0);
  for (int i = 0; i < n; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % n];
    auto e = g.edge_between(a, b);
    if (!e)
      fail(ErrorKind::InvalidArgument,
           "consecutive vertices " + std::to_string(a) + "," + std::to_string(b) + " are not adjacent");
    h.cycle_edges.push_back(*e);
    on_cycle[*e] = 1;
  }
  for (int e = 0; e < g.m(); ++e)
    if (!on_cycle[e]) h.chords.push_back(e);
  if (g.max_degree() == 3 && g.is_regular()) {
    std::vector<int> hits(n, 0);
    for (int e : h.chords) {
      ++hits[g.edge(e).u];
      ++hits[g.edge(e).v];
    }
    for (int v = 0; v < n; ++v)
      if (hits[v] != 1) fail(ErrorKind::InvalidArgument, "chords do not form a perfect matching");
  }
  return h;
}

std::vector<Component> subgraph_components(const Graph& g, const std::vector<int>& edge_subset) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n());
  std::vector<char> used(g.m(), 0);
  for (int e : edge_subset) {
    if (e < 0 || e >= g.m()) fail(ErrorKind::InvalidArgument, "unknown edge index " + std::to_string(e));
    if (used[e]) continue;
    used[e] = 1;
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
  }
  std::vector<Component> out;
  std::vector<int> comp(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0 || adj[s].empty()) continue;
    std::vector<int> verts{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t i = 0; i < verts.size(); ++i)
      for (auto [w, e] : adj[verts[i]])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          verts.push_back(w);
        }
    std::sort(verts.begin(), verts.end());
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int v : verts)
      for (auto [w, e] : adj[v])
        if (v < w) edges.emplace_back(local[v], local[w]);
    out.push_back({Graph::build(static_cast<int>(verts.size()), edges), verts});
  }
  return out;
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<int> order, map, inv;

  bool consistent(int va, int vb) const {
    for (auto [wa, e] : a.neighbors(va)) {
      int wb = map[wa];
      if (wb >= 0 && !b.edge_between(vb, wb)) return false;
    }
    for (auto [wb, e] : b.neighbors(vb)) {
      int wa = inv[wb];
      if (wa >= 0 && !a.edge_between(va, wa)) return false;
    }
    return true;
  }

  bool run(size_t i) {
    if (i == order.size()) return true;
    int va = order[i];
    for (int vb = 0; vb < b.n(); ++vb) {
      if (inv[vb] >= 0 || b.degree(vb) != a.degree(va) || !consistent(va, vb)) continue;
      map[va] = vb;
      inv[vb] = va;
      if (run(i + 1)) return true;
      map[va] = -1;
      inv[vb] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.n() > 60 || b.n() > 60) fail(ErrorKind::Unsupported, "isomorphism check limited to 60 vertices");
  if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
  std::vector<int> da, db;
  for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v)), db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  IsoSearch s{a, b, {}, std::vector<int>(a.n(), -1), std::vector<int>(b.n(), -1)};
  // BFS order keeps each new vertex attached to mapped ones
  std::vector<char> seen(a.n(), 0);
  for (int r = 0; r < a.n(); ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    size_t start = s.order.size();
    s.order.push_back(r);
    for (size_t i = start; i < s.order.size(); ++i)
      for (auto [w, e] : a.neighbors(s.order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          s.order.push_back(w);
        }
  }
  if (!s.run(0)) return std::nullopt;
  return s.map;
}

std::optional<std::vector<int>> find_hamilton_cycle(const Graph& g, std::int64_t budget) {
  const int n = g.n();
  if (n < 3) return std::nullopt;
  std::vector<int> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::vector<size_t> next{0};
  std::int64_t steps = 0;
  while (!path.empty()) {
    if (++steps > budget) return std::nullopt;
    int v = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (g.edge_between(v, 0)) return path;
    }
    auto& k = next.back();
    const auto& nb = g.neighbors(v);
    while (k < nb.size() && used[nb[k].vertex]) ++k;
    if (k < nb.size() && static_cast<int>(path.size()) < n) {
      int w = nb[k++].vertex;
      used[w] = 1;
      path.push_back(w);
      next.push_back(0);
    } else {
      used[v] = 0;
      path.pop_back();
      next.pop_back();
    }
  }
  return std::nullopt;
}

}  // namespace stc
