#include "stc/codes.hpp"

#include "stc/error.hpp"

namespace stc {

namespace {

std::vector<char> membership(const Graph& g, const std::vector<int>& S) {
  std::vector<char> in(g.n(), 0);
  for (int v : S) {
    if (v < 0 || v >= g.n()) fail(ErrorKind::InvalidArgument, "vertex out of range in code");
    in[v] = 1;
  }
  return in;
}

int neighbors_in(const Graph& g, const std::vector<char>& in, int v) {
  int k = 0;
  for (auto [w, e] : g.neighbors(v)) k += in[w];
  return k;
}

}  // namespace

bool is_perfect_code(const Graph& g, const std::vector<int>& S) {
  auto in = membership(g, S);
  for (int v = 0; v < g.n(); ++v) {
    int k = neighbors_in(g, in, v);
    if (in[v] ? k != 0 : k != 1) return false;
  }
  return true;
}

bool is_total_perfect_code(const Graph& g, const std::vector<int>& S) {
  auto in = membership(g, S);
  for (int v = 0; v < g.n(); ++v)
    if (neighbors_in(g, in, v) != 1) return false;
  return true;
}

std::vector<int> vertex_class(const Coloring& mu, int color) {
  std::vector<int> out;
  for (int v = 0; v < mu.graph().n(); ++v)
    if (mu.vertex_color(v) == color) out.push_back(v);
  return out;
}

int classify_stc(const Coloring& mu) {
  require_stc(mu, "classify_stc");
  const Graph& g = mu.graph();
  if (!g.is_regular() || g.max_degree() != 3) fail(ErrorKind::Unsupported, "classify_stc needs a cubic graph");
  int nonempty = 0, qualifying = 0;
  bool lacunar = false;
  for (int c = 0; c < mu.palette(); ++c) {
    auto S = vertex_class(mu, c);
    if (S.empty()) {
      lacunar = true;
      continue;
    }
    ++nonempty;
    // members of a total perfect code pair up along beta-edges
    if (is_total_perfect_code(g, S)) ++qualifying;
  }
  if (!lacunar) fail(ErrorKind::Unsupported, "classify_stc needs a lacunar coloring");
  if (qualifying == 3 && nonempty == 3) return 3;
  if (qualifying == 1) return 1;
  return 0;
}

bool is_efficient_tc(const Coloring& mu) {
  if (!is_tc(mu)) fail(ErrorKind::InvalidColoring, "is_efficient_tc needs a total coloring");
  for (int c = 0; c < mu.palette(); ++c)
    if (!is_perfect_code(mu.graph(), vertex_class(mu, c))) return false;
  return true;
}

bool edge_orthogonal(const Coloring& a, const Coloring& b) {
  if (!a.graph().same_edges(b.graph()) || a.palette() != b.palette())
    fail(ErrorKind::Mismatch, "colorings are on different graphs");
  if (a.vertex_colors() != b.vertex_colors()) return false;
  for (int e = 0; e < a.graph().m(); ++e)
    if (a.edge_color(e) == b.edge_color(e)) return false;
  return true;
}

CodeReport code_report(const Coloring& mu) {
  CodeReport r;
  const Graph& g = mu.graph();
  std::vector<int> tpc;
  bool lacunar = false;
  for (int c = 0; c < mu.palette(); ++c) {
    ColorClassCode cc;
    cc.color = c;
    cc.vertices = vertex_class(mu, c);
    cc.perfect_code = is_perfect_code(g, cc.vertices);
    cc.total_perfect_code = is_total_perfect_code(g, cc.vertices);
    if (cc.vertices.empty()) lacunar = true;
    if (cc.total_perfect_code) tpc.push_back(c);
    r.classes.push_back(std::move(cc));
  }
  r.efficient_tc = is_tc(mu) && is_efficient_tc(mu);
  if (lacunar && is_stc(mu) && g.is_regular() && g.max_degree() == 3) r.total_perfect_rank = classify_stc(mu);
  r.note = "beta-edges: " + std::to_string(beta(mu)) + "; total perfect code classes: [";
  for (size_t i = 0; i < tpc.size(); ++i) r.note += (i ? "," : "") + std::to_string(tpc[i]);
  r.note += "]";
  return r;
}

}  // namespace stc
