#include "stc/covering.hpp"

#include <algorithm>

#include "stc/error.hpp"

namespace stc {

CoveringMap verify_covering(GraphPtr source, GraphPtr target, const std::vector<int>& f) {
  const Graph& g = *source;
  const Graph& h = *target;
  if (static_cast<int>(f.size()) != g.n())
    fail(ErrorKind::InvalidArgument, "map has " + std::to_string(f.size()) + " entries, source has " +
                                         std::to_string(g.n()) + " vertices");
  std::vector<int> fiber(h.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (f[v] < 0 || f[v] >= h.n()) fail(ErrorKind::InvalidArgument, "map value out of range at vertex " + std::to_string(v));
    ++fiber[f[v]];
  }
  for (int w = 0; w < h.n(); ++w)
    if (fiber[w] == 0) fail(ErrorKind::InvalidArgument, "map is not surjective: vertex " + std::to_string(w) + " has no preimage");
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> image;
    for (auto [w, e] : g.neighbors(v)) image.push_back(f[w]);
    std::sort(image.begin(), image.end());
    std::vector<int> expect;
    for (auto [w, e] : h.neighbors(f[v])) expect.push_back(w);
    if (image != expect)
      fail(ErrorKind::InvalidArgument,
           "neighborhood of vertex " + std::to_string(v) + " does not map bijectively onto that of " + std::to_string(f[v]));
  }
  for (int w = 1; w < h.n(); ++w)
    if (fiber[w] != fiber[0])
      fail(ErrorKind::InvalidArgument, "unequal fibers: vertex " + std::to_string(w) + " has " + std::to_string(fiber[w]) +
                                           " preimages, vertex 0 has " + std::to_string(fiber[0]));
  CoveringMap cm{std::move(source), std::move(target), f, {}, fiber.empty() ? 0 : fiber[0]};
  for (const auto& e : g.edges()) cm.edge_map.push_back(*h.edge_between(f[e.u], f[e.v]));
  return cm;
}

Coloring lift_coloring(const CoveringMap& cm, const Coloring& mup) {
  if (!cm.source || !cm.target || cm.fold < 1) fail(ErrorKind::InvalidArgument, "unvalidated covering map");
  if (!mup.graph().same_edges(*cm.target)) fail(ErrorKind::Mismatch, "coloring is not on the covering target");
  require_stc(mup, "lift_coloring");
  if (cm.source->max_degree() != cm.target->max_degree()) fail(ErrorKind::Mismatch, "maximum degrees differ");
  std::vector<int> vc(cm.source->n()), ec(cm.source->m());
  for (int v = 0; v < cm.source->n(); ++v) vc[v] = mup.vertex_color(cm.vertex_map[v]);
  for (int e = 0; e < cm.source->m(); ++e) ec[e] = mup.edge_color(cm.edge_map[e]);
  Coloring mu(cm.source, std::move(vc), std::move(ec));
  require_stc(mu, "lifted coloring");
  auto lp = listing(mup), l = listing(mu);
  if (l.beta != cm.fold * lp.beta || l.gamma != cm.fold * lp.gamma)
    fail(ErrorKind::InvalidColoring, "lift violates the scaling law");
  return mu;
}

}  // namespace stc
