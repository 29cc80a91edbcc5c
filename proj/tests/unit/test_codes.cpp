#include <doctest.h>

#include <functional>
#include <queue>

#include "stc/error.hpp"
#include "stc/families.hpp"
#include "stc/io.hpp"

using namespace stc;

namespace {
std::vector<int> distances(const Graph& g, int s) {
  std::vector<int> d(g.n(), -1);
  std::queue<int> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [w, e] : g.neighbors(u))
      if (d[w] < 0) d[w] = d[u] + 1, q.push(w);
  }
  return d;
}
std::vector<int> residue(int n, int r) {
  std::vector<int> s;
  for (int v = r; v < n; v += 3) s.push_back(v);
  return s;
}
Coloring q3_equitable() { return reduce(catalog_coloring(catalog("q3")), Goal::EquitableTc).final; }
}  // namespace

TEST_CASE("perfect codes") {
  const Graph& q3 = *catalog("q3").graph;
  for (int v = 0; v < 8; ++v) {
    auto d = distances(q3, v);
    int anti = int(std::find(d.begin(), d.end(), 3) - d.begin());
    CHECK(is_perfect_code(q3, {v, anti}));
  }
  std::vector<int> all(8);
  for (int i = 0; i < 8; ++i) all[i] = i;
  CHECK_FALSE(is_perfect_code(q3, all));
  CHECK_FALSE(is_perfect_code(q3, {0, 1}));

  const Graph& fos = *catalog("foster90").graph;
  // An independent perfect code of a cubic graph has n/4 vertices; 90 is not divisible by 4.
  CHECK_FALSE(is_perfect_code(fos, residue(90, 0)));
  CHECK_FALSE(is_perfect_code(fos, residue(90, 2)));
  CHECK(is_total_perfect_code(fos, residue(90, 1)));
  CHECK_FALSE(is_total_perfect_code(fos, residue(90, 0)));
  CHECK_FALSE(is_total_perfect_code(q3, {}));
  CHECK_THROWS_AS(is_perfect_code(q3, {9}), Error);
}

TEST_CASE("rank of lacunar STCs") {
  Coloring k33 = catalog_coloring(catalog("k33"));
  CHECK(classify_stc(k33) == 3);
  for (int k = 1; k <= 4; ++k) {
    Coloring mob = catalog_coloring(catalog("mobius_ladder_3k:" + std::to_string(k)));
    CHECK(classify_stc(mob) == 3);
    for (int c = 0; c < 3; ++c) CHECK(is_total_perfect_code(mob.graph(), vertex_class(mob, c)));
  }
  CHECK(classify_stc(catalog_coloring(catalog("foster90"))) == 1);
  CHECK(classify_stc(catalog_coloring(catalog("tutte_coxeter"))) == 1);
  CHECK(classify_stc(catalog_coloring(catalog("mcgee"))) == 1);
  CHECK_THROWS_AS(classify_stc(construct_stc(catalog("robertson").graph)), Error);
  CHECK_THROWS_AS(classify_stc(q3_equitable()), Error);
}

TEST_CASE("efficient total colorings") {
  CHECK(is_efficient_tc(q3_equitable()));
  CHECK_FALSE(is_efficient_tc(catalog_coloring(catalog("petersen"))));
  CHECK_THROWS_AS(is_efficient_tc(catalog_coloring(catalog("q3"))), Error);
  auto r = code_report(q3_equitable());
  CHECK(r.efficient_tc);
  CHECK(r.classes.size() == 4);
  CHECK_FALSE(r.total_perfect_rank.has_value());
  auto f = code_report(catalog_coloring(catalog("foster90")));
  CHECK(f.total_perfect_rank == 1);
  CHECK(f.classes[0].total_perfect_code);
  CHECK_FALSE(f.classes[1].perfect_code);
  CHECK_FALSE(f.classes[2].perfect_code);
  CHECK(f.classes[3].vertices.empty());
}

TEST_CASE("edge orthogonality") {
  Coloring mu = q3_equitable();
  CHECK_FALSE(edge_orthogonal(mu, mu));
  // search a TC with the same vertex colors and no edge color in common
  const Graph& g = mu.graph();
  std::vector<int> ec(g.m(), -1);
  std::function<bool(int)> fill = [&](int e) -> bool {
    if (e == g.m()) return true;
    auto [u, v] = g.edge(e);
    for (int c = 0; c < 4; ++c) {
      if (c == mu.edge_color(e) || c == mu.vertex_color(u) || c == mu.vertex_color(v)) continue;
      bool clash = false;
      for (int x : {u, v})
        for (auto [w, f] : g.neighbors(x)) clash |= f < e && ec[f] == c;
      if (clash) continue;
      ec[e] = c;
      if (fill(e + 1)) return true;
    }
    ec[e] = -1;
    return false;
  };
  REQUIRE(fill(0));
  Coloring nu(mu.graph_ptr(), mu.vertex_colors(), ec);
  CHECK(is_tc(nu));
  CHECK(edge_orthogonal(mu, nu));
  CHECK(edge_orthogonal(nu, mu));
  // sharing one edge color breaks orthogonality
  Coloring shared = nu;
  shared.set_edge_color(0, mu.edge_color(0));
  CHECK_FALSE(edge_orthogonal(mu, shared));
  Coloring other_vertices = catalog_coloring(catalog("q3"));
  CHECK_FALSE(edge_orthogonal(mu, other_vertices));
  CHECK_THROWS_AS(edge_orthogonal(mu, catalog_coloring(catalog("heawood"))), Error);
}
