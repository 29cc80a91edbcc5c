#include <doctest.h>

#include "stc/error.hpp"
#include "stc/families.hpp"
#include "stc/io.hpp"

using namespace stc;

namespace {
CoveringMap load_map(const std::string& file) { return covering_from_json(json::parse(*catalog_file(file))); }
}  // namespace

TEST_CASE("shipped covering maps") {
  auto p = load_map("maps/prism8_to_q3.json");
  CHECK(p.fold == 2);
  CHECK(p.source->n() == 16);
  CHECK(p.edge_map.size() == 24);
  auto d = load_map("maps/dod_to_pet.json");
  CHECK(d.fold == 2);
  CHECK(d.target->name() == "petersen");
  std::vector<int> fiber(10, 0);
  for (int v : d.vertex_map) ++fiber[v];
  for (int f : fiber) CHECK(f == 2);
}

TEST_CASE("identity map and lift") {
  auto q3 = catalog_graph("q3");
  std::vector<int> id(8);
  for (int i = 0; i < 8; ++i) id[i] = i;
  auto cm = verify_covering(q3, q3, id);
  CHECK(cm.fold == 1);
  Coloring mu = catalog_coloring(catalog("q3"));
  CHECK(lift_coloring(cm, mu) == mu);
}

TEST_CASE("verify_covering rejects bad maps") {
  auto q3 = catalog_graph("q3");
  auto p8 = catalog_graph("prism8");
  auto good = load_map("maps/prism8_to_q3.json").vertex_map;
  std::vector<int> not_onto(16, 0);
  CHECK_THROWS_AS(verify_covering(p8, q3, not_onto), Error);
  auto swapped = good;
  std::swap(swapped[0], swapped[1]);
  CHECK_THROWS_AS(verify_covering(p8, q3, swapped), Error);
  CHECK_THROWS_AS(verify_covering(p8, q3, std::vector<int>(good.begin(), good.end() - 1)), Error);
  auto out_of_range = good;
  out_of_range[3] = 8;
  CHECK_THROWS_AS(verify_covering(p8, q3, out_of_range), Error);
  // equal fibers: C_6 -> C_3 works, C_6 -> C_4 does not exist
  auto c6 = std::make_shared<const Graph>(cycle_graph(6));
  auto c3 = std::make_shared<const Graph>(cycle_graph(3));
  CHECK(verify_covering(c6, c3, {0, 1, 2, 0, 1, 2}).fold == 2);
}

TEST_CASE("lifts scale beta and gamma") {
  auto p = load_map("maps/prism8_to_q3.json");
  auto tr = reduce(catalog_coloring(catalog("q3")), Goal::EquitableTc);
  REQUIRE(gamma(tr.final) == 0);
  Coloring up = lift_coloring(p, tr.final);
  CHECK(is_tc(up));
  CHECK(beta(up) == 0);
  CHECK(gamma(up) == 0);
  CHECK(is_efficient_tc(up));

  Coloring start = catalog_coloring(catalog("q3"));
  Coloring up0 = lift_coloring(p, start);
  CHECK(beta(up0) == 2 * beta(start));
  CHECK(gamma(up0) == 2 * gamma(start));

  auto d = load_map("maps/dod_to_pet.json");
  Coloring pet = catalog_coloring(catalog("petersen"));
  CHECK(listing(pet).total == std::vector<int>{6, 6, 6, 7});
  Coloring dod = lift_coloring(d, pet);
  auto l = listing(dod);
  CHECK(l.is_tc);
  CHECK(l.gamma == 2);
  CHECK_FALSE(l.is_equitable);
}

TEST_CASE("lift preconditions") {
  auto p = load_map("maps/prism8_to_q3.json");
  CHECK_THROWS_AS(lift_coloring(p, catalog_coloring(catalog("heawood"))), Error);
  Coloring bad = catalog_coloring(catalog("q3"));
  bad.set_vertex_color(bad.graph().edge(0).u, bad.edge_color(0));
  REQUIRE_FALSE(is_stc(bad));
  CHECK_THROWS_AS(lift_coloring(p, bad), Error);
}
