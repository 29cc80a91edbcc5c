#include <doctest.h>

#include "stc/error.hpp"
#include "stc/families.hpp"
#include "stc/io.hpp"

using namespace stc;

namespace {
std::vector<std::pair<int, int>> cube_edges() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v)
    for (int b = 1; b < 8; b <<= 1)
      if (v < (v ^ b)) e.push_back({v, v ^ b});
  return e;
}
}  // namespace

TEST_CASE("build: K2, Q3 and rejected inputs") {
  Graph k2 = Graph::build(2, {{0, 1}});
  CHECK(k2.m() == 1);
  CHECK(k2.max_degree() == 1);

  Graph q3 = Graph::build(8, cube_edges(), "q3");
  CHECK(q3.m() == 12);
  CHECK(q3.max_degree() == 3);
  CHECK(q3.elements() == 20);
  CHECK(q3.is_regular());
  CHECK(q3.is_bipartite());

  CHECK_THROWS_AS(Graph::build(4, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(Graph::build(4, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph::build(4, {{2, 2}}), Error);
  CHECK_THROWS_AS(Graph::build(4, {{0, 4}}), Error);
  CHECK_THROWS_AS(Graph::build(4, {{-1, 2}}), Error);
}

TEST_CASE("edges are canonically sorted and indexed") {
  Graph g = Graph::build(4, {{3, 2}, {1, 0}, {0, 2}});
  REQUIRE(g.m() == 3);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.edge(1).v == 2);
  CHECK(g.edge(2).u == 2);
  CHECK(g.edge_between(3, 2) == 2);
  CHECK_FALSE(g.edge_between(0, 3).has_value());
}

TEST_CASE("max degree and girth of catalog graphs") {
  CHECK(catalog("robertson").graph->max_degree() == 4);
  CHECK(catalog("mcgee").graph->girth() == 7);
  CHECK(catalog("tutte_coxeter").graph->girth() == 8);
  CHECK(catalog("q3").graph->girth() == 4);
  CHECK(catalog("petersen").graph->girth() == 5);
  CHECK(catalog("heawood").graph->girth() == 6);
  CHECK(catalog("robertson").graph->girth() == 5);
  Graph tree = Graph::build(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK_FALSE(tree.girth().has_value());
  CHECK(cycle_graph(9).girth() == 9);
}

TEST_CASE("verify_hamilton") {
  auto q3 = catalog("q3").graph;
  auto h = verify_hamilton(*q3, {0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(h.chords.size() == 4);
  CHECK(h.cycle_edges.size() == 8);
  std::vector<int> all = h.chords;
  all.insert(all.end(), h.cycle_edges.begin(), h.cycle_edges.end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < q3->m(); ++i) CHECK(all[i] == i);

  auto hea = catalog("heawood").graph;
  std::vector<int> cyc(14);
  for (int i = 0; i < 14; ++i) cyc[i] = i;
  CHECK(verify_hamilton(*hea, cyc).chords.size() == 7);

  CHECK_THROWS_AS(verify_hamilton(*q3, {0, 1, 2, 3, 4, 5, 6, 0}), Error);
  CHECK_THROWS_AS(verify_hamilton(*q3, {0, 2, 1, 3, 4, 5, 6, 7}), Error);
  CHECK_THROWS_AS(verify_hamilton(*q3, {0, 1, 2}), Error);
}

TEST_CASE("subgraph_components") {
  auto q3 = catalog("q3").graph;
  std::vector<int> all(q3->m());
  for (int i = 0; i < q3->m(); ++i) all[i] = i;
  CHECK(subgraph_components(*q3, all).size() == 1);
  CHECK(subgraph_components(*q3, {}).empty());

  auto h = *catalog("q3").hamilton;
  auto comps = subgraph_components(*q3, h.chords);
  REQUIRE(comps.size() == 4);
  for (auto& c : comps) {
    CHECK(c.graph.n() == 2);
    CHECK(c.graph.m() == 1);
    CHECK(q3->edge_between(c.vertex_map[0], c.vertex_map[1]).has_value());
  }
  CHECK_THROWS_AS(subgraph_components(*q3, {12}), Error);
}

TEST_CASE("element references") {
  CHECK(ElementRef::vertex(3).str() == "v3");
  CHECK(ElementRef::edge(12).str() == "e12");
  CHECK(ElementRef::parse("e12") == ElementRef::edge(12));
  CHECK(ElementRef::parse("v0") == ElementRef::vertex(0));
  CHECK_THROWS_AS(ElementRef::parse("x1"), Error);
  CHECK_THROWS_AS(ElementRef::parse("v"), Error);
}

TEST_CASE("isomorphism and Hamilton search utilities") {
  Graph a = cycle_graph(6);
  Graph b = Graph::build(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
  auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  for (auto& e : a.edges()) CHECK(b.edge_between((*iso)[e.u], (*iso)[e.v]).has_value());
  CHECK_FALSE(find_isomorphism(complete_graph(4), cycle_graph(4)).has_value());
  CHECK_FALSE(find_hamilton_cycle(*catalog("petersen").graph).has_value());
  auto hc = find_hamilton_cycle(*catalog("dodecahedron").graph);
  REQUIRE(hc.has_value());
  CHECK_NOTHROW(verify_hamilton(*catalog("dodecahedron").graph, *hc));
}

TEST_CASE("graph JSON round trip keeps canonical order") {
  Graph g = catalog("q3").graph->renamed("cube");
  json j = graph_to_json(g);
  CHECK(j["n"] == 8);
  CHECK(j["edges"].size() == 12);
  CHECK(j["edges"][0] == json::array({0, 1}));
  Graph back = graph_from_json(j);
  CHECK(back.same_edges(g));
  CHECK(back.name() == "cube");
  CHECK_THROWS_AS(graph_from_json(json{{"n", 2}, {"edges", {{0, 0}}}}), Error);
}
