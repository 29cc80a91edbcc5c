#include <doctest.h>

#include "stc/error.hpp"
#include "stc/families.hpp"
#include "stc/io.hpp"

using namespace stc;

TEST_CASE("coloring JSON round trip") {
  Coloring mu = catalog_coloring(catalog("heawood"));
  json j = coloring_to_json(mu);
  CHECK(j["graph"] == "heawood");
  CHECK(j["palette"] == 4);
  CHECK(coloring_from_json(j) == mu);

  auto g = std::make_shared<const Graph>(cycle_graph(5));
  Coloring c5 = construct_stc(g);
  json inline_j = coloring_to_json(c5);
  CHECK(inline_j["graph"].is_object());
  CHECK(coloring_from_json(inline_j) == c5);

  json bad = j;
  bad["palette"] = 5;
  CHECK_THROWS_AS(coloring_from_json(bad), Error);
  bad = j;
  bad["vertex_colors"].erase(0);
  CHECK_THROWS_AS(coloring_from_json(bad), Error);
  bad = j;
  bad["graph"] = "nope";
  CHECK_THROWS_AS(coloring_from_json(bad), Error);
}

TEST_CASE("listing JSON") {
  auto l = listing(catalog_coloring(catalog("q3")));
  json j = listing_to_json(l, "Q3");
  CHECK(j["beta"] == 2);
  CHECK(j["totals"] == json::array({5, 6, 5, 4}));
  CHECK(j["summary"] == "Q3(5,6,5,4)");
}

TEST_CASE("trace JSON round trip and replay") {
  auto tr = reduce(catalog_coloring(catalog("pappus")), Goal::EquitableTc);
  json j = trace_to_json(tr);
  CHECK(j["goal"] == "equitable_tc");
  CHECK(j["reached"] == true);
  REQUIRE(j["steps"].size() == tr.steps.size());
  auto s0 = j["steps"][0];
  CHECK((s0["kind"] == "swap" || s0["kind"] == "flip"));
  CHECK(s0["path"][0].get<std::string>().front() == 'v');
  CHECK(s0["path"][1].get<std::string>().front() == 'e');
  CHECK(s0["colors"].size() == 2);
  CHECK(s0["before"].size() == 2);
  CHECK(s0.contains("class"));
  auto doc = trace_from_json(j);
  CHECK(doc.initial == tr.initial);
  CHECK(replay(doc.initial, doc.steps) == tr.final);
  CHECK(dump(steps_to_json(doc.initial, doc.steps)["steps"]) == dump(j["steps"]));
}

TEST_CASE("catalog traces replay exactly") {
  for (auto key : {"tutte_coxeter", "foster90", "biggs_smith", "mcgee"}) {
    CAPTURE(key);
    const auto& e = catalog(key);
    REQUIRE(e.trace.has_value());
    auto doc = trace_from_json(json::parse(*e.trace));
    CHECK(doc.initial == catalog_coloring(e));
    CHECK_NOTHROW(replay(doc.initial, doc.steps));
  }
}

TEST_CASE("step JSON rejects inconsistent paths") {
  json s = {{"kind", "swap"}, {"path", {"v0", "v1"}}, {"colors", {0, 1}}};
  CHECK_THROWS_AS(step_from_json(s), Error);
  json k = {{"kind", "jump"}, {"path", {"v0", "e0", "v1"}}, {"colors", {0, 1}}};
  CHECK_THROWS_AS(step_from_json(k), Error);
}

TEST_CASE("DOT export") {
  Coloring mu = catalog_coloring(catalog("q3"));
  DotOptions opts;
  opts.circular = catalog("q3").hamilton;
  std::string dot = to_dot(mu, opts);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("beta") != std::string::npos);
  CHECK(dot.find("pos=") != std::string::npos);
  CHECK(dot.find(color_hex(3)) != std::string::npos);
  CHECK(color_name(0) == "hazel");
  CHECK(color_name(3) == "green");
  std::string plain = to_dot(*catalog("q3").graph);
  CHECK(plain.find("beta") == std::string::npos);
}

TEST_CASE("catalog_coloring fallbacks") {
  CHECK(is_stc(catalog_coloring(catalog("dodecahedron"))));
  CHECK(is_tc(catalog_coloring(catalog("petersen"))));
  CHECK(is_stc(catalog_coloring(catalog("coxeter"))));
  CHECK(catalog_coloring(catalog("robertson")).palette() == 5);
}
