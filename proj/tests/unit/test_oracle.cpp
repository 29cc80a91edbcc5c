#include <doctest.h>

#include <filesystem>

#include "stc/error.hpp"
#include "stc/families.hpp"
#include "stc/io.hpp"

using namespace stc;

TEST_CASE("total chromatic number") {
  CHECK(exact_total_chromatic(cycle_graph(6)).value == 3);
  CHECK(exact_total_chromatic(cycle_graph(5)).value == 4);
  CHECK(exact_total_chromatic(complete_graph(4)).value == 5);
  CHECK(exact_total_chromatic(complete_graph(5)).value == 5);
  CHECK(exact_total_chromatic(complete_graph(2)).value == 3);
  CHECK(exact_total_chromatic(*catalog("q3").graph).value == 4);
  CHECK(exact_total_chromatic(*catalog("k33").graph).value == 5);
}

TEST_CASE("minimum beta") {
  for (int n : {4, 5, 7, 8}) CHECK(min_beta(cycle_graph(n)).value == 2);
  CHECK(min_beta(cycle_graph(6)).value == 0);
  CHECK(min_beta(complete_graph(4)).value == 2);
  CHECK(min_beta(complete_graph(6)).value == 3);
  CHECK(min_beta(complete_graph(5)).value == 0);
}

TEST_CASE("minimum gamma") {
  CHECK(min_gamma(cycle_graph(6)).value == 0);
  CHECK(min_gamma(*catalog("q3").graph).value == 0);
  CHECK(min_gamma(cycle_graph(7)).no_tc);
  auto k33 = min_gamma(*catalog("k33").graph);
  CHECK(k33.no_tc);
  CHECK_FALSE(k33.value.has_value());
  CHECK(min_gamma(cycle_graph(9)).value == 0);
  CHECK(min_gamma(complete_graph(3)).value == 0);
  CHECK(min_gamma(cycle_graph(12)).value == 0);
}

TEST_CASE("element cap") {
  const Graph& hea = *catalog("heawood").graph;
  auto r = exact_total_chromatic(hea);
  CHECK(r.cap_hit);
  CHECK_FALSE(r.value.has_value());
  CHECK(r.elements == 35);
  CHECK(min_beta(hea).cap_hit);
  OracleOptions small{10, false};
  CHECK(min_beta(cycle_graph(6), small).cap_hit);
  CHECK(exact_total_chromatic(hea, {26, true}).value == 4);
}

TEST_CASE("closed forms") {
  CHECK(closed_form(Family::Cycle, 9).type == 1);
  CHECK(closed_form(Family::Cycle, 9).beta == 0);
  CHECK(closed_form(Family::Cycle, 8).type == 2);
  CHECK(closed_form(Family::Cycle, 8).beta == 2);
  CHECK(closed_form(Family::Complete, 6).beta == 3);
  CHECK(closed_form(Family::Complete, 7).type == 1);
  CHECK_THROWS_AS(closed_form(Family::Cycle, 2), Error);
  for (int n = 3; n <= 10; ++n) {
    CAPTURE(n);
    auto cf = closed_form(Family::Cycle, n);
    CHECK(exact_total_chromatic(cycle_graph(n)).value == 2 + cf.type);
    CHECK(min_beta(cycle_graph(n)).value == cf.beta);
  }
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto cf = closed_form(Family::Complete, n);
    CHECK(exact_total_chromatic(complete_graph(n)).value == n - 1 + cf.type);
    CHECK(min_beta(complete_graph(n)).value == cf.beta);
  }
}

TEST_CASE("oracle cache") {
  auto dir = std::filesystem::temp_directory_path() / "stc_oracle_cache_test";
  std::filesystem::remove_all(dir);
  OracleCache cache(dir);
  Graph c7 = cycle_graph(7);
  CHECK_FALSE(cache.get("beta", c7, 26).has_value());
  auto r = min_beta(c7);
  cache.put("beta", c7, 26, r);
  auto hit = cache.get("beta", c7, 26);
  REQUIRE(hit.has_value());
  CHECK(hit->value == r.value);
  CHECK(hit->nodes == r.nodes);
  CHECK_FALSE(cache.get("beta", c7, 20).has_value());
  CHECK_FALSE(cache.get("beta", cycle_graph(8), 26).has_value());
  CHECK(OracleCache::key("beta", c7, 26) != OracleCache::key("gamma", c7, 26));
  std::filesystem::remove_all(dir);
}
