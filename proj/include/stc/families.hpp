#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

// [o1,o2,...]^k (plain) or [(a,b),(c,d),...]^k (extended).
struct LcfNotation {
  std::vector<std::vector<int>> groups;
  int exponent = 1;
  bool extended = false;
  int positions() const { return static_cast<int>(groups.size()) * exponent; }
};

LcfNotation parse_lcf(std::string_view text);

struct HamiltonianGraph {
  Graph graph;
  std::optional<HamiltonDecomposition> hamilton;
};

struct LcfValidation {
  bool regular = false;
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> girth;
  std::optional<int> expected_degree;
  std::optional<int> expected_girth;
  bool ok = false;
  std::string detail;
};

struct ExtendedLcfGraph {
  Graph graph;
  HamiltonDecomposition hamilton;
  LcfValidation validation;
};

// n = 0 means "the positions implied by the notation".
HamiltonianGraph from_lcf(const LcfNotation& lcf, int n = 0, std::string name = {});
ExtendedLcfGraph from_extended_lcf(const LcfNotation& lcf, int n, std::optional<int> expected_degree = {},
                                   std::optional<int> expected_girth = {}, std::string name = {});

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph haar(std::int64_t N);
Graph mobius_ladder(int r);
Graph fat_mobius(int r);
// Built from the ladder picture: a 4r-cycle whose rungs are replaced by crossing pairs.
Graph fat_mobius_by_replacement(int r);
HamiltonianGraph prism(int m);
Graph generalized_petersen(int m, int k);

enum class ExpandVariant { K23, K23WithOneTriangle };
Graph vertex_expand(const Graph& g, ExpandVariant variant);

struct CatalogEntry {
  std::string key;
  std::string label;  // short name used in listings, e.g. "Hea"
  std::shared_ptr<const Graph> graph;
  std::optional<HamiltonDecomposition> hamilton;
  std::optional<std::string> pattern;
  std::optional<std::string> trace;     // embedded trace JSON
  std::optional<std::string> coloring;  // embedded coloring JSON
  std::optional<LcfValidation> validation;
  std::string provenance;
};

std::vector<std::string> catalog_keys();
// Keys also accept "mobius_ladder_3k:k". Entries are built once and cached.
const CatalogEntry& catalog(const std::string& key);
// Raw embedded data file by relative path, e.g. "maps/dod_to_pet.json".
std::optional<std::string_view> catalog_file(const std::string& path);
std::vector<std::string> catalog_files();

}  // namespace stc
