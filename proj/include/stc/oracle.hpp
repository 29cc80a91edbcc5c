#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "stc/graph.hpp"

namespace stc {

struct OracleResult {
  std::optional<int> value;  // empty when the cap was hit or no TC exists
  int elements = 0;
  std::int64_t nodes = 0;
  bool cap_hit = false;
  bool no_tc = false;  // min_gamma only: no total coloring with Δ+1 colors
};

struct OracleOptions {
  int cap = 26;
  bool allow_large = false;  // explicit consent to exceed the cap
};

OracleResult exact_total_chromatic(const Graph& g, const OracleOptions& opts = {});
OracleResult min_beta(const Graph& g, const OracleOptions& opts = {});
OracleResult min_gamma(const Graph& g, const OracleOptions& opts = {});

enum class Family { Cycle, Complete };

struct ClosedForm {
  int type;  // 1 or 2
  int beta;
};

ClosedForm closed_form(Family family, int n);

// Content-addressed result store: one JSON file per (operation, graph, cap).
class OracleCache {
 public:
  explicit OracleCache(std::filesystem::path dir);
  std::optional<OracleResult> get(const std::string& op, const Graph& g, int cap) const;
  void put(const std::string& op, const Graph& g, int cap, const OracleResult& r) const;
  static std::string key(const std::string& op, const Graph& g, int cap);

 private:
  std::filesystem::path dir_;
};

}  // namespace stc
