#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stc/coloring.hpp"

namespace stc {

// Independent set S with every vertex outside S having exactly one neighbor in S.
bool is_perfect_code(const Graph& g, const std::vector<int>& S);
// Every vertex (members included) has exactly one neighbor in S.
bool is_total_perfect_code(const Graph& g, const std::vector<int>& S);

std::vector<int> vertex_class(const Coloring& mu, int color);

// 3, 1 or 0: how many vertex classes of a lacunar cubic STC are total perfect codes.
int classify_stc(const Coloring& mu);
bool is_efficient_tc(const Coloring& mu);
// Same vertex colors, no edge with the same color in both.
bool edge_orthogonal(const Coloring& a, const Coloring& b);

struct ColorClassCode {
  int color = 0;
  std::vector<int> vertices;
  bool perfect_code = false;
  bool total_perfect_code = false;
};

struct CodeReport {
  std::vector<ColorClassCode> classes;
  bool efficient_tc = false;
  std::optional<int> total_perfect_rank;  // only for lacunar cubic STCs
  std::string note;
};

CodeReport code_report(const Coloring& mu);

}  // namespace stc
