#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

using GraphPtr = std::shared_ptr<const Graph>;

// Total assignment of colors 0..Δ to vertices and edges. Validity is computed, not assumed.
class Coloring {
 public:
  Coloring() = default;
  Coloring(GraphPtr g, std::vector<int> vertex_colors, std::vector<int> edge_colors);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  int palette() const { return graph_->max_degree() + 1; }

  int vertex_color(int v) const { return vc_[v]; }
  int edge_color(int e) const { return ec_[e]; }
  int color(const ElementRef& r) const { return r.is_vertex() ? vc_[r.index] : ec_[r.index]; }
  const std::vector<int>& vertex_colors() const { return vc_; }
  const std::vector<int>& edge_colors() const { return ec_; }

  void set_vertex_color(int v, int c);
  void set_edge_color(int e, int c);

  std::uint64_t hash() const;
  bool operator==(const Coloring& o) const { return graph_->same_edges(*o.graph_) && vc_ == o.vc_ && ec_ == o.ec_; }

 private:
  GraphPtr graph_;
  std::vector<int> vc_;
  std::vector<int> ec_;
};

enum class ViolationKind { EdgeEdge, VertexEdge, VertexVertex };

struct Violation {
  ViolationKind kind;
  ElementRef a;
  ElementRef b;
  int color;
};

struct ValidationReport {
  bool proper_edges = true;      // adjacent edges differ
  bool vertex_incidence = true;  // vertex differs from its incident edges
  bool vertex_adjacency = true;  // adjacent vertices differ
  std::vector<Violation> violations;
  bool is_stc() const { return proper_edges && vertex_incidence; }
  bool is_tc() const { return is_stc() && vertex_adjacency; }
};

ValidationReport validate(const Coloring& mu);
bool is_stc(const Coloring& mu);
bool is_tc(const Coloring& mu);
// Throws InvalidColoring unless mu is a semi-total coloring.
void require_stc(const Coloring& mu, const std::string& context);

struct ClassListing {
  std::vector<int> vertex_count;
  std::vector<int> edge_count;
  std::vector<int> total;
  int beta = 0;
  int gamma = 0;
  bool is_stc = false;
  bool is_tc = false;
  bool is_equitable = false;
  std::vector<int> lacunar_colors;
};

std::vector<int> beta_edges(const Coloring& mu);
int beta(const Coloring& mu);
int gamma(const Coloring& mu);
ClassListing listing(const Coloring& mu);

// "c(v+e=t)" lines, then "Name(t0,...,tD)" and, when it differs, "= Name(5^4)".
std::string format_listing(const ClassListing& l, const std::string& name);
std::string listing_tuple(const ClassListing& l, const std::string& name);       // Name(9,9,9,8)
std::string listing_compressed(const ClassListing& l, const std::string& name);  // Name(9^3,8)

struct PatternToken {
  int vertex;
  int edge;
  bool operator==(const PatternToken&) const = default;
};

// Tokens "V_E" separated by whitespace; groups "( ... )^k" (k may be written {k}).
std::vector<PatternToken> parse_pattern(const std::string& text);

// Colors the cycle from the pattern starting at cycle position 0, chords get chord_color (default Δ).
Coloring apply_pattern(GraphPtr g, const HamiltonDecomposition& h, const std::vector<PatternToken>& pattern,
                       std::optional<int> chord_color = {});
Coloring apply_pattern(GraphPtr g, const HamiltonDecomposition& h, const std::string& pattern,
                       std::optional<int> chord_color = {});

// Cycle elements v0,e0,v1,... colored i mod 3, seam repaired deterministically, chords colored 3.
Coloring default_lacunar_stc(GraphPtr g, const HamiltonDecomposition& h);

// Backtracking proper (Δ+1)-edge coloring honoring precolored edges (-1 = free);
// each vertex then takes the smallest color missing at it.
Coloring construct_stc(GraphPtr g, const std::vector<int>& precolored_edges = {});

}  // namespace stc
