#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stc/coloring.hpp"

namespace stc {

// Alternating path v_0 e_1 v_1 ... e_k v_k: mu(v_0)=c0, odd edges c1, even edges c0,
// mu(v_k) in {c0,c1} and mu(v_k) != mu(e_k).
struct Mcap {
  std::vector<int> vertices;
  std::vector<int> edges;
  int c0 = 0;
  int c1 = 0;
  bool maximal = true;

  int length() const { return static_cast<int>(edges.size()); }
  std::vector<ElementRef> skeleton() const;  // v_0, e_1..e_k, v_k
  std::vector<ElementRef> path() const;      // v_0, e_1, v_1, ..., e_k, v_k
  static Mcap from_path(const std::vector<ElementRef>& refs, int c0, int c1);
  bool operator==(const Mcap&) const = default;
};

std::optional<Mcap> trace_alternating(const Coloring& mu, int v0, int c0, int c1);
// All MCAPs with k >= 2 (single beta-edges are flips), de-duplicated under reversal,
// ordered by start vertex, then c0, then c1. The filter is an unordered color pair.
std::vector<Mcap> enumerate_mcaps(const Coloring& mu, std::optional<std::pair<int, int>> filter = {});
// Throws Mismatch if the path does not fit mu.
void check_path(const Coloring& mu, const Mcap& path);
Coloring swap(const Coloring& mu, const Mcap& path);
Mcap beta_edge_move(const Coloring& mu, int edge);
Coloring flip_beta_edge(const Coloring& mu, int edge);

enum class StepKind { Neutral, Beta, Gamma, BetaGamma };

struct StepClass {
  StepKind kind = StepKind::Neutral;
  bool total = false;
  std::string label() const;  // "neutral", "partial-beta", "total-gamma", "total-beta-gamma", ...
  bool operator==(const StepClass&) const = default;
};

StepClass classify_step(const Coloring& before, const Coloring& after);
StepClass classify_values(int beta_before, int gamma_before, int beta_after, int gamma_after);

enum class MoveKind { Swap, Flip };

struct ReductionStep {
  MoveKind kind = MoveKind::Swap;
  Mcap path;
  std::pair<int, int> before{0, 0};  // (beta, gamma)
  std::pair<int, int> after{0, 0};
  StepClass cls;
};

enum class Goal { Tc, EquitableTc, EquitableStc, MinBetaGamma };

Goal parse_goal(const std::string& s);  // accepts "equitable_tc" and "equitable-tc"
std::string goal_name(Goal g);
bool goal_reached(Goal g, int beta, int gamma);

struct ReductionTrace {
  Coloring initial;
  std::vector<ReductionStep> steps;
  Coloring final;
  Goal goal = Goal::Tc;
  bool reached = false;
  std::int64_t nodes = 0;
  bool budget_exhausted = false;
};

struct SearchOptions {
  std::int64_t budget = 100'000;  // admitted search nodes
  std::uint64_t seed = 0;
};

ReductionTrace reduce(const Coloring& mu, Goal goal, const SearchOptions& opts = {});

// Applies one move, recomputing its before/after values and classification.
ReductionStep apply_move(Coloring& mu, MoveKind kind, const Mcap& path);
// Re-applies steps from the initial coloring; checks recorded before/after values.
Coloring replay(const Coloring& initial, const std::vector<ReductionStep>& steps, bool check_values = true);

}  // namespace stc
