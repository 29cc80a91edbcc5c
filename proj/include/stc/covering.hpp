#pragma once

#include <vector>

#include "stc/coloring.hpp"

namespace stc {

struct CoveringMap {
  GraphPtr source;
  GraphPtr target;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;  // source edge -> target edge
  int fold = 0;
};

CoveringMap verify_covering(GraphPtr source, GraphPtr target, const std::vector<int>& f);

// Pulls mup back along the map; checks beta and gamma scale by the fold.
Coloring lift_coloring(const CoveringMap& cm, const Coloring& mup);

}  // namespace stc
