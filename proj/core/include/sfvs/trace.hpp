#pragma once

#include <string>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

/// One applied reduction or branching step.
struct RuleStep {
  std::string rule;
  VertexSet deleted_vertices;
  std::vector<Edge> deleted_edges;
  VertexSet picked;  // vertices that entered the (implicit) solution
  int delta_k = 0;
  std::string detail;
};

using RuleTrace = std::vector<RuleStep>;

}  // namespace sfvs
