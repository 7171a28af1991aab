#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

/// Bipartite graph given by its two sides and the (p, q) edges between them.
struct BipartiteView {
  VertexSet side_p;
  VertexSet side_q;
  std::vector<std::pair<Vertex, Vertex>> edges;  // (p, q), sorted
};

struct ExpansionResult {
  VertexSet x;
  VertexSet y;
  std::vector<std::pair<Vertex, Vertex>> expansion_edges;  // (p, q), sorted
  std::optional<Vertex> unsaturated_witness;
};

/// Throws ContractViolation if sides overlap or an edge leaves the view.
void validate_view(const BipartiteView& b);

/// Maximum matching by augmenting paths, P-vertices tried in ascending order.
std::vector<std::pair<Vertex, Vertex>> maximum_matching(const BipartiteView& b);

/// Nonempty X ⊆ P, Y ⊆ Q such that X has a t-expansion into Y and N(Y) ⊆ X.
/// Requires |Q| >= t|P| and no isolated Q-vertex.
ExpansionResult find_expansion(const BipartiteView& b, int t);

/// Like find_expansion, but requires |Q| > t·(maximum matching size) and
/// additionally names a vertex of Y left unsaturated by the expansion.
ExpansionResult find_matching_expansion_with_witness(const BipartiteView& b, int t);

/// First broken ExpansionResult invariant, or empty.
std::optional<std::string> expansion_violation(const BipartiteView& b, int t,
                                               const ExpansionResult& r,
                                               bool require_witness);

namespace detail {

/// Inner (X', Y') search used by the witness loop. Standard returns every
/// vertex reachable by alternating paths from unmatched Q-vertices; Tight
/// returns a smallest closed piece whose Y' holds only saturated vertices,
/// which drives the loop through its shrinking steps.
enum class ExpansionCore { Standard, Tight };

ExpansionResult witness_loop(const BipartiteView& b, int t, ExpansionCore core);

}  // namespace detail

}  // namespace sfvs
