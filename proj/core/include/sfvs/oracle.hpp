#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

/// Raised when an exhaustive search would exceed its size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  bool yes = false;
  /// Minimum solution, lexicographically least among those of that size;
  /// present when the answer is YES.
  std::optional<VertexSet> solution;
};

enum class OracleMode {
  Auto,     // chordal fast path when the graph is chordal
  Chordal,  // T-triangle hitting (caller asserts chordality)
  General,  // T-cycle hitting, any graph
};

/// Exhaustive search over subsets by size then lexicographic order, up to
/// the budget. Throws GuardError when the graph has more than `max_n` vertices.
OracleResult oracle_decide(const Instance& inst, OracleMode mode = OracleMode::Auto,
                           std::size_t max_n = 24);

/// Smallest hitting set of size at most `max_size` (no guard), or empty.
std::optional<VertexSet> brute_force_solution(const Instance& inst, int max_size,
                                              OracleMode mode);

/// True iff deleting `s` leaves no cycle through a remaining terminal.
bool is_solution(const Instance& inst, const VertexSet& s);

/// A terminal cycle surviving the deletion of `s`, or empty when `s` is a solution.
std::optional<std::vector<Vertex>> surviving_t_cycle(const Instance& inst, const VertexSet& s);

struct HittingSetInstance {
  VertexSet universe;
  std::vector<VertexSet> sets;  // each a sorted T-triangle
  int budget = 0;
};

/// One 3-set per T-triangle. Throws StructureError for non-chordal graphs.
HittingSetInstance export_3hs(const Instance& inst);

/// "p 3hs <|U|> <#sets> <k>" then one set per line, 1-based ids.
std::string format_3hs(const HittingSetInstance& hs);

/// Brute-force decision for a hitting-set instance.
bool hitting_set_decide(const HittingSetInstance& hs);

/// Clique side V(g), one degree-2 terminal per edge of g, T = independent side.
/// Edge terminals get ids n.. in sorted edge order.
Instance vc_to_sfvs(const Graph& g, int k);

/// Brute-force minimum vertex cover size.
int min_vertex_cover(const Graph& g);

}  // namespace sfvs
