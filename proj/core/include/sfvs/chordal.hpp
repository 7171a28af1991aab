#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

/// Perfect elimination ordering: order[0] is eliminated first.
using EliminationOrdering = std::vector<Vertex>;

/// Maximum cardinality search followed by the standard PEO check.
/// Empty when g is not chordal.
std::optional<EliminationOrdering> chordality_order(const Graph& g);

bool is_chordal(const Graph& g);

/// True iff the neighbours of v that come later in `peo` form a clique, for
/// every v. Also checks that `peo` is a permutation of the live vertices.
bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& peo);

/// An induced cycle of length >= 4 (consecutive vertices adjacent, no chords),
/// or empty if g is chordal.
std::optional<std::vector<Vertex>> find_induced_long_cycle(const Graph& g);

/// Maximal cliques of a chordal graph, each sorted, listed in order of the
/// elimination position of their generating vertex. Throws ContractViolation
/// when `peo` is not a perfect elimination ordering of g.
std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrdering& peo);

bool is_simplicial(const Graph& g, Vertex v);

struct CliqueTree {
  std::vector<VertexSet> nodes;
  std::vector<std::pair<int, int>> edges;  // (earlier, later) node indices
  std::vector<std::vector<int>> adjacency;

  std::size_t size() const { return nodes.size(); }
  bool is_leaf(int i) const { return adjacency[i].size() <= 1; }
};

/// Clique tree of a connected chordal graph. Cliques are taken in maximum
/// cardinality search discovery order and each is attached to an earlier
/// clique of largest intersection (lowest index on ties).
CliqueTree build_clique_tree(const Graph& g);

/// Direct check of the clique tree invariants against g. Returns a
/// description of the first violation, or empty when the tree is valid.
std::optional<std::string> clique_tree_violation(const Graph& g, const CliqueTree& tree);

struct SplitPartition {
  VertexSet clique_side;
  VertexSet independent_side;
};

/// Hammer and Simeone degree-sequence test. Vertices are ranked by
/// (degree descending, id ascending) and the clique side is the prefix.
std::optional<SplitPartition> split_partition(const Graph& g);

/// Two edges ab, cd inducing 2K2 in a chordal non-split graph.
std::optional<std::pair<Edge, Edge>> find_2k2(const Graph& g);

/// Some vertex of the independent side is adjacent to both ends of e.
bool is_highlighted(const Graph& g, const SplitPartition& sp, Edge e);

/// Input graph lacks the structure an operation requires. `certificate`
/// holds an induced cycle (non-chordal) or two edges forming 2K2 as the
/// vertex sequence a b c d (chordal but not split).
class StructureError : public std::invalid_argument {
 public:
  StructureError(const std::string& msg, std::vector<Vertex> certificate)
      : std::invalid_argument(msg), certificate(std::move(certificate)) {}
  std::vector<Vertex> certificate;
};

/// Throws StructureError with an induced long cycle unless g is chordal.
EliminationOrdering require_chordal(const Graph& g);

/// Throws StructureError unless g is a split graph; returns its partition.
SplitPartition require_split(const Graph& g);

}  // namespace sfvs
