#pragma once

#include <optional>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Edges lying on no cycle (iterative DFS low-point computation), sorted.
std::vector<Edge> find_bridges(const Graph& g);

/// First triangle through a terminal, scanning terminals and then their
/// neighbour pairs in ascending order. The returned triple is sorted.
std::optional<Triangle> find_t_triangle(const Instance& inst);

/// Every triangle meeting the terminal set, each listed once (sorted triples).
std::vector<Triangle> all_t_triangles(const Instance& inst);

/// True iff no cycle of the graph passes through a terminal. Works on any
/// graph: a vertex lies on a cycle iff it is incident with a non-bridge edge.
bool is_t_forest(const Instance& inst);

/// A cycle through some terminal, as a vertex sequence (first vertex is the
/// terminal, consecutive vertices adjacent, last adjacent to first).
std::optional<std::vector<Vertex>> find_t_cycle(const Instance& inst);

/// BFS shortest path from `from` to `to` inside `g`; empty if unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to);

}  // namespace sfvs
