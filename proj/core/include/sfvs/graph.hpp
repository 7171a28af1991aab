#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfvs {

/// Stable vertex identifier. Identifiers are assigned once (at parse or
/// generation time) and never reused after deletion.
using Vertex = std::int32_t;

/// Sorted vector of distinct vertices; the canonical vertex-set value type.
using VertexSet = std::vector<Vertex>;

/// Raised when a caller breaks an operation's precondition (deleting an
/// absent vertex, passing an invalid elimination ordering, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Mutable undirected simple graph over stable integer identifiers.
///
/// Vertex identifiers live in `[0, capacity())`; deleted identifiers stay
/// dead. Neighbourhoods are kept as sorted vectors so that every traversal
/// visits vertices in ascending identifier order.
class Graph {
 public:
  Graph() = default;
  /// Graph on vertices `0..n-1` with no edges.
  explicit Graph(std::size_t n);

  std::size_t capacity() const { return adjacency_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool has_vertex(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < alive_.size() && alive_[v] != 0;
  }
  bool has_edge(Vertex a, Vertex b) const;

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// Live vertices in ascending order.
  VertexSet vertices() const;
  /// All edges, sorted.
  std::vector<Edge> edges() const;

  /// Appends a fresh isolated vertex and returns its identifier.
  Vertex add_vertex();
  /// Throws ContractViolation on self-loops, duplicates, or dead endpoints.
  void add_edge(Vertex a, Vertex b);

  void remove_vertex(Vertex v);
  void remove_vertices(std::span<const Vertex> vs);
  void remove_edge(Vertex a, Vertex b);

  /// Subgraph induced by `keep` (identifiers preserved).
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void require_vertex(Vertex v, const char* what) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<char> alive_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// Copying counterparts of the in-place mutators.
Graph delete_vertices(const Graph& g, std::span<const Vertex> s);
Graph delete_edge(const Graph& g, Edge e);

/// True iff every pair in `vs` is adjacent.
bool is_clique(const Graph& g, std::span<const Vertex> vs);

/// Sorted-set helpers used throughout the library.
bool contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
void normalize(VertexSet& s);

/// A problem instance (G; T; k). The budget may go negative after
/// decrements; such instances are NO instances.
struct Instance {
  Graph graph;
  VertexSet terminals;
  int budget = 0;

  bool is_terminal(Vertex v) const { return contains(terminals, v); }

  /// Deletes `vs` from the graph and the terminal set. The budget is untouched.
  void remove_vertices(std::span<const Vertex> vs);
  void remove_vertex(Vertex v) { remove_vertices(std::span<const Vertex>(&v, 1)); }

  /// Throws ContractViolation unless terminals are live vertices.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace sfvs
