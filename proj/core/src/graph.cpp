#include "sfvs/graph.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <string>

namespace sfvs {

Graph::Graph(std::size_t n) : adjacency_(n), alive_(n, 1), vertex_count_(n) {}

void Graph::require_vertex(Vertex v, const char* what) const {
  if (!has_vertex(v)) {
    throw ContractViolation(std::string(what) + ": vertex " + std::to_string(v) +
                            " is not in the graph");
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& na = adjacency_[a];
  const auto& nb = adjacency_[b];
  // search the shorter list
  return na.size() <= nb.size() ? std::binary_search(na.begin(), na.end(), b)
                                : std::binary_search(nb.begin(), nb.end(), a);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  require_vertex(v, "neighbors");
  return adjacency_[v];
}

VertexSet Graph::vertices() const {
  VertexSet out;
  out.reserve(vertex_count_);
  for (std::size_t v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t v = 0; v < alive_.size(); ++v) {
    if (!alive_[v]) continue;
    for (Vertex w : adjacency_[v]) {
      if (w > static_cast<Vertex>(v)) out.push_back({static_cast<Vertex>(v), w});
    }
  }
  return out;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  alive_.push_back(1);
  ++vertex_count_;
  return static_cast<Vertex>(adjacency_.size() - 1);
}

void Graph::add_edge(Vertex a, Vertex b) {
  require_vertex(a, "add_edge");
  require_vertex(b, "add_edge");
  if (a == b) throw ContractViolation("add_edge: self-loop on vertex " + std::to_string(a));
  auto& na = adjacency_[a];
  auto pos = std::lower_bound(na.begin(), na.end(), b);
  if (pos != na.end() && *pos == b) {
    throw ContractViolation("add_edge: duplicate edge " + std::to_string(a) + "-" +
                            std::to_string(b));
  }
  na.insert(pos, b);
  auto& nb = adjacency_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++edge_count_;
}

void Graph::remove_vertex(Vertex v) {
  require_vertex(v, "remove_vertex");
  for (Vertex w : adjacency_[v]) {
    auto& nw = adjacency_[w];
    nw.erase(std::lower_bound(nw.begin(), nw.end(), v));
  }
  edge_count_ -= adjacency_[v].size();
  adjacency_[v].clear();
  adjacency_[v].shrink_to_fit();
  alive_[v] = 0;
  --vertex_count_;
}

void Graph::remove_vertices(std::span<const Vertex> vs) {
  for (Vertex v : vs) require_vertex(v, "remove_vertices");
  for (Vertex v : vs) {
    if (!has_vertex(v)) {
      throw ContractViolation("remove_vertices: vertex " + std::to_string(v) +
                              " listed twice");
    }
    remove_vertex(v);
  }
}

void Graph::remove_edge(Vertex a, Vertex b) {
  if (!has_edge(a, b)) {
    throw ContractViolation("remove_edge: edge " + std::to_string(a) + "-" + std::to_string(b) +
                            " is not in the graph");
  }
  auto& na = adjacency_[a];
  na.erase(std::lower_bound(na.begin(), na.end(), b));
  auto& nb = adjacency_[b];
  nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
  --edge_count_;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph h;
  h.adjacency_.resize(capacity());
  h.alive_.assign(capacity(), 0);
  for (Vertex v : keep) {
    require_vertex(v, "induced");
    h.alive_[v] = 1;
  }
  for (std::size_t v = 0; v < h.alive_.size(); ++v) {
    if (!h.alive_[v]) continue;
    ++h.vertex_count_;
    for (Vertex w : adjacency_[v]) {
      if (h.alive_[w]) h.adjacency_[v].push_back(w);
    }
    h.edge_count_ += h.adjacency_[v].size();
  }
  h.edge_count_ /= 2;
  return h;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> s) {
  Graph h = g;
  h.remove_vertices(s);
  return h;
}

Graph delete_edge(const Graph& g, Edge e) {
  Graph h = g;
  h.remove_edge(e.u, e.v);
  return h;
}

bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  assert(std::is_sorted(a.begin(), a.end()) && std::is_sorted(b.begin(), b.end()));
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  assert(std::is_sorted(a.begin(), a.end()) && std::is_sorted(b.begin(), b.end()));
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  assert(std::is_sorted(a.begin(), a.end()) && std::is_sorted(b.begin(), b.end()));
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

void Instance::remove_vertices(std::span<const Vertex> vs) {
  graph.remove_vertices(vs);
  VertexSet gone(vs.begin(), vs.end());
  normalize(gone);
  terminals = set_difference(terminals, gone);
}

void Instance::validate() const {
  if (!std::is_sorted(terminals.begin(), terminals.end()) ||
      std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end()) {
    throw ContractViolation("instance: terminal set is not a sorted set");
  }
  for (Vertex t : terminals) {
    if (!graph.has_vertex(t)) {
      throw ContractViolation("instance: terminal " + std::to_string(t) + " is not a vertex");
    }
  }
}

}  // namespace sfvs
