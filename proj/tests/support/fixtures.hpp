#pragma once

#include <initializer_list>
#include <utility>

#include "sfvs/graph.hpp"

namespace sfvs::fixtures {

inline Graph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline Instance instance(int n, std::initializer_list<std::pair<int, int>> edges, VertexSet terminals, int k) {
  Instance inst;
  inst.graph = graph(n, edges);
  normalize(terminals);
  inst.terminals = std::move(terminals);
  inst.budget = k;
  return inst;
}

inline Graph complete(int n) {
  Graph g(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

inline Graph cycle(int n) {
  Graph g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace sfvs::fixtures
