#include "sfvs/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sfvs/graph_algorithms.hpp"

namespace sfvs {

namespace {

// Maximum cardinality search; returns vertices in visit order. Ties are
// broken towards the lowest identifier.
std::vector<Vertex> mcs_visit_order(const Graph& g) {
  const auto verts = g.vertices();
  std::vector<int> weight(g.capacity(), 0);
  std::vector<char> visited(g.capacity(), 0);
  std::vector<std::set<Vertex>> buckets(verts.size() + 1);
  for (Vertex v : verts) buckets[0].insert(v);
  std::vector<Vertex> order;
  order.reserve(verts.size());
  int top = 0;
  for (std::size_t step = 0; step < verts.size(); ++step) {
    while (top > 0 && buckets[top].empty()) --top;
    Vertex v = *buckets[top].begin();
    buckets[top].erase(buckets[top].begin());
    visited[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (visited[w]) continue;
      buckets[weight[w]].erase(w);
      ++weight[w];
      buckets[weight[w]].insert(w);
      top = std::max(top, weight[w]);
    }
  }
  return order;
}

std::vector<int> positions(const Graph& g, const EliminationOrdering& peo) {
  std::vector<int> pos(g.capacity(), -1);
  for (std::size_t i = 0; i < peo.size(); ++i) pos[peo[i]] = static_cast<int>(i);
  return pos;
}

VertexSet later_neighbors(const Graph& g, const std::vector<int>& pos, Vertex v) {
  VertexSet out;
  for (Vertex w : g.neighbors(v)) {
    if (pos[w] > pos[v]) out.push_back(w);
  }
  return out;
}

// Earliest later neighbour, or -1.
Vertex peo_parent(const std::vector<int>& pos, const VertexSet& later) {
  Vertex best = -1;
  for (Vertex w : later) {
    if (best == -1 || pos[w] < pos[best]) best = w;
  }
  return best;
}

}  // namespace

bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& peo) {
  if (peo.size() != g.vertex_count()) return false;
  std::vector<char> seen(g.capacity(), 0);
  for (Vertex v : peo) {
    if (!g.has_vertex(v) || seen[v]) return false;
    seen[v] = 1;
  }
  auto pos = positions(g, peo);
  for (Vertex v : peo) {
    auto later = later_neighbors(g, pos, v);
    Vertex p = peo_parent(pos, later);
    for (Vertex w : later) {
      if (w != p && !g.has_edge(p, w)) return false;
    }
  }
  return true;
}

std::optional<EliminationOrdering> chordality_order(const Graph& g) {
  auto order = mcs_visit_order(g);
  std::reverse(order.begin(), order.end());
  if (!is_perfect_elimination_ordering(g, order)) return std::nullopt;
  return order;
}

bool is_chordal(const Graph& g) { return chordality_order(g).has_value(); }

std::optional<std::vector<Vertex>> find_induced_long_cycle(const Graph& g) {
  if (is_chordal(g)) return std::nullopt;
  for (Vertex v : g.vertices()) {
    auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        Vertex u = nv[i], w = nv[j];
        if (g.has_edge(u, w)) continue;
        // u and w joined outside N[v] except themselves close an induced cycle
        VertexSet removed(nv.begin(), nv.end());
        removed.push_back(v);
        normalize(removed);
        removed = set_difference(removed, VertexSet{u, w});
        Graph h = delete_vertices(g, removed);
        auto path = shortest_path(h, u, w);
        if (path.empty()) continue;
        std::vector<Vertex> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  throw ContractViolation("find_induced_long_cycle: no cycle found in a non-chordal graph");
}

std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrdering& peo) {
  if (!is_perfect_elimination_ordering(g, peo)) {
    throw ContractViolation("maximal_cliques: not a perfect elimination ordering");
  }
  auto pos = positions(g, peo);
  std::vector<std::size_t> later_size(g.capacity(), 0);
  std::vector<char> dominated(g.capacity(), 0);
  for (Vertex v : peo) {
    auto later = later_neighbors(g, pos, v);
    later_size[v] = later.size();
  }
  // C(v) = {v} + later(v) is contained in C(u) exactly when v is u's parent
  // and later(u) = {v} + later(v).
  for (Vertex u : peo) {
    auto later = later_neighbors(g, pos, u);
    Vertex p = peo_parent(pos, later);
    if (p != -1 && later_size[u] == later_size[p] + 1) dominated[p] = 1;
  }
  std::vector<VertexSet> out;
  for (Vertex v : peo) {
    if (dominated[v]) continue;
    VertexSet c = later_neighbors(g, pos, v);
    c.push_back(v);
    normalize(c);
    out.push_back(std::move(c));
  }
  return out;
}

bool is_simplicial(const Graph& g, Vertex v) {
  auto nv = g.neighbors(v);
  return is_clique(g, std::span<const Vertex>(nv.data(), nv.size()));
}

CliqueTree build_clique_tree(const Graph& g) {
  if (connected_components(g).size() > 1) {
    throw ContractViolation("build_clique_tree: graph is disconnected");
  }
  auto peo = chordality_order(g);
  if (!peo) throw ContractViolation("build_clique_tree: graph is not chordal");
  CliqueTree tree;
  tree.nodes = maximal_cliques(g, *peo);
  // maximal_cliques lists by elimination position; discovery order is the reverse
  std::reverse(tree.nodes.begin(), tree.nodes.end());
  tree.adjacency.resize(tree.nodes.size());
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    int best = 0;
    std::size_t best_size = 0;
    for (std::size_t j = 0; j < i; ++j) {
      std::size_t s = set_intersection(tree.nodes[i], tree.nodes[j]).size();
      if (s > best_size) {
        best_size = s;
        best = static_cast<int>(j);
      }
    }
    int ii = static_cast<int>(i);
    tree.edges.emplace_back(best, ii);
    tree.adjacency[best].push_back(ii);
    tree.adjacency[ii].push_back(best);
  }
  for (auto& a : tree.adjacency) std::sort(a.begin(), a.end());
  return tree;
}

std::optional<std::string> clique_tree_violation(const Graph& g, const CliqueTree& tree) {
  const int n = static_cast<int>(tree.size());
  if (g.vertex_count() == 0) {
    if (n == 0) return std::nullopt;
    return "nonempty tree for empty graph";
  }
  if (tree.edges.size() + 1 != tree.nodes.size()) return "edge count is not nodes - 1";
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : tree.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) return "tree edge out of range";
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++count;
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (count != n) return "tree edges are not connected";
  }
  for (int i = 0; i < n; ++i) {
    const auto& c = tree.nodes[i];
    if (c.empty() || !std::is_sorted(c.begin(), c.end())) return "node is empty or unsorted";
    for (Vertex v : c) {
      if (!g.has_vertex(v)) return "node contains a non-vertex";
    }
    if (!is_clique(g, c)) return "node " + std::to_string(i) + " is not a clique";
    for (Vertex w : g.vertices()) {
      if (contains(c, w)) continue;
      bool all = std::all_of(c.begin(), c.end(), [&](Vertex v) { return g.has_edge(v, w); });
      if (all) return "node " + std::to_string(i) + " is not maximal";
    }
    for (int j = 0; j < i; ++j) {
      if (tree.nodes[j] == c) return "clique listed twice";
    }
  }
  for (const Edge& e : g.edges()) {
    bool covered = std::any_of(tree.nodes.begin(), tree.nodes.end(), [&](const VertexSet& c) {
      return contains(c, e.u) && contains(c, e.v);
    });
    if (!covered) return "edge not covered by any node";
  }
  // nodes containing each vertex form a nonempty connected subtree
  for (Vertex v : g.vertices()) {
    std::vector<int> holders;
    for (int i = 0; i < n; ++i) {
      if (contains(tree.nodes[i], v)) holders.push_back(i);
    }
    if (holders.empty()) return "vertex " + std::to_string(v) + " in no node";
    std::vector<char> seen(n, 0);
    std::vector<int> stack{holders[0]};
    seen[holders[0]] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++count;
      for (int y : adj[x]) {
        if (!seen[y] && contains(tree.nodes[y], v)) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (count != holders.size()) {
      return "nodes containing vertex " + std::to_string(v) + " are not connected";
    }
  }
  return std::nullopt;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  auto verts = g.vertices();
  std::stable_sort(verts.begin(), verts.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  const std::size_t n = verts.size();
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(verts[i]) >= i) m = i + 1;  // 1-based: d_i >= i - 1
  }
  long long head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) {
    (i < m ? head : tail) += static_cast<long long>(g.degree(verts[i]));
  }
  const long long mm = static_cast<long long>(m);
  if (head != mm * (mm - 1) + tail) return std::nullopt;
  SplitPartition sp;
  sp.clique_side.assign(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(m));
  sp.independent_side.assign(verts.begin() + static_cast<std::ptrdiff_t>(m), verts.end());
  normalize(sp.clique_side);
  normalize(sp.independent_side);
  return sp;
}

std::optional<std::pair<Edge, Edge>> find_2k2(const Graph& g) {
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      if (g.has_edge(a.u, b.u) || g.has_edge(a.u, b.v) || g.has_edge(a.v, b.u) ||
          g.has_edge(a.v, b.v)) {
        continue;
      }
      return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool is_highlighted(const Graph& g, const SplitPartition& sp, Edge e) {
  if (!contains(sp.clique_side, e.u) || !contains(sp.clique_side, e.v)) {
    throw ContractViolation("is_highlighted: edge endpoints must lie on the clique side");
  }
  for (Vertex x : g.neighbors(e.u)) {
    if (contains(sp.independent_side, x) && g.has_edge(x, e.v)) return true;
  }
  return false;
}

EliminationOrdering require_chordal(const Graph& g) {
  if (auto peo = chordality_order(g)) return *peo;
  throw StructureError("graph is not chordal", *find_induced_long_cycle(g));
}

SplitPartition require_split(const Graph& g) {
  if (auto sp = split_partition(g)) return *sp;
  if (auto cycle = find_induced_long_cycle(g)) {
    throw StructureError("graph is not split (induced cycle)", *cycle);
  }
  auto pair = find_2k2(g);
  if (!pair) throw std::logic_error("require_split: no certificate for a non-split graph");
  throw StructureError("graph is not split (2K2)",
                       {pair->first.u, pair->first.v, pair->second.u, pair->second.v});
}

}  // namespace sfvs
