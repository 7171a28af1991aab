#include "sfvs/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace sfvs {

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.capacity(), 0);
  std::vector<Vertex> stack;
  for (Vertex s : g.vertices()) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Edge> find_bridges(const Graph& g) {
  const std::size_t cap = g.capacity();
  std::vector<int> disc(cap, -1), low(cap, 0);
  std::vector<Edge> bridges;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (Vertex root : g.vertices()) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (w == f.parent) continue;  // simple graph: exactly one parent edge
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (done.parent != -1) {
          low[done.parent] = std::min(low[done.parent], low[done.v]);
          if (low[done.v] > disc[done.parent]) bridges.push_back(Edge::make(done.parent, done.v));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::optional<Triangle> find_t_triangle(const Instance& inst) {
  const Graph& g = inst.graph;
  for (Vertex t : inst.terminals) {
    auto nt = g.neighbors(t);
    for (std::size_t i = 0; i < nt.size(); ++i) {
      for (std::size_t j = i + 1; j < nt.size(); ++j) {
        if (g.has_edge(nt[i], nt[j])) {
          Vertex tri[3] = {t, nt[i], nt[j]};
          std::sort(tri, tri + 3);
          return Triangle{tri[0], tri[1], tri[2]};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Triangle> all_t_triangles(const Instance& inst) {
  const Graph& g = inst.graph;
  std::vector<Triangle> out;
  for (Vertex t : inst.terminals) {
    auto nt = g.neighbors(t);
    for (std::size_t i = 0; i < nt.size(); ++i) {
      for (std::size_t j = i + 1; j < nt.size(); ++j) {
        if (!g.has_edge(nt[i], nt[j])) continue;
        Vertex tri[3] = {t, nt[i], nt[j]};
        std::sort(tri, tri + 3);
        out.push_back({tri[0], tri[1], tri[2]});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Terminal incident with a non-bridge edge, together with that edge's other end.
std::optional<std::pair<Vertex, Vertex>> terminal_on_cycle(const Instance& inst) {
  const Graph& g = inst.graph;
  if (inst.terminals.empty()) return std::nullopt;
  auto bridges = find_bridges(g);
  for (Vertex t : inst.terminals) {
    for (Vertex w : g.neighbors(t)) {
      if (!std::binary_search(bridges.begin(), bridges.end(), Edge::make(t, w))) {
        return std::make_pair(t, w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_t_forest(const Instance& inst) { return !terminal_on_cycle(inst).has_value(); }

std::optional<std::vector<Vertex>> find_t_cycle(const Instance& inst) {
  auto hit = terminal_on_cycle(inst);
  if (!hit) return std::nullopt;
  auto [t, w] = *hit;
  Graph h = inst.graph;
  h.remove_edge(t, w);
  // w .. t path avoiding the edge closes the cycle t -> w -> ... -> t
  auto path = shortest_path(h, w, t);
  std::vector<Vertex> cycle;
  cycle.push_back(t);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) cycle.push_back(path[i]);
  return cycle;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to) {
  std::vector<Vertex> pred(g.capacity(), -2);
  std::deque<Vertex> queue{from};
  pred[from] = -1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (Vertex w : g.neighbors(v)) {
      if (pred[w] == -2) {
        pred[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (pred[to] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = pred[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace sfvs
