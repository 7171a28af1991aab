#include "sfvs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>

#include "sfvs/chordal.hpp"
#include "sfvs/graph_algorithms.hpp"

namespace sfvs {
namespace {

using Mask = std::uint64_t;

// Dense copy of an instance over at most 64 live vertices.
struct Dense {
  VertexSet ids;             // index -> vertex id
  std::vector<Mask> adj;     // adjacency masks by index
  Mask terminals = 0;
  std::vector<Mask> triangles;  // T-triangles as masks (chordal mode)
};

Dense make_dense(const Instance& inst) {
  Dense d;
  d.ids = inst.graph.vertices();
  if (d.ids.size() > 64) throw GuardError("brute force limited to 64 vertices");
  d.adj.assign(d.ids.size(), 0);
  auto index_of = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(d.ids.begin(), d.ids.end(), v) - d.ids.begin());
  };
  for (std::size_t i = 0; i < d.ids.size(); ++i) {
    for (Vertex w : inst.graph.neighbors(d.ids[i])) d.adj[i] |= Mask{1} << index_of(w);
    if (inst.is_terminal(d.ids[i])) d.terminals |= Mask{1} << i;
  }
  for (const Triangle& tr : all_t_triangles(inst)) {
    d.triangles.push_back((Mask{1} << index_of(tr.a)) | (Mask{1} << index_of(tr.b)) |
                          (Mask{1} << index_of(tr.c)));
  }
  return d;
}

bool hits_all_triangles(const Dense& d, Mask s) {
  return std::all_of(d.triangles.begin(), d.triangles.end(),
                     [s](Mask tr) { return (tr & s) != 0; });
}

// A terminal t survives on a cycle iff two of its neighbours are connected
// in the remaining graph without t.
bool no_t_cycle(const Dense& d, Mask s) {
  const int n = static_cast<int>(d.adj.size());
  const Mask all = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
  const Mask alive = all & ~s;
  for (Mask tm = d.terminals & alive; tm != 0; tm &= tm - 1) {
    const int t = std::countr_zero(tm);
    const Mask rest = alive & ~(Mask{1} << t);
    Mask nbrs = d.adj[t] & rest;
    while (nbrs != 0) {
      const int start = std::countr_zero(nbrs);
      Mask seen = Mask{1} << start;
      Mask frontier = seen;
      while (frontier != 0) {
        const int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const Mask fresh = d.adj[u] & rest & ~seen;
        seen |= fresh;
        frontier |= fresh;
      }
      if (std::popcount(seen & d.adj[t] & rest) >= 2) return false;
      nbrs &= ~seen;
    }
  }
  return true;
}

// Lexicographically first subset of the given size passing `ok`.
template <class Pred>
std::optional<Mask> first_subset(int n, int size, Pred ok) {
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : pick) m |= Mask{1} << i;
    if (ok(m)) return m;
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

OracleMode resolve(const Instance& inst, OracleMode mode) {
  if (mode != OracleMode::Auto) return mode;
  return is_chordal(inst.graph) ? OracleMode::Chordal : OracleMode::General;
}

}  // namespace

std::optional<VertexSet> brute_force_solution(const Instance& inst, int max_size,
                                              OracleMode mode) {
  mode = resolve(inst, mode);
  const Dense d = make_dense(inst);
  const int n = static_cast<int>(d.ids.size());
  auto ok = [&](Mask s) {
    return mode == OracleMode::Chordal ? hits_all_triangles(d, s) : no_t_cycle(d, s);
  };
  for (int size = 0; size <= std::min(max_size, n); ++size) {
    if (auto m = first_subset(n, size, ok)) {
      VertexSet out;
      for (Mask r = *m; r != 0; r &= r - 1) out.push_back(d.ids[std::countr_zero(r)]);
      return out;
    }
  }
  return std::nullopt;
}

OracleResult oracle_decide(const Instance& inst, OracleMode mode, std::size_t max_n) {
  if (inst.graph.vertex_count() > max_n) {
    throw GuardError("oracle guard: " + std::to_string(inst.graph.vertex_count()) +
                     " vertices exceeds limit " + std::to_string(max_n));
  }
  OracleResult r;
  if (inst.budget < 0) return r;
  r.solution = brute_force_solution(inst, inst.budget, mode);
  r.yes = r.solution.has_value();
  return r;
}

std::optional<std::vector<Vertex>> surviving_t_cycle(const Instance& inst, const VertexSet& s) {
  Instance rest = inst;
  rest.remove_vertices(s);
  return find_t_cycle(rest);
}

bool is_solution(const Instance& inst, const VertexSet& s) {
  Instance rest = inst;
  rest.remove_vertices(s);
  return is_t_forest(rest);
}

HittingSetInstance export_3hs(const Instance& inst) {
  require_chordal(inst.graph);
  HittingSetInstance hs;
  hs.universe = inst.graph.vertices();
  hs.budget = inst.budget;
  for (const Triangle& tr : all_t_triangles(inst)) hs.sets.push_back({tr.a, tr.b, tr.c});
  return hs;
}

std::string format_3hs(const HittingSetInstance& hs) {
  std::ostringstream out;
  out << "p 3hs " << hs.universe.size() << ' ' << hs.sets.size() << ' ' << hs.budget << '\n';
  for (const VertexSet& s : hs.sets) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i] + 1;
    out << '\n';
  }
  return out.str();
}

bool hitting_set_decide(const HittingSetInstance& hs) {
  if (hs.budget < 0) return false;
  if (hs.universe.size() > 64) throw GuardError("hitting set brute force limited to 64 elements");
  auto index_of = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(hs.universe.begin(), hs.universe.end(), v) -
                            hs.universe.begin());
  };
  std::vector<Mask> sets;
  for (const VertexSet& s : hs.sets) {
    Mask m = 0;
    for (Vertex v : s) m |= Mask{1} << index_of(v);
    sets.push_back(m);
  }
  const int n = static_cast<int>(hs.universe.size());
  auto ok = [&](Mask s) {
    return std::all_of(sets.begin(), sets.end(), [s](Mask m) { return (m & s) != 0; });
  };
  for (int size = 0; size <= std::min(hs.budget, n); ++size) {
    if (first_subset(n, size, ok)) return true;
  }
  return false;
}

Instance vc_to_sfvs(const Graph& g, int k) {
  const VertexSet vs = g.vertices();
  const std::vector<Edge> es = g.edges();
  const auto n = static_cast<Vertex>(g.capacity());
  Instance inst;
  inst.graph = Graph(static_cast<std::size_t>(n) + es.size());
  inst.budget = k;
  for (Vertex v = 0; v < n; ++v) {
    if (!g.has_vertex(v)) inst.graph.remove_vertex(v);
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) inst.graph.add_edge(vs[i], vs[j]);
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Vertex u = n + static_cast<Vertex>(i);
    inst.graph.add_edge(u, es[i].u);
    inst.graph.add_edge(u, es[i].v);
    inst.terminals.push_back(u);
  }
  return inst;
}

int min_vertex_cover(const Graph& g) {
  const VertexSet vs = g.vertices();
  if (vs.size() > 64) throw GuardError("vertex cover brute force limited to 64 vertices");
  const int n = static_cast<int>(vs.size());
  std::vector<Mask> edges;
  for (const Edge& e : g.edges()) {
    const auto a = std::lower_bound(vs.begin(), vs.end(), e.u) - vs.begin();
    const auto b = std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin();
    edges.push_back((Mask{1} << a) | (Mask{1} << b));
  }
  auto ok = [&](Mask s) {
    return std::all_of(edges.begin(), edges.end(), [s](Mask m) { return (m & s) != 0; });
  };
  for (int size = 0; size <= n; ++size) {
    if (first_subset(n, size, ok)) return size;
  }
  return n;
}

}  // namespace sfvs
