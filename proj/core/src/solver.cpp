#include "sfvs/solver.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "sfvs/chordal.hpp"
#include "sfvs/graph_algorithms.hpp"
#include "sfvs/oracle.hpp"

namespace sfvs {
namespace {

std::string join(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

VertexSet neighbor_set(const Graph& g, Vertex v) {
  auto n = g.neighbors(v);
  return VertexSet(n.begin(), n.end());
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = neighbor_set(g, v);
  s.push_back(v);
  normalize(s);
  return s;
}

VertexSet terminals_in(const Instance& inst, const VertexSet& s) {
  return set_intersection(s, inst.terminals);
}

BranchChild pick_child(std::string label, VertexSet picked) {
  normalize(picked);
  return {std::move(label), picked, picked};
}

// v is simplicial with exactly d neighbours.
bool simplicial_of_degree(const Graph& g, Vertex v, std::size_t d) {
  return g.degree(v) == d && is_simplicial(g, v);
}

std::optional<Branching> rule1(const Instance& inst) {
  const Graph& g = inst.graph;
  for (Vertex v : g.vertices()) {
    if (inst.is_terminal(v)) continue;
    const VertexSet nt = terminals_in(inst, neighbor_set(g, v));
    if (nt.size() != 1) continue;
    const Vertex t = nt[0];
    const VertexSet common = set_intersection(neighbor_set(g, v), neighbor_set(g, t));
    if (common.empty()) throw std::logic_error("BR1: vertex " + std::to_string(v) + " lies on no terminal triangle");
    const Vertex x = common[0];
    Branching b{"BR1", {pick_child("t", {t}), pick_child("x", {x})},
                "v=" + std::to_string(v) + " t=" + std::to_string(t) + " x=" + std::to_string(x)};
    return b;
  }
  return std::nullopt;
}

std::optional<Branching> rule2(const Instance& inst) {
  const Graph& g = inst.graph;
  for (Vertex v : g.vertices()) {
    if (!simplicial_of_degree(g, v, 2)) continue;
    const Vertex a = g.neighbors(v)[0];
    const Vertex b = g.neighbors(v)[1];
    Branching br{"BR2",
                 {{"a", VertexSet{std::min(v, a), std::max(v, a)}, {a}},
                  {"b", VertexSet{std::min(v, b), std::max(v, b)}, {b}}},
                 "v=" + std::to_string(v)};
    return br;
  }
  return std::nullopt;
}

std::optional<Branching> rule3(const Instance& inst) {
  const Graph& g = inst.graph;
  auto cliques = maximal_cliques(g, require_chordal(g));
  std::sort(cliques.begin(), cliques.end());
  for (const VertexSet& q : cliques) {
    if (q.size() < 5) continue;
    const VertexSet ts = terminals_in(inst, q);
    if (ts.empty()) continue;
    const Vertex t = ts[0];
    VertexSet rest = set_difference(q, {t});
    Branching b{"BR3",
                {pick_child("t", {t}), pick_child("ab", {rest[0], rest[1]}),
                 pick_child("cd", {rest[2], rest[3]})},
                "Q=" + join(q)};
    return b;
  }
  return std::nullopt;
}

std::optional<Branching> rule4(const Instance& inst) {
  const Graph& g = inst.graph;
  for (Vertex v : g.vertices()) {
    if (inst.is_terminal(v) || !simplicial_of_degree(g, v, 3)) continue;
    const VertexSet nv = neighbor_set(g, v);
    const VertexSet ts = terminals_in(inst, nv);
    if (ts.empty()) throw std::logic_error("BR4: simplicial clique of " + std::to_string(v) + " has no terminal");
    const Vertex t = ts[0];
    const VertexSet xy = set_difference(nv, {t});
    VertexSet del = xy;
    del.push_back(v);
    normalize(del);
    Branching b{"BR4", {pick_child("t", {t}), {"xy", del, xy}}, "v=" + std::to_string(v)};
    return b;
  }
  return std::nullopt;
}

std::optional<Branching> rule5(const Instance& inst) {
  const Graph& g = inst.graph;
  for (Vertex t : inst.terminals) {
    if (!simplicial_of_degree(g, t, 3)) continue;
    const VertexSet nt = neighbor_set(g, t);
    const VertexSet ts = terminals_in(inst, nt);
    if (ts.empty()) continue;
    const Vertex x = ts[0];
    const VertexSet yz = set_difference(nt, {x});
    const Vertex y = yz[0];
    const Vertex z = yz[1];
    Branching b{"BR5",
                {pick_child("xy", {x, y}), pick_child("yz", {y, z}), pick_child("xz", {x, z})},
                "t=" + std::to_string(t) + " x=" + std::to_string(x)};
    return b;
  }
  return std::nullopt;
}

std::optional<Branching> rule6(const Instance& inst) {
  const Graph& g = inst.graph;
  for (Vertex t : inst.terminals) {
    if (!simplicial_of_degree(g, t, 3)) continue;
    const VertexSet nt = neighbor_set(g, t);
    const int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (const auto& p : pairs) {
      const Vertex x = nt[p[0]];
      const Vertex y = nt[p[1]];
      const Vertex z = nt[p[2]];
      VertexSet common = set_intersection(neighbor_set(g, x), neighbor_set(g, y));
      common = set_difference(terminals_in(inst, common), {t});
      if (common.empty()) continue;
      const Vertex t2 = common[0];
      Branching b{"BR6",
                  {pick_child("xy", {x, y}), pick_child("yz", {y, z}), pick_child("xz", {x, z}),
                   pick_child("tt'", {t, t2})},
                  "t=" + std::to_string(t) + " t'=" + std::to_string(t2)};
      return b;
    }
  }
  return std::nullopt;
}

// Candidate leaf clique {t, x, y, z}: four vertices with a terminal whose
// closed neighbourhood is the clique.
std::optional<Vertex> simplicial_terminal(const Instance& inst, const VertexSet& c) {
  if (c.size() != 4) return std::nullopt;
  for (Vertex t : terminals_in(inst, c)) {
    if (closed_neighborhood(inst.graph, t) == c) return t;
  }
  return std::nullopt;
}

// Fills the x/y side of the context from clique `c` meeting c_ell in `v`.
bool side_from(const Instance& inst, const VertexSet& c, const MegaBranchContext& ctx, Vertex v,
               Vertex& tv, Vertex& v1, Vertex& v2) {
  if (c.size() != 4 || set_intersection(c, ctx.c_ell) != VertexSet{v}) return false;
  const VertexSet ts = set_difference(terminals_in(inst, c), {v});
  if (ts.empty()) return false;
  tv = ts[0];
  const VertexSet rest = set_difference(c, {std::min(tv, v), std::max(tv, v)});
  v1 = rest[0];
  v2 = rest[1];
  return true;
}

// Tries to complete the context with c_x = cx and c_y = cy.
std::optional<MegaBranchContext> try_pair(const Instance& inst, MegaBranchContext ctx,
                                          const VertexSet& cx, const VertexSet& cy) {
  const VertexSet ix = set_intersection(cx, ctx.c_ell);
  const VertexSet iy = set_intersection(cy, ctx.c_ell);
  if (ix.size() != 1 || iy.size() != 1 || ix == iy || contains(ix, ctx.t) || contains(iy, ctx.t)) {
    return std::nullopt;
  }
  const VertexSet shared = set_intersection(cx, cy);
  if (shared.size() > 1) return std::nullopt;
  ctx.x = ix[0];
  ctx.y = iy[0];
  VertexSet txy{ctx.t, ctx.x, ctx.y};
  normalize(txy);
  ctx.z = set_difference(ctx.c_ell, txy)[0];
  if (!side_from(inst, cx, ctx, ctx.x, ctx.t_x, ctx.x1, ctx.x2)) return std::nullopt;
  if (!side_from(inst, cy, ctx, ctx.y, ctx.t_y, ctx.y1, ctx.y2)) return std::nullopt;
  ctx.c_x = cx;
  ctx.c_y = cy;
  if (!shared.empty()) {
    const Vertex s = shared[0];
    ctx.shared = s;
    if (ctx.x2 == s) std::swap(ctx.x1, ctx.x2);
    if (ctx.y1 == s) std::swap(ctx.y1, ctx.y2);  // keep the private vertex as y1
  }
  return ctx;
}

struct Rooted {
  std::vector<int> parent;
  std::vector<int> depth;
};

Rooted root_tree(const CliqueTree& tree, int root) {
  Rooted r{std::vector<int>(tree.size(), -1), std::vector<int>(tree.size(), -1)};
  std::queue<int> q;
  q.push(root);
  r.depth[root] = 0;
  while (!q.empty()) {
    const int a = q.front();
    q.pop();
    for (int b : tree.adjacency[a]) {
      if (r.depth[b] != -1) continue;
      r.depth[b] = r.depth[a] + 1;
      r.parent[b] = a;
      q.push(b);
    }
  }
  return r;
}

// Deepest-leaf selection: root at the lowest internal node, C_ell a deepest
// leaf, C_x and C_y leaf children of its parent.
std::optional<MegaBranchContext> deepest_leaf_context(const Instance& inst, const CliqueTree& tree) {
  int root = -1;
  for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
    if (!tree.is_leaf(i)) {
      root = i;
      break;
    }
  }
  if (root < 0) return std::nullopt;
  const Rooted r = root_tree(tree, root);
  int ell = -1;
  for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
    if (tree.is_leaf(i) && (ell < 0 || r.depth[i] > r.depth[ell])) ell = i;
  }
  MegaBranchContext base;
  base.c_ell = tree.nodes[ell];
  const auto t = simplicial_terminal(inst, base.c_ell);
  if (!t) return std::nullopt;
  base.t = *t;
  const int p = r.parent[ell];
  base.c_p = tree.nodes[p];
  if (set_difference(base.c_ell, base.c_p) != VertexSet{base.t}) return std::nullopt;
  std::vector<int> kids;
  for (int c : tree.adjacency[p]) {
    if (c != ell && c != r.parent[p] && tree.is_leaf(c)) kids.push_back(c);
  }
  for (std::size_t i = 0; i < kids.size(); ++i) {
    for (std::size_t j = i + 1; j < kids.size(); ++j) {
      if (auto ctx = try_pair(inst, base, tree.nodes[kids[i]], tree.nodes[kids[j]])) return ctx;
    }
  }
  return std::nullopt;
}

// Any leaf C_ell, any two other maximal cliques of size four meeting it in
// single distinct vertices. The seven branches stay exhaustive for this
// wider choice.
std::optional<MegaBranchContext> general_context(const Instance& inst, const CliqueTree& tree) {
  const int n = static_cast<int>(tree.size());
  for (int ell = 0; ell < n; ++ell) {
    if (!tree.is_leaf(ell)) continue;
    MegaBranchContext base;
    base.c_ell = tree.nodes[ell];
    const auto t = simplicial_terminal(inst, base.c_ell);
    if (!t) continue;
    base.t = *t;
    base.c_p = tree.nodes[tree.adjacency[ell].front()];
    base.fallback = true;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == ell || j == ell || i == j) continue;
        if (auto ctx = try_pair(inst, base, tree.nodes[i], tree.nodes[j])) return ctx;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ReduceStatus reduce_fixpoint(Instance& inst, RuleTrace& trace) {
  while (true) {
    if (inst.budget < 0) {
      trace.push_back({"trivial-no", {}, {}, {}, 0, "negative budget"});
      return ReduceStatus::No;
    }
    const auto tri = find_t_triangle(inst);
    if (!tri) {
      trace.push_back({"trivial-yes", {}, {}, {}, 0, ""});
      return ReduceStatus::Yes;
    }
    if (inst.budget == 0) {
      trace.push_back({"trivial-no", {}, {}, {}, 0,
                       "terminal triangle " + join({tri->a, tri->b, tri->c})});
      return ReduceStatus::No;
    }

    bool changed = false;
    for (const VertexSet& q : connected_components(inst.graph)) {
      if (!is_clique(inst.graph, q)) continue;
      const VertexSet ts = terminals_in(inst, q);
      VertexSet picked;
      std::string detail = "case 1";
      if (q.size() > 2 && !ts.empty()) {
        if (q.size() - ts.size() <= 2) {
          picked.assign(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(q.size() - 2));
          detail = "case 2";
        } else {
          picked = ts;
          detail = "case 3";
        }
      }
      inst.remove_vertices(q);
      inst.budget -= static_cast<int>(picked.size());
      trace.push_back({"clique-component", q, {}, picked, -static_cast<int>(picked.size()), detail});
      changed = true;
    }
    if (changed) continue;

    VertexSet lonely;
    for (Vertex v : inst.graph.vertices()) {
      if (inst.is_terminal(v)) continue;
      const auto nb = inst.graph.neighbors(v);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return inst.is_terminal(w); })) {
        lonely.push_back(v);
      }
    }
    if (!lonely.empty()) {
      inst.remove_vertices(lonely);
      trace.push_back({"no-terminal-neighbour", lonely, {}, {}, 0, ""});
      continue;
    }

    const std::vector<Edge> bridges = find_bridges(inst.graph);
    if (!bridges.empty()) {
      for (const Edge& e : bridges) inst.graph.remove_edge(e.u, e.v);
      trace.push_back({"bridges", {}, bridges, {}, 0, ""});
      continue;
    }
    return ReduceStatus::Open;
  }
}

Instance apply_child(const Instance& inst, const BranchChild& child) {
  Instance out = inst;
  out.remove_vertices(child.deleted);
  out.budget -= static_cast<int>(child.picked.size());
  return out;
}

std::optional<Branching> find_branching(const Instance& inst, int rule) {
  switch (rule) {
    case 1: return rule1(inst);
    case 2: return rule2(inst);
    case 3: return rule3(inst);
    case 4: return rule4(inst);
    case 5: return rule5(inst);
    case 6: return rule6(inst);
    default: throw ContractViolation("find_branching: rule must be in 1..6");
  }
}

MegaBranchContext select_mega_context(const Instance& inst, const VertexSet& component) {
  const Graph g = inst.graph.induced(component);
  const CliqueTree tree = build_clique_tree(g);
  if (tree.size() < 3) throw ContractViolation("select_mega_context: clique tree has fewer than three nodes");
  if (auto ctx = deepest_leaf_context(inst, tree)) return *ctx;
  if (auto ctx = general_context(inst, tree)) return *ctx;
  throw std::logic_error("select_mega_context: no leaf configuration in component " + join(component));
}

Branching mega_branching(const MegaBranchContext& c) {
  Branching b;
  b.rule = "BR7";
  b.detail = "C_ell=" + join(c.c_ell) + " C_x=" + join(c.c_x) + " C_y=" + join(c.c_y) +
             (c.shared ? " shared=" + std::to_string(*c.shared) : "") + (c.fallback ? " fallback" : "");
  b.children.push_back(pick_child("B1", {c.t, c.t_x, c.t_y}));
  b.children.push_back(pick_child("B2", {c.t, c.t_x, c.y1, c.y2}));
  b.children.push_back(pick_child("B3", {c.t, c.x1, c.x2, c.t_y}));
  // With a shared vertex the union has four elements.
  b.children.push_back(pick_child("B4", {c.t, c.x1, c.x2, c.y1, c.y2}));
  b.children.push_back(pick_child("B5", {c.x}));
  b.children.push_back(pick_child("B6", {c.y, c.z, c.t_x}));
  b.children.push_back(pick_child("B7", {c.y, c.z, c.x1, c.x2}));
  return b;
}

Plan plan_step(const Instance& inst) {
  for (int rule = 1; rule <= 6; ++rule) {
    if (auto b = find_branching(inst, rule)) return {std::move(b), std::nullopt};
  }
  for (const VertexSet& comp : connected_components(inst.graph)) {
    const CliqueTree tree = build_clique_tree(inst.graph.induced(comp));
    if (tree.size() <= 2) return {std::nullopt, comp};
    return {mega_branching(select_mega_context(inst, comp)), std::nullopt};
  }
  throw std::logic_error("plan_step: empty graph is not reduced");
}

namespace {

struct Search {
  const SolveOptions& options;
  std::int64_t nodes = 0;
  int max_depth = 0;

  std::optional<RuleTrace> run(Instance inst, int depth) {
    ++nodes;
    max_depth = std::max(max_depth, depth);
    RuleTrace local;
    while (true) {
      const ReduceStatus st = reduce_fixpoint(inst, local);
      if (st == ReduceStatus::Yes) return local;
      if (st == ReduceStatus::No) return std::nullopt;
      const Plan plan = plan_step(inst);
      if (plan.small_component) {
        const VertexSet& comp = *plan.small_component;
        Instance part{inst.graph.induced(comp), terminals_in(inst, comp), inst.budget};
        const int cap = std::min<int>(inst.budget, static_cast<int>(comp.size()));
        const auto sol = brute_force_solution(part, cap, OracleMode::Chordal);
        if (!sol) return std::nullopt;
        inst.remove_vertices(comp);
        inst.budget -= static_cast<int>(sol->size());
        local.push_back({"small-component", comp, {}, *sol, -static_cast<int>(sol->size()), ""});
        continue;
      }
      const Branching& b = *plan.branching;
      if (options.on_branch) options.on_branch({inst, b, depth});
      for (const BranchChild& child : b.children) {
        if (inst.budget < static_cast<int>(child.picked.size())) continue;
        auto sub = run(apply_child(inst, child), depth + 1);
        if (!sub) continue;
        local.push_back({b.rule + ":" + child.label, child.deleted, {}, child.picked,
                         -static_cast<int>(child.picked.size()), b.detail});
        local.insert(local.end(), sub->begin(), sub->end());
        return local;
      }
      return std::nullopt;
    }
  }
};

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& options) {
  inst.validate();
  require_chordal(inst.graph);
  Search search{options};
  auto trace = search.run(inst, 0);
  SolveResult r;
  r.nodes_visited = search.nodes;
  r.max_depth = search.max_depth;
  if (!trace) return r;
  r.yes = true;
  for (const RuleStep& s : *trace) r.solution = set_union(r.solution, s.picked);
  r.trace = std::move(*trace);
  if (static_cast<int>(r.solution.size()) > inst.budget || !is_solution(inst, r.solution)) {
    throw std::logic_error("solve: assembled solution " + join(r.solution) + " fails verification");
  }
  return r;
}

}  // namespace sfvs
