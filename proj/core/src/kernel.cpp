#include "sfvs/kernel.hpp"

#include <algorithm>

#include "sfvs/graph_algorithms.hpp"

namespace sfvs {

namespace {

const Graph& graph_of(const KernelState& s) { return s.instance.graph; }

void drop_vertices(KernelState& s, const VertexSet& vs) {
  s.instance.remove_vertices(vs);
  s.partition.clique_side = set_difference(s.partition.clique_side, vs);
  s.partition.independent_side = set_difference(s.partition.independent_side, vs);
}

// Independent-side neighbours of a clique-side vertex.
VertexSet n1(const KernelState& s, Vertex v) {
  VertexSet out;
  for (Vertex w : graph_of(s).neighbors(v)) {
    if (contains(s.partition.independent_side, w)) out.push_back(w);
  }
  return out;
}

RuleStep delete_vertices_step(KernelState& s, const char* rule, VertexSet vs, VertexSet picked,
                              int delta_k) {
  drop_vertices(s, vs);
  s.instance.budget += delta_k;
  RuleStep step;
  step.rule = rule;
  step.deleted_vertices = std::move(vs);
  step.picked = std::move(picked);
  step.delta_k = delta_k;
  s.trace.push_back(step);
  return step;
}

}  // namespace

KernelState KernelState::from(const Instance& inst) {
  inst.validate();
  KernelState s;
  s.partition = require_split(inst.graph);
  s.instance = inst;
  return s;
}

BipartiteView bipartite_around(Vertex v, const KernelState& state) {
  if (!contains(state.partition.clique_side, v)) {
    throw ContractViolation("bipartite_around: vertex is not on the clique side");
  }
  const Graph& g = graph_of(state);
  BipartiteView b;
  b.side_q = n1(state, v);
  for (Vertex x : b.side_q) {
    for (Vertex a : g.neighbors(x)) {
      if (a != v) b.side_p.push_back(a);
    }
  }
  normalize(b.side_p);
  for (Vertex a : b.side_p) {
    for (Vertex x : g.neighbors(a)) {
      if (contains(b.side_q, x)) b.edges.emplace_back(a, x);
    }
  }
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

std::optional<OutcomeKind> rule_yes_no(const KernelState& state, RuleStep* step) {
  const Instance& inst = state.instance;
  const Graph& g = inst.graph;
  const int k = inst.budget;
  const auto& kside = state.partition.clique_side;
  auto fire = [&](OutcomeKind kind, const char* why) {
    if (step) {
      *step = RuleStep{};
      step->rule = "RR1";
      step->detail = why;
    }
    return kind;
  };
  if (inst.terminals.empty()) return fire(OutcomeKind::TrivialYes, "no terminals");
  if (k < 0) return fire(OutcomeKind::TrivialNo, "negative budget");
  const bool has_tri = find_t_triangle(inst).has_value();
  if (k == 0 && has_tri) return fire(OutcomeKind::TrivialNo, "zero budget with a T-triangle");
  if (!has_tri) return fire(OutcomeKind::TrivialYes, "no T-triangle");
  if (kside.size() <= static_cast<std::size_t>(k) + 1) {
    return fire(OutcomeKind::TrivialYes, "clique side at most k+1");
  }
  if (kside.size() == static_cast<std::size_t>(k) + 2) {
    for (std::size_t i = 0; i < kside.size(); ++i) {
      for (std::size_t j = i + 1; j < kside.size(); ++j) {
        if (!is_highlighted(g, state.partition, Edge::make(kside[i], kside[j]))) {
          return fire(OutcomeKind::TrivialYes, "clique side k+2 with a plain edge");
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleStep> rule_delete_isolates(KernelState& state) {
  for (Vertex v : graph_of(state).vertices()) {
    if (graph_of(state).degree(v) == 0) return delete_vertices_step(state, "RR2", {v}, {}, 0);
  }
  return std::nullopt;
}

std::optional<RuleStep> rule_nonterminal_no_terminal_neighbor(KernelState& state) {
  const Graph& g = graph_of(state);
  for (Vertex v : g.vertices()) {
    if (state.instance.is_terminal(v)) continue;
    auto nv = g.neighbors(v);
    bool seen_terminal = std::any_of(nv.begin(), nv.end(),
                                     [&](Vertex w) { return state.instance.is_terminal(w); });
    if (!seen_terminal) return delete_vertices_step(state, "RR3", {v}, {}, 0);
  }
  return std::nullopt;
}

std::optional<RuleStep> rule_delete_bridges(KernelState& state) {
  auto bridges = find_bridges(graph_of(state));
  if (bridges.empty()) return std::nullopt;
  Edge e = bridges.front();
  state.instance.graph.remove_edge(e.u, e.v);
  RuleStep step;
  step.rule = "RR4";
  step.deleted_edges = {e};
  state.trace.push_back(step);
  return step;
}

std::optional<RuleStep> rule_pick_clique_terminals(KernelState& state) {
  for (Vertex t : state.partition.clique_side) {
    if (state.instance.is_terminal(t)) return delete_vertices_step(state, "RR5", {t}, {t}, -1);
  }
  return std::nullopt;
}

std::optional<RuleStep> rule_max_matching(KernelState& state) {
  const std::size_t need = static_cast<std::size_t>(state.k()) + 1;
  for (Vertex v : state.partition.clique_side) {
    auto b = bipartite_around(v, state);
    if (b.side_q.size() < need) continue;
    if (maximum_matching(b).size() >= need) return delete_vertices_step(state, "RR6", {v}, {v}, -1);
  }
  return std::nullopt;
}

std::optional<RuleStep> rule_degree_bound(KernelState& state) {
  for (Vertex v : state.partition.clique_side) {
    if (n1(state, v).size() <= static_cast<std::size_t>(state.k())) continue;
    auto b = bipartite_around(v, state);
    auto r = find_matching_expansion_with_witness(b, 1);
    Vertex w = *r.unsaturated_witness;
    state.instance.graph.remove_edge(v, w);
    RuleStep step;
    step.rule = "RR7";
    step.deleted_edges = {Edge::make(v, w)};
    state.trace.push_back(step);
    return step;
  }
  return std::nullopt;
}

ApproxPartition build_approx_partition(const KernelState& state) {
  const Graph& g = graph_of(state);
  const auto& kside = state.partition.clique_side;
  const auto& iside = state.partition.independent_side;
  const std::size_t limit = 3 * static_cast<std::size_t>(std::max(state.k(), 0));
  ApproxPartition ap;
  std::vector<char> taken(g.capacity(), 0);
  for (Vertex v : iside) {
    if (ap.s_tilde.size() > limit) break;
    Vertex pick[2];
    int found = 0;
    // any two clique-side neighbours close a triangle with v
    for (Vertex w : g.neighbors(v)) {
      if (taken[w]) continue;
      pick[found++] = w;
      if (found == 2) break;
    }
    if (found < 2) continue;
    for (Vertex u : {v, pick[0], pick[1]}) {
      taken[u] = 1;
      ap.s_tilde.push_back(u);
    }
  }
  normalize(ap.s_tilde);
  if (ap.s_tilde.size() > limit) {
    ap.exceeds_budget = true;
    return ap;
  }
  ap.k_s = set_intersection(kside, ap.s_tilde);
  ap.i_s = set_intersection(iside, ap.s_tilde);
  for (Vertex u : kside) {
    if (taken[u]) continue;
    bool inside = true;
    for (Vertex w : g.neighbors(u)) {
      if (contains(iside, w) && !taken[w]) {
        inside = false;
        break;
      }
    }
    (inside ? ap.k0 : ap.k1).push_back(u);
  }
  for (Vertex x : iside) {
    if (taken[x]) continue;
    auto nx = g.neighbors(x);
    bool inside = std::all_of(nx.begin(), nx.end(), [&](Vertex w) { return contains(ap.k_s, w); });
    (inside ? ap.i0 : ap.i1).push_back(x);
  }
  return ap;
}

std::optional<RuleStep> rule_bound_k0(KernelState& state, const ApproxPartition& ap) {
  if (ap.k0.size() < 2 * ap.i_s.size() || ap.i_s.empty()) return std::nullopt;
  const Graph& g = graph_of(state);
  BipartiteView h;
  h.side_p = ap.i_s;
  h.side_q = ap.k0;
  for (Vertex x : ap.i_s) {
    for (Vertex a : g.neighbors(x)) {
      if (contains(ap.k0, a)) h.edges.emplace_back(x, a);
    }
  }
  std::sort(h.edges.begin(), h.edges.end());
  auto r = find_expansion(h, 2);
  auto step = delete_vertices_step(state, "RR9a", r.x, r.x, -static_cast<int>(r.x.size()));
  step.detail = "expansion into " + std::to_string(r.y.size()) + " clique-side vertices";
  state.trace.back().detail = step.detail;
  return step;
}

std::optional<RuleStep> rule_bound_k1(KernelState& state, const ApproxPartition& ap) {
  if (ap.k1.size() < 2 * ap.s_tilde.size() || ap.s_tilde.empty()) return std::nullopt;
  const Graph& g = graph_of(state);
  BipartiteView b;
  b.side_p = ap.s_tilde;
  b.side_q = ap.k1;
  for (Vertex u : ap.s_tilde) {
    const bool clique_side = contains(ap.k_s, u);
    for (Vertex v : g.neighbors(u)) {
      if (!contains(ap.k1, v)) continue;
      if (clique_side) {
        // keep uv only when some w in I1 closes the triangle u v w
        bool witnessed = false;
        for (Vertex w : g.neighbors(v)) {
          if (contains(ap.i1, w) && g.has_edge(u, w)) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) continue;
      }
      b.edges.emplace_back(u, v);
    }
  }
  std::sort(b.edges.begin(), b.edges.end());
  for (Vertex q : b.side_q) {
    bool isolated = std::none_of(b.edges.begin(), b.edges.end(),
                                 [&](const auto& e) { return e.second == q; });
    if (isolated) {
      throw std::logic_error("rule_bound_k1: clique-side vertex " + std::to_string(q) +
                             " is isolated in the auxiliary graph");
    }
  }
  auto r = find_expansion(b, 2);
  auto step = delete_vertices_step(state, "RR9b", r.x, r.x, -static_cast<int>(r.x.size()));
  step.detail = "expansion into " + std::to_string(r.y.size()) + " clique-side vertices";
  state.trace.back().detail = step.detail;
  return step;
}

KernelOutcome kernelize(const Instance& inst, const KernelObserver& observer) {
  KernelState state = KernelState::from(inst);
  auto finish = [&](OutcomeKind kind) {
    KernelOutcome out;
    out.kind = kind;
    out.instance = state.instance;
    out.partition = state.partition;
    out.trace = std::move(state.trace);
    return out;
  };
  using Rule = std::optional<RuleStep> (*)(KernelState&);
  static constexpr Rule simple_rules[] = {
      rule_delete_isolates,       rule_nonterminal_no_terminal_neighbor,
      rule_delete_bridges,        rule_pick_clique_terminals,
      rule_max_matching,          rule_degree_bound,
  };
  for (;;) {
    RuleStep verdict_step;
    if (auto verdict = rule_yes_no(state, &verdict_step)) {
      state.trace.push_back(verdict_step);
      if (observer) observer({state.instance, verdict_step, nullptr, verdict});
      return finish(*verdict);
    }
    std::optional<Instance> before;
    if (observer) before = state.instance;
    std::optional<RuleStep> step;
    for (Rule rule : simple_rules) {
      if ((step = rule(state))) break;
    }
    if (!step) {
      auto ap = build_approx_partition(state);
      if (ap.exceeds_budget) {
        RuleStep no;
        no.rule = "RR8";
        no.detail = "greedy packing exceeds 3k";
        state.trace.push_back(no);
        if (observer) observer({state.instance, no, nullptr, OutcomeKind::TrivialNo});
        return finish(OutcomeKind::TrivialNo);
      }
      if (!(step = rule_bound_k0(state, ap))) step = rule_bound_k1(state, ap);
    }
    if (!step) return finish(OutcomeKind::Reduced);
    if (observer) observer({*before, *step, &state.instance, std::nullopt});
  }
}

}  // namespace sfvs
