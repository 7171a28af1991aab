#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sfvs/chordal.hpp"
#include "sfvs/expansion.hpp"
#include "sfvs/graph.hpp"
#include "sfvs/trace.hpp"

namespace sfvs {

struct KernelState {
  Instance instance;
  SplitPartition partition;  // fixed input partition restricted to live vertices
  RuleTrace trace;

  static KernelState from(const Instance& inst);
  int k() const { return instance.budget; }
};

struct ApproxPartition {
  VertexSet s_tilde;
  VertexSet k_s;
  VertexSet i_s;
  VertexSet k0;
  VertexSet k1;
  VertexSet i0;
  VertexSet i1;
  bool exceeds_budget = false;  // greedy packing passed 3k
};

enum class OutcomeKind { Reduced, TrivialYes, TrivialNo };

struct KernelOutcome {
  OutcomeKind kind = OutcomeKind::Reduced;
  Instance instance;  // meaningful when Reduced
  SplitPartition partition;
  RuleTrace trace;
};

/// N2(v) on the P side, N1(v) on the Q side, and the K-I edges between them.
BipartiteView bipartite_around(Vertex v, const KernelState& state);

/// Each rule below applies itself once if applicable and returns the step.
/// They assume lower-numbered rules are inapplicable.
std::optional<OutcomeKind> rule_yes_no(const KernelState& state, RuleStep* step = nullptr);
std::optional<RuleStep> rule_delete_isolates(KernelState& state);
std::optional<RuleStep> rule_nonterminal_no_terminal_neighbor(KernelState& state);
std::optional<RuleStep> rule_delete_bridges(KernelState& state);
std::optional<RuleStep> rule_pick_clique_terminals(KernelState& state);
std::optional<RuleStep> rule_max_matching(KernelState& state);
std::optional<RuleStep> rule_degree_bound(KernelState& state);
ApproxPartition build_approx_partition(const KernelState& state);
std::optional<RuleStep> rule_bound_k0(KernelState& state, const ApproxPartition& ap);
std::optional<RuleStep> rule_bound_k1(KernelState& state, const ApproxPartition& ap);

/// Observer hook: called after every step with the instance it was applied
/// to. `after` is null when the step ended the run with `verdict`.
struct KernelEvent {
  const Instance& before;
  const RuleStep& step;
  const Instance* after;
  std::optional<OutcomeKind> verdict;
};
using KernelObserver = std::function<void(const KernelEvent&)>;

/// First-match loop over all nine rules. Throws StructureError on non-split input.
KernelOutcome kernelize(const Instance& inst, const KernelObserver& observer = {});

}  // namespace sfvs
