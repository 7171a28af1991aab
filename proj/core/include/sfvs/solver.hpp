#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/trace.hpp"

namespace sfvs {

enum class ReduceStatus { Yes, No, Open };

/// Applies the five reduction rules until none applies. Steps (with their
/// picks) are appended to `trace`; the budget of `inst` is decremented by
/// the picks. `inst.graph` must be chordal.
ReduceStatus reduce_fixpoint(Instance& inst, RuleTrace& trace);

/// One child of a branching rule: delete `deleted`, decrement k by |picked|.
/// `picked` is always a subset of `deleted`.
struct BranchChild {
  std::string label;
  VertexSet deleted;
  VertexSet picked;
};

struct Branching {
  std::string rule;  // "BR1" .. "BR7"
  std::vector<BranchChild> children;
  std::string detail;
};

Instance apply_child(const Instance& inst, const BranchChild& child);

/// Rule `rule` (1..6) on a reduced instance, with the deterministic choice
/// of vertex or clique; empty if the rule does not apply.
std::optional<Branching> find_branching(const Instance& inst, int rule);

struct MegaBranchContext {
  VertexSet c_ell;  // {t, x, y, z}
  VertexSet c_p;
  VertexSet c_x;  // {t_x, x, x1, x2}
  VertexSet c_y;  // {t_y, y, y1, y2}
  Vertex t = -1, x = -1, y = -1, z = -1;
  Vertex t_x = -1, x1 = -1, x2 = -1;
  Vertex t_y = -1, y1 = -1, y2 = -1;
  std::optional<Vertex> shared;  // the vertex of c_x ∩ c_y, relabelled as x1
  bool fallback = false;         // found by the general search, not the deepest-leaf rule
};

/// Context for the seven-way rule inside `component` (a connected component
/// of a reduced instance whose clique tree has at least three nodes, with
/// BR1-BR6 inapplicable). Throws std::logic_error when no context exists.
MegaBranchContext select_mega_context(const Instance& inst, const VertexSet& component);

Branching mega_branching(const MegaBranchContext& ctx);

/// Next move on a reduced instance: a branching, or a small component
/// (clique tree with at most two nodes) to be solved exhaustively.
struct Plan {
  std::optional<Branching> branching;
  std::optional<VertexSet> small_component;
};
Plan plan_step(const Instance& inst);

struct BranchEvent {
  const Instance& parent;
  const Branching& branching;
  int depth;
};
using BranchObserver = std::function<void(const BranchEvent&)>;

struct SolveOptions {
  BranchObserver on_branch;
};

struct SolveResult {
  bool yes = false;
  VertexSet solution;
  std::int64_t nodes_visited = 0;
  int max_depth = 0;
  RuleTrace trace;  // steps along the successful path
};

/// Throws StructureError (with an induced cycle) on non-chordal input.
/// A YES answer is re-verified against `inst` before returning.
SolveResult solve(const Instance& inst, const SolveOptions& options = {});

}  // namespace sfvs
