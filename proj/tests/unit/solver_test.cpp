#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "brute.hpp"
#include "coverage.hpp"
#include "fixtures.hpp"
#include "sfvs/chordal.hpp"
#include "sfvs/graph_algorithms.hpp"
#include "sfvs/instance_io.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/solver.hpp"
#include "targeted.hpp"

namespace sfvs {
namespace {

using fixtures::complete;
using fixtures::instance;

Instance triangle(int k) { return instance(3, {{0, 1}, {1, 2}, {0, 2}}, {0}, k); }

// Central clique on the seven Fano points, one terminal leaf per line.
Instance fano_gadget(int k) {
  const int lines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  Instance inst;
  inst.graph = complete(7);
  for (const auto& line : lines) {
    const Vertex t = inst.graph.add_vertex();
    for (int p : line) inst.graph.add_edge(t, p);
    inst.terminals.push_back(t);
  }
  inst.budget = k;
  return inst;
}

bool closed_neighbourhood_is(const Graph& g, Vertex v, const VertexSet& c) {
  VertexSet closed(g.neighbors(v).begin(), g.neighbors(v).end());
  closed.push_back(v);
  normalize(closed);
  return closed == c;
}

TEST(Reduce, CliqueComponentWithOneTerminal) {
  Instance k4 = instance(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {0}, 1);
  RuleTrace trace;
  EXPECT_EQ(reduce_fixpoint(k4, trace), ReduceStatus::Yes);
  EXPECT_EQ(k4.budget, 0);
  EXPECT_EQ(k4.graph.vertex_count(), 0u);
  ASSERT_FALSE(trace.empty());
  EXPECT_EQ(trace.front().rule, "clique-component");
  EXPECT_EQ(trace.front().picked, (VertexSet{0}));
}

TEST(Reduce, EdgeComponentAndPendantEdge) {
  // Two triangles through terminal 0 keep the instance open; 5-6 is an
  // isolated edge and 7 hangs off 0.
  Instance inst =
      instance(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {2, 3}, {5, 6}}, {0}, 1);
  inst.graph.add_vertex();
  inst.graph.add_edge(7, 0);
  RuleTrace trace;
  reduce_fixpoint(inst, trace);
  EXPECT_FALSE(inst.graph.has_vertex(5));
  EXPECT_FALSE(inst.graph.has_vertex(6));
  EXPECT_FALSE(inst.graph.has_vertex(7));
  const auto removes_edge = std::find_if(trace.begin(), trace.end(), [](const RuleStep& s) { return s.rule == "bridges"; });
  ASSERT_NE(removes_edge, trace.end());
  EXPECT_EQ(removes_edge->deleted_edges, (std::vector<Edge>{{0, 7}}));
  for (const RuleStep& s : trace) {
    if (s.rule == "clique-component" && s.deleted_vertices == VertexSet{5, 6}) EXPECT_TRUE(s.picked.empty());
  }
}

TEST(Branching, Rule2OnTriangle) {
  const auto b = find_branching(triangle(1), 2);
  ASSERT_TRUE(b);
  ASSERT_EQ(b->children.size(), 2u);
  EXPECT_EQ(b->children[0].deleted, (VertexSet{0, 1}));
  EXPECT_EQ(b->children[0].picked, (VertexSet{1}));
  EXPECT_EQ(b->children[1].deleted, (VertexSet{0, 2}));
  EXPECT_EQ(b->children[1].picked, (VertexSet{2}));
  EXPECT_EQ(apply_child(triangle(1), b->children[0]).budget, 0);
}

TEST(Branching, Rule3OnK5) {
  Instance k5;
  k5.graph = complete(5);
  k5.terminals = {2};
  k5.budget = 1;
  const auto b = find_branching(k5, 3);
  ASSERT_TRUE(b);
  ASSERT_EQ(b->children.size(), 3u);
  EXPECT_EQ(b->children[0].picked, (VertexSet{2}));
  const SolveResult r = solve(k5);
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.solution, (VertexSet{2}));
}

TEST(Branching, RulesNeedTheirShapes) {
  const Instance inst = fano_gadget(3);
  for (int rule = 1; rule <= 6; ++rule) EXPECT_FALSE(find_branching(inst, rule)) << rule;
  EXPECT_THROW(find_branching(inst, 7), ContractViolation);
}

TEST(MegaRule, FanoGadgetUsesLeafCliques) {
  Instance inst = fano_gadget(3);
  RuleTrace trace;
  ASSERT_EQ(reduce_fixpoint(inst, trace), ReduceStatus::Open);
  const Plan plan = plan_step(inst);
  ASSERT_TRUE(plan.branching);
  EXPECT_EQ(plan.branching->rule, "BR7");
  const MegaBranchContext ctx = select_mega_context(inst, inst.graph.vertices());
  const VertexSet centre{0, 1, 2, 3, 4, 5, 6};
  for (const VertexSet* c : {&ctx.c_ell, &ctx.c_x, &ctx.c_y}) {
    EXPECT_EQ(c->size(), 4u);
    EXPECT_NE(*c, centre);
  }
  EXPECT_EQ(ctx.c_p, centre);
  EXPECT_FALSE(ctx.fallback);
  // Two Fano lines always meet, so the x and y leaves share a point.
  ASSERT_TRUE(ctx.shared);
  EXPECT_EQ(*ctx.shared, ctx.x1);
  EXPECT_EQ(*ctx.shared, ctx.y2);
  EXPECT_EQ(set_intersection(ctx.c_x, ctx.c_y), (VertexSet{*ctx.shared}));
}

TEST(MegaRule, ChildFive) {
  const MegaBranchContext ctx = select_mega_context(fano_gadget(3), fano_gadget(3).graph.vertices());
  const Branching b = mega_branching(ctx);
  ASSERT_EQ(b.children.size(), 7u);
  EXPECT_EQ(b.children[4].label, "B5");
  EXPECT_EQ(b.children[4].picked, (VertexSet{ctx.x}));
  for (const BranchChild& c : b.children) EXPECT_EQ(c.deleted, c.picked);
}

TEST(MegaRule, SharedVertexShrinksChildFour) {
  MegaBranchContext ctx;
  ctx.t = 0, ctx.x = 1, ctx.y = 2, ctx.z = 3;
  ctx.t_x = 4, ctx.x1 = 5, ctx.x2 = 6;
  ctx.t_y = 7, ctx.y1 = 8, ctx.y2 = 5;
  ctx.shared = 5;
  EXPECT_EQ(mega_branching(ctx).children[3].picked, (VertexSet{0, 5, 6, 8}));
}

TEST(MegaRule, ContextsAreWellFormedOnGadgets) {
  Rng rng(61);
  int seen = 0;
  for (int round = 0; round < 100; ++round) {
    const Instance inst = targeted::mega_gadget(rng, rng.uniform(3, 6));
    SolveOptions options;
    options.on_branch = [&](const BranchEvent& e) {
      if (e.branching.rule != "BR7") return;
      ++seen;
      for (const VertexSet& comp : connected_components(e.parent.graph)) {
        if (build_clique_tree(e.parent.graph.induced(comp)).size() < 3) continue;
        const MegaBranchContext c = select_mega_context(e.parent, comp);
        const Graph& g = e.parent.graph;
        EXPECT_TRUE(closed_neighbourhood_is(g, c.t, c.c_ell));
        EXPECT_TRUE(closed_neighbourhood_is(g, c.t_x, c.c_x));
        EXPECT_TRUE(closed_neighbourhood_is(g, c.t_y, c.c_y));
        EXPECT_TRUE(e.parent.is_terminal(c.t) && e.parent.is_terminal(c.t_x) && e.parent.is_terminal(c.t_y));
        EXPECT_EQ(set_intersection(c.c_ell, c.c_x), (VertexSet{c.x}));
        EXPECT_EQ(set_intersection(c.c_ell, c.c_y), (VertexSet{c.y}));
        VertexSet ell{c.t, c.x, c.y, c.z};
        normalize(ell);
        EXPECT_EQ(ell, c.c_ell);
        break;
      }
    };
    const SolveResult r = solve(inst, options);
    EXPECT_EQ(r.yes, oracle_decide(inst, OracleMode::Chordal).yes);
  }
  EXPECT_GE(seen, 100);
}

TEST(Solve, SmallExamples) {
  SolveResult r = solve(triangle(1));
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.solution.size(), 1u);
  EXPECT_FALSE(solve(triangle(0)).yes);
  const Instance two = instance(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, {0, 3}, 1);
  EXPECT_FALSE(solve(two).yes);
  EXPECT_TRUE(solve(instance(0, {}, {}, 0)).yes);
}

TEST(Solve, RejectsNonChordal) {
  Instance c4;
  c4.graph = fixtures::cycle(4);
  c4.terminals = {0};
  c4.budget = 1;
  EXPECT_THROW(solve(c4), StructureError);
}

TEST(Solve, AgreesWithOracleAndRespectsNodeBound) {
  Rng rng(62);
  for (int round = 0; round < 400; ++round) {
    const Instance inst =
        brute::random_chordal(rng, rng.uniform(3, 16), rng.uniform(2, 6), 0.1 + 0.6 * rng.unit(), rng.uniform(0, 6));
    const SolveResult r = solve(inst);
    ASSERT_EQ(r.yes, oracle_decide(inst, OracleMode::Chordal).yes) << format_instance(inst);
    EXPECT_LE(static_cast<double>(r.nodes_visited), std::ldexp(1.0, inst.budget + 2));
    if (!r.yes) continue;
    VertexSet picks;
    for (const RuleStep& s : r.trace) picks = set_union(picks, s.picked);
    EXPECT_EQ(picks, r.solution);
    Instance rest = inst;
    rest.remove_vertices(r.solution);
    EXPECT_FALSE(brute::has_t_cycle(rest));
    EXPECT_LE(r.solution.size(), static_cast<std::size_t>(inst.budget));
  }
}

TEST(Solve, PlantedInstancesAreYes) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenSpec s;
    s.family = Family::Planted;
    s.n = 20;
    s.k = 3;
    s.seed = seed;
    const SolveResult r = solve(generate(s));
    EXPECT_TRUE(r.yes);
    EXPECT_LE(r.solution.size(), 3u);
  }
}

TEST(Branching, EveryRuleIsExhaustive) {
  Rng rng(63);
  coverage::Tally tally;
  for (int round = 0; round < 300; ++round) {
    coverage::branch_steps(brute::random_chordal(rng, rng.uniform(5, 14), rng.uniform(2, 5), 0.3, rng.uniform(1, 4)),
                           tally, 20);
    coverage::branch_steps(targeted::shared_pair_gadget(rng, rng.uniform(2, 4)), tally, 20);
    if (round < 40) coverage::branch_steps(targeted::mega_gadget(rng, rng.uniform(3, 5)), tally, 24);
  }
  for (const auto& f : tally.failures) ADD_FAILURE() << f;
  for (const char* rule : {"BR1", "BR2", "BR3", "BR4", "BR5", "BR6", "BR7"}) EXPECT_GT(tally.checked[rule], 0) << rule;
}

}  // namespace
}  // namespace sfvs
