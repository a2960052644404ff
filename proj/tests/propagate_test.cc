// Copyright 2026 The upmax Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "upmax/propagate.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "testing.h"
#include "upmax/oracle.h"

namespace upmax {
namespace {

using testing::L;
using testing::MakeFormula;
using testing::MakeWeighted;
using testing::Multiset;

SolverConfig NoRules() {
  SolverConfig c;
  c.enable_r1r2 = c.enable_r3r4 = c.enable_r5r6 = false;
  return c;
}

SolverConfig Only(bool r3r4, bool r5r6) {
  SolverConfig c;
  c.enable_r3r4 = r3r4;
  c.enable_r5r6 = r5r6;
  return c;
}

std::set<int> Dimacs(const std::vector<Literal>& lits) {
  std::set<int> out;
  for (Literal l : lits) out.insert(l.ToDimacs());
  return out;
}

std::multiset<std::set<int>> ClauseSets(const Formula& f,
                                        const std::vector<ClauseId>& ids) {
  std::multiset<std::set<int>> out;
  for (ClauseId id : ids) {
    std::set<int> c;
    for (Literal l : f.Literals(id)) c.insert(l.ToDimacs());
    out.insert(c);
  }
  return out;
}

// Three disjoint inconsistent subsets, found without any rule.
Formula ThreeConflicts() {
  return MakeFormula(5, {{1}, {2}, {3}, {4}, {-1, -2, -3}, {-4}, {5},
                         {-5, -2}, {-5, 2}});
}

// A chain conflict whose R4 transformation exposes a second conflict.
Formula ChainGain() {
  return MakeFormula(4, {{1}, {-1, -2}, {3}, {-3, 2}, {4}, {-1, -4},
                         {-3, -4}});
}

// A triangle conflict whose R5 transformation exposes a second conflict.
Formula TriangleGain() {
  return MakeFormula(4, {{1}, {-1, 2}, {-1, 3}, {-2, -3}, {4}, {1, -4},
                         {-2, -4}, {-3, -4}});
}

// Two units feeding a ternary conflict, with a shorter R3 pattern that the
// propagation order hides.
Formula HiddenPattern() {
  return MakeFormula(4, {{1}, {3}, {4}, {-1, -3, -4}, {-1, -2}, {2}});
}

Formula ForkedGraph() {
  return MakeFormula(8, {{1}, {1}, {-1, 2}, {-1, 3}, {-2, -3, 4}, {5},
                         {-5, 6}, {-5, 7}, {-6, -7, -4}, {-5, 8}});
}

TEST(UnderestimationTest, ThreeDisjointConflicts) {
  for (const SolverConfig& config : {NoRules(), SolverConfig{}}) {
    auto [r, f] = Underestimation(ThreeConflicts(), kTop, config);
    EXPECT_EQ(r.count, 3);
    EXPECT_EQ(r.subsets, 3);
    EXPECT_TRUE(r.applications.empty());
    EXPECT_EQ(Multiset(f), Multiset(ThreeConflicts()));
  }
}

TEST(UnderestimationTest, ChainRulesRaiseTheBound) {
  auto [without, f0] = Underestimation(ChainGain(), kTop, Only(false, false));
  EXPECT_EQ(f0.empty_weight() + without.count, 1);
  auto [with, f1] = Underestimation(ChainGain(), kTop, Only(true, false));
  EXPECT_EQ(f1.empty_weight() + with.count, 2);
  ASSERT_EQ(with.applications.size(), 1u);
  // x1 and x4 clash first: the short chain through ~x1 v ~x4.
  EXPECT_EQ(with.applications[0].rule, RuleId::kR3);
  EXPECT_EQ(CheckEquivalence(ChainGain(), f1).equivalent, true);
}

TEST(UnderestimationTest, TriangleRulesRaiseTheBound) {
  auto [without, f0] = Underestimation(TriangleGain(), kTop, Only(true, false));
  EXPECT_EQ(f0.empty_weight() + without.count, 1);
  auto [with, f1] = Underestimation(TriangleGain(), kTop, Only(true, true));
  EXPECT_EQ(f1.empty_weight() + with.count, 2);
  ASSERT_EQ(with.applications.size(), 1u);
  EXPECT_EQ(with.applications[0].rule, RuleId::kR5);
  EXPECT_TRUE(CheckEquivalence(TriangleGain(), f1).equivalent);
}

TEST(UnderestimationTest, PropagationOrderHidesARulePattern) {
  auto [r, f] = Underestimation(HiddenPattern(), kTop, SolverConfig{});
  EXPECT_EQ(r.count, 1);
  EXPECT_TRUE(r.applications.empty());
  EXPECT_EQ(Multiset(f), Multiset(HiddenPattern()));
}

TEST(UnderestimationTest, StopsAtTheUpperBound) {
  auto [r, f] = Underestimation(ThreeConflicts(), 2, NoRules());
  EXPECT_EQ(r.count, 2);
}

TEST(UnderestimationTest, WeightedSubsetsAddTheirMinimumWeight) {
  const Formula f = MakeWeighted(3, {{{1}, 5}, {{-1, -2, -3}, 3}, {{2}, 4},
                                     {{3}, 7}});
  auto [r, g] = Underestimation(f, kTop, SolverConfig{});
  EXPECT_EQ(r.count, 3);
  EXPECT_EQ(BruteForceOptimum(f).cost, 3);
}

TEST(UnderestimationTest, WeightedRuleSplitsThePattern) {
  const Formula f = MakeWeighted(2, {{{1}, 5}, {{-1, -2}, 2}, {{2}, 3}});
  auto [r, g] = Underestimation(f, kTop, SolverConfig{});
  ASSERT_EQ(r.applications.size(), 1u);
  EXPECT_EQ(r.applications[0].rule, RuleId::kR3);
  EXPECT_EQ(r.applications[0].weight, 2);
  EXPECT_EQ(g.empty_weight(), 2);
  EXPECT_EQ(Multiset(g), Multiset(MakeWeighted(2, {{{}, 2}, {{1, 2}, 2},
                                                   {{1}, 3}, {{2}, 1}})));
  EXPECT_TRUE(CheckEquivalence(f, g).equivalent);
}

TEST(UnderestimationTest, MandatoryPatternCountsAsTop) {
  const Formula f = MakeWeighted(2, {{{1}, kTop}, {{-1, -2}, kTop},
                                     {{2}, kTop}});
  auto [r, g] = Underestimation(f, kTop, SolverConfig{});
  EXPECT_EQ(r.count, kTop);
  EXPECT_TRUE(r.applications.empty());
}

TEST(UnderestimationTest, ComplementaryUnitsFormASubset) {
  auto [r, f] = Underestimation(MakeFormula(1, {{1}, {-1}}), kTop,
                                SolverConfig{});
  EXPECT_EQ(r.count, 1);
}

TEST(ImplicationGraphTest, ForkedGraphMatchesTheDrawing) {
  const ImplicationGraph g = BuildImplicationGraph(ForkedGraph());
  std::vector<int> labels;
  for (const GraphNode& n : g.nodes) labels.push_back(n.literal.ToDimacs());
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<int>{-4, 1, 2, 3, 4, 5, 6, 7, 8}));
  ASSERT_TRUE(g.conflict.has_value());
  EXPECT_EQ(g.conflict->var(), 4);
  // The duplicated unit gives one node.
  EXPECT_EQ(std::count_if(g.nodes.begin(), g.nodes.end(),
                          [](const GraphNode& n) { return n.literal == L(1); }),
            1);
  // Edges: 1->2, 1->3, 2->4, 3->4, 5->6, 5->7, 5->8, 6->-4, 7->-4.
  EXPECT_EQ(g.EdgeCount(), 9u);
  EXPECT_EQ(Dimacs(g.Find(L(4))->Predecessors()), (std::set<int>{2, 3}));
  EXPECT_EQ(Dimacs(g.Find(L(-4))->Predecessors()), (std::set<int>{6, 7}));
  EXPECT_TRUE(g.Find(L(1))->Predecessors().empty());

  const Formula f = ForkedGraph();
  const ConflictAnalysis a = ExtractInconsistentSubset(g);
  EXPECT_EQ(a.clauses.size(), 8u);
  EXPECT_EQ(ClauseSets(f, a.clauses).count({-5, 8}), 0u);
  EXPECT_EQ(a.classification, RuleClass::kNoRule);
  EXPECT_EQ(ClassifyConflict(a, g), RuleClass::kNoRule);
}

// Property: edges only point to later nodes, each node labels a distinct
// literal, and a node has one incoming edge per other clause literal.
TEST(ImplicationGraphTest, StructuralInvariants) {
  Rng rng(5, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng.Below(8));
    Formula f = testing::RandomFormula(rng, n, 4 + rng.Below(20), 3);
    ImplicationGraph g;
    try {
      g = BuildImplicationGraph(f);
    } catch (const PreconditionError&) {
      continue;  // complementary units
    }
    std::set<int> seen;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const GraphNode& node = g.nodes[i];
      ASSERT_TRUE(seen.insert(node.literal.code()).second);
      ASSERT_EQ(node.Predecessors().size(), node.clause_literals.size() - 1);
      for (Literal p : node.Predecessors()) {
        auto it = std::find_if(g.nodes.begin(), g.nodes.begin() + i,
                               [&](const GraphNode& m) { return m.literal == p; });
        ASSERT_NE(it, g.nodes.begin() + i) << "edge from a later node";
      }
    }
    if (g.conflict) {
      ASSERT_TRUE(g.Contains(*g.conflict));
      ASSERT_TRUE(g.Contains(~*g.conflict));
      // The subset is inconsistent: every assignment falsifies a clause.
      const ConflictAnalysis a = ExtractInconsistentSubset(g);
      Formula sub(n);
      for (ClauseId id : a.clauses) sub.AddClause(f.Literals(id));
      ASSERT_GE(testing::NaiveOptimum(sub), 1);
    }
  }
}

TEST(ConflictAnalysisTest, LongChainIsRule4) {
  const Formula f = MakeFormula(6, {{1}, {-1, 2}, {-2, 3}, {-3, 4}, {5},
                                    {-5, 6}, {-6, -4}});
  const ImplicationGraph g = BuildImplicationGraph(f);
  const ConflictAnalysis a = ExtractInconsistentSubset(g);
  // ~x6 is derived before the second unit is popped, so x5 is the clash.
  EXPECT_EQ(a.conflict.var(), 5);
  EXPECT_EQ(Dimacs(a.s_literal).size() + Dimacs(a.s_negation).size(), 7u);
  EXPECT_EQ(a.classification, RuleClass::kRule4);
  EXPECT_EQ(a.pattern.size(), 7u);
  EXPECT_TRUE(a.intersection_chain.empty());
}

TEST(ConflictAnalysisTest, SingleBinaryIsRule3) {
  const Formula f = MakeFormula(2, {{1}, {-1, -2}, {2}});
  const ConflictAnalysis a = ExtractInconsistentSubset(BuildImplicationGraph(f));
  EXPECT_EQ(a.classification, RuleClass::kRule3);
}

TEST(ConflictAnalysisTest, ForkAfterAChainIsRule6) {
  const Formula f = MakeFormula(4, {{1}, {-1, 2}, {-2, 3}, {-2, 4}, {-3, -4}});
  const ImplicationGraph g = BuildImplicationGraph(f);
  const ConflictAnalysis a = ExtractInconsistentSubset(g);
  EXPECT_EQ(a.classification, RuleClass::kRule6);
  EXPECT_EQ(Dimacs(a.intersection_chain), (std::set<int>{1, 2}));
  Formula g2 = f;
  const RuleApplication app = ApplyRule6(
      g2, std::span(a.pattern).first(2), a.pattern[2], a.pattern[3],
      a.pattern[4]);
  EXPECT_EQ(app.rule, RuleId::kR6);
  EXPECT_TRUE(CheckEquivalence(f, g2).equivalent);
}

TEST(ConflictAnalysisTest, ForkRightAtTheUnitIsRule5) {
  const Formula f = MakeFormula(3, {{1}, {-1, 2}, {-1, 3}, {-2, -3}});
  const ConflictAnalysis a = ExtractInconsistentSubset(BuildImplicationGraph(f));
  EXPECT_EQ(a.classification, RuleClass::kRule5);
}

TEST(ConflictAnalysisTest, TernaryClauseIsNoRule) {
  const ConflictAnalysis a =
      ExtractInconsistentSubset(BuildImplicationGraph(HiddenPattern()));
  EXPECT_EQ(a.classification, RuleClass::kNoRule);
  EXPECT_EQ(a.clauses.size(), 4u);
}

TEST(ImplicationGraphTest, Preconditions) {
  EXPECT_THROW(BuildImplicationGraph(MakeFormula(1, {{1}, {-1}})),
               PreconditionError);
  const ImplicationGraph g = BuildImplicationGraph(MakeFormula(2, {{1, 2}}));
  EXPECT_TRUE(g.nodes.empty());
  EXPECT_THROW(ExtractInconsistentSubset(g), PreconditionError);
}

TEST(PropagatorTest, DerivedLiteralsGoFirst) {
  const Formula f = MakeFormula(4, {{1}, {2}, {-1, 3}, {-3, 4}});
  Propagator p;
  std::vector<QueuePop> trace;
  p.set_trace(&trace);
  p.BuildGraph(f);
  std::vector<int> order;
  for (const QueuePop& pop : trace) order.push_back(pop.literal.ToDimacs());
  EXPECT_EQ(order, (std::vector<int>{1, 3, 4, 2}));
  EXPECT_FALSE(trace[0].from_q2);
  EXPECT_TRUE(trace[1].from_q2);
}

// Property: the bound never exceeds the optimum, and rule applications keep
// the formula equivalent.
TEST(UnderestimationProperty, AdmissibleAndEquivalent) {
  Rng rng(17, 0);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(8));
    const Formula f =
        testing::RandomFormula(rng, n, 3 + rng.Below(30), 3, 1 + trial % 3);
    const Weight opt = BruteForceOptimum(f).cost;
    for (Variant v : kAllVariants) {
      auto [r, g] = Underestimation(f, kTop, SolverConfig::ForVariant(v));
      ASSERT_LE(g.empty_weight() + r.count, opt) << "trial " << trial;
      ASSERT_TRUE(CheckEquivalence(f, g).equivalent) << "trial " << trial;
      g.Audit();
      for (const RuleApplication& app : r.applications) {
        ASSERT_LT(app.mass_after, app.mass_before);
      }
    }
  }
}

}  // namespace
}  // namespace upmax
