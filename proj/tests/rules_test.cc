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

#include "upmax/rules.h"

#include <gtest/gtest.h>

#include "schemas.h"
#include "testing.h"
#include "upmax/oracle.h"

namespace upmax {
namespace {

using testing::L;
using testing::MakeFormula;
using testing::MakeWeighted;
using testing::Multiset;

TEST(Rule1Test, MergesAlmostCommonClauses) {
  Formula f = MakeFormula(3, {{1, 2, 3}, {-1, 2, 3}});
  const RuleApplication app = ApplyRule1(f, 0, 1);
  EXPECT_EQ(Multiset(f), Multiset(MakeFormula(3, {{2, 3}})));
  EXPECT_EQ(app.rule, RuleId::kR1);
  EXPECT_FALSE(app.produced_empty);
  EXPECT_EQ(app.mass_before, 6);
  EXPECT_EQ(app.mass_after, 2);
}

TEST(Rule1Test, RejectsOtherShapes) {
  Formula f = MakeFormula(3, {{1, 2}, {-1, -2}, {1, 3}, {1, 2, 3}});
  EXPECT_THROW(ApplyRule1(f, 0, 1), PatternMismatch);  // two clashes
  EXPECT_THROW(ApplyRule1(f, 0, 2), PatternMismatch);  // no clash
  EXPECT_THROW(ApplyRule1(f, 0, 3), PatternMismatch);  // lengths differ
  EXPECT_THROW(ApplyRule1(f, 0, 0), PatternMismatch);
  EXPECT_EQ(f.num_active_clauses(), 4);
}

TEST(Rule2Test, ComplementaryUnitsBecomeEmpty) {
  Formula f = MakeFormula(1, {{1}, {-1}});
  ApplyRule2(f, 0, 1);
  EXPECT_EQ(f.empty_weight(), 1);
  EXPECT_EQ(f.num_active_clauses(), 0);
  Formula g = MakeFormula(2, {{1}, {2}});
  EXPECT_THROW(ApplyRule2(g, 0, 1), PatternMismatch);
}

TEST(Rule3Test, ProducesEmptyAndBinary) {
  Formula f = MakeFormula(2, {{1}, {-1, -2}, {2}});
  const RuleApplication app = ApplyRule3(f, 0, 1, 2);
  EXPECT_EQ(Multiset(f), Multiset(MakeFormula(2, {{}, {1, 2}})));
  EXPECT_TRUE(app.produced_empty);
  EXPECT_EQ(TraceLine(app), "R3 consumed=0,1,2 produced=[]," +
                                std::to_string(app.produced[0]));
}

TEST(Rule4Test, ChainOfTwoBinaries) {
  // The chain of the worked chain example, with its R4 output.
  Formula f = MakeFormula(4, {{1}, {-1, -2}, {3}, {-3, 2}, {4}, {-1, -4},
                              {-3, -4}});
  // Chain: x3, ~x3 v x2, ~x2 v ~x1, ~x1 closing unit is x1 reversed.
  const ClauseId chain[] = {2, 3, 1, 0};
  ApplyRule4(f, chain);
  EXPECT_EQ(Multiset(f),
            Multiset(MakeFormula(4, {{}, {3, -2}, {2, 1}, {4}, {-1, -4},
                                     {-3, -4}})));
}

TEST(Rule4Test, RejectsBrokenChains) {
  Formula f = MakeFormula(4, {{1}, {-1, 2}, {-3, 4}, {-4}});
  const ClauseId broken[] = {0, 1, 2, 3};
  EXPECT_THROW(ApplyRule4(f, broken), PatternMismatch);
  const ClauseId short_chain[] = {0, 3};
  EXPECT_THROW(ApplyRule4(f, short_chain), PatternMismatch);
  EXPECT_EQ(f.num_active_clauses(), 4);
}

TEST(Rule5Test, TriangleBecomesTwoTernaries) {
  Formula f = MakeFormula(3, {{1}, {-1, 2}, {-1, 3}, {-2, -3}});
  ApplyRule5(f, 0, 1, 2, 3);
  EXPECT_EQ(Multiset(f),
            Multiset(MakeFormula(3, {{}, {1, -2, -3}, {-1, 2, 3}})));
}

TEST(Rule6Test, ChainThenTriangle) {
  Formula f = MakeFormula(4, {{1}, {-1, 2}, {-2, 3}, {-2, 4}, {-3, -4}});
  const ClauseId chain[] = {0, 1};
  ApplyRule6(f, chain, 2, 3, 4);
  EXPECT_EQ(Multiset(f), Multiset(MakeFormula(4, {{}, {1, -2}, {2, -3, -4},
                                                  {-2, 3, 4}})));
  Formula g = MakeFormula(4, {{1}, {-1, 2}, {-2, 3}, {-2, 4}, {-3, 4}});
  EXPECT_THROW(ApplyRule6(g, chain, 2, 3, 4), PatternMismatch);
}

TEST(WeightedRuleTest, MinimumWeightIsSplitOff) {
  Formula f = MakeWeighted(2, {{{1}, 4}, {{-1, -2}, 2}, {{2}, 9}});
  const RuleApplication app = ApplyRule3(f, 0, 1, 2);
  EXPECT_EQ(app.weight, 2);
  EXPECT_EQ(Multiset(f), Multiset(MakeWeighted(2, {{{}, 2}, {{1, 2}, 2},
                                                   {{1}, 2}, {{2}, 7}})));
}

TEST(WeightedRuleTest, MandatoryClausesKeepTop) {
  Formula f = MakeWeighted(2, {{{1}, kTop}, {{-1, -2}, 3}, {{2}, kTop}});
  const Formula before = f;
  ApplyRule3(f, 0, 1, 2);
  EXPECT_EQ(Multiset(f), Multiset(MakeWeighted(2, {{{}, 3}, {{1, 2}, 3},
                                                   {{1}, kTop}, {{2}, kTop}})));
  EXPECT_TRUE(CheckEquivalence(before, f).equivalent);
}

TEST(WeightedRuleTest, AllMandatoryPatternThrows) {
  Formula f = MakeWeighted(1, {{{1}, kTop}, {{-1}, kTop}});
  EXPECT_THROW(ApplyRule2(f, 0, 1), MandatoryConflict);
  EXPECT_EQ(f.num_active_clauses(), 2);
  // The exhaustive pass leaves such pairs alone.
  EXPECT_EQ(ApplyRule2Exhaustively(f), 0);
}

TEST(ExhaustiveTest, Rule1CascadesToUnits) {
  // (1 v 2), (1 v ~2) -> (1); (~1 v 3), (~1 v ~3) -> (~1); then R2.
  Formula f = MakeFormula(3, {{1, 2}, {1, -2}, {-1, 3}, {-1, -3}});
  int r1 = 0, r2 = 0;
  auto count = [&](const Formula&, const RuleApplication& app) {
    (app.rule == RuleId::kR1 ? r1 : r2)++;
  };
  ApplyRule1Exhaustively(f, 2, count);
  ApplyRule2Exhaustively(f, count);
  EXPECT_EQ(r1, 2);
  EXPECT_EQ(r2, 1);
  EXPECT_EQ(f.empty_weight(), 1);
  EXPECT_EQ(f.num_active_clauses(), 0);
}

TEST(ExhaustiveTest, Rule1RespectsMaxLength) {
  Formula f = MakeFormula(3, {{1, 2, 3}, {-1, 2, 3}});
  EXPECT_EQ(ApplyRule1Exhaustively(f, 2), 0);
  EXPECT_EQ(ApplyRule1Exhaustively(f, 3), 1);
}

TEST(ExhaustiveTest, WeightedSurvivorIsRetried) {
  Formula f = MakeWeighted(2, {{{1, 2}, 3}, {{-1, 2}, 1}, {{-1, 2}, 1}});
  EXPECT_EQ(ApplyRule1Exhaustively(f, 2), 2);
  EXPECT_EQ(Multiset(f), Multiset(MakeWeighted(2, {{{1, 2}, 1}, {{2}, 1},
                                                   {{2}, 1}})));
}

TEST(VariantTest, NamesAndConfigs) {
  for (Variant v : kAllVariants) EXPECT_EQ(ParseVariant(VariantName(v)), v);
  EXPECT_THROW(ParseVariant("3"), PreconditionError);
  const SolverConfig zero = SolverConfig::ForVariant(Variant::kMaxSat0);
  EXPECT_FALSE(zero.enable_r1r2 || zero.enable_r3r4 || zero.enable_r5r6);
  const SolverConfig c1234 = SolverConfig::ForVariant(Variant::kMaxSat1234);
  EXPECT_TRUE(c1234.enable_r1r2 && c1234.enable_r3r4 && !c1234.enable_r5r6);
}

// Property: every rule keeps the formula equivalent, strictly shrinks the
// literal mass and leaves consistent bookkeeping. Equivalence is checked by
// both the Gray-code oracle and a naive binary-order sweep.
class SchemaProperty : public ::testing::TestWithParam<int> {};

TEST_P(SchemaProperty, SoundAndShrinking) {
  const int kind = GetParam();
  Rng rng(1000 + kind, 0);
  for (int trial = 0; trial < 60; ++trial) {
    testing::SchemaInstance s = testing::RandomSchema(kind, rng);
    Formula after = s.formula;
    const RuleApplication app = s.apply(after);
    after.Audit();
    ASSERT_EQ(app.rule, s.expected_rule);
    ASSERT_LT(app.mass_after, app.mass_before);
    ASSERT_EQ(after.empty_weight(),
              s.formula.empty_weight() + (app.produced_empty ? app.weight : 0));
    ASSERT_EQ(app.produced_empty, s.expected_rule != RuleId::kR1);
    ASSERT_TRUE(CheckEquivalence(s.formula, after).equivalent);
    ASSERT_TRUE(testing::NaiveEquivalent(s.formula, after));
  }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, SchemaProperty,
                         ::testing::Range(1, testing::kNumSchemaKinds + 1));

// A deliberately unsound replacement is caught.
TEST(SchemaProperty, OracleRejectsAnUnsoundRewrite) {
  const Formula before = MakeFormula(2, {{1}, {-1, -2}, {2}});
  const Formula wrong = MakeFormula(2, {{}, {1}, {2}});
  EXPECT_FALSE(CheckEquivalence(before, wrong).equivalent);
}

}  // namespace
}  // namespace upmax
