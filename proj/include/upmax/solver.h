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

// Depth-first branch and bound for weighted partial Max-SAT.
//
// Every node simplifies the formula to a fixpoint (R1 on binary clauses,
// R2, pure literals, dominating unit clauses, the empty-unit rule), then
// bounds it from below with the empty weight plus the propagation-based
// underestimation, and prunes when the bound reaches the incumbent cost.
// Otherwise it branches on the variable with the largest occurrence score.

#ifndef UPMAX_SOLVER_H_
#define UPMAX_SOLVER_H_

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "upmax/formula.h"
#include "upmax/rules.h"

namespace upmax {

enum class SolveStatus : std::uint8_t { kOptimal, kTimedOut, kMandatoryConflict };

const char* ToString(SolveStatus s);

struct SearchStats {
  std::int64_t branches = 0;  // binary branch points
  std::int64_t nodes = 0;
  std::int64_t nodes_pruned = 0;
  std::array<std::int64_t, kNumRules> rule_applications{};  // R1..R6
  int peak_depth = 0;
  double elapsed_ms = 0;
  // Rule applications that did not strictly shrink the literal mass.
  std::int64_t mass_audit_failures = 0;

  std::int64_t rule_count(RuleId r) const {
    return rule_applications[static_cast<int>(r) - 1];
  }
};

struct SolveOptions {
  SolverConfig config;
  // Search only for assignments cheaper than this.
  std::optional<Weight> initial_ub;
  std::optional<std::chrono::duration<double>> timeout;
  // Called after every rule application, at every node.
  RuleObserver observer;
};

struct SolveResult {
  Weight optimum = 0;
  // Complete over the variables of the input formula.
  Assignment best;
  SearchStats stats;
  SolveStatus status = SolveStatus::kOptimal;
};

SolveResult Solve(const Formula& f, const SolveOptions& options = {});

// Heuristic score of one polarity: units + 4 * binaries + longer clauses.
std::int64_t PolarityScore(const LiteralCounts& c, bool positive);

// Unassigned variable with an occurrence maximizing the product of its
// polarity scores; lowest index on ties. Throws PreconditionError if no
// unassigned variable occurs in an active clause.
Var SelectVariable(const Formula& f);

// True iff the negative score is strictly below the positive score.
bool SelectValue(const Formula& f, Var v);

// Satisfies every pure literal until none is left. Returns the number of
// assignments made.
int PureLiteral(Formula& f);

// Fixes x to false when the weight of its occurrences is at most the weight
// of the unit clauses ~x, and symmetrically. Returns the number of
// assignments made.
int DominatingUnitClause(Formula& f);

struct EmptyUnitOutcome {
  int assigned = 0;
  // Both polarities of some variable reach `ub`.
  bool prune = false;
};

// Fixes x to false when empty weight + weight of units ~x reaches `ub`, and
// symmetrically.
EmptyUnitOutcome EmptyUnitRule(Formula& f, Weight ub);

// Greedy descent along the branching heuristic. Returns the cost of the
// resulting assignment, written to `witness` when non-null.
Weight InitialUpperBound(const Formula& f, Assignment* witness = nullptr);

// "key=value" lines describing one solve.
std::string StatsRecord(const std::string& instance, Variant variant,
                        const SolveResult& result);

}  // namespace upmax

#endif  // UPMAX_SOLVER_H_
