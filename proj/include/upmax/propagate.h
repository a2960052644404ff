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

// Simulated unit propagation and the lower bound built on it.
//
// A propagation round never assigns anything. Every literal of a unit
// clause becomes a graph node up front; nodes are then propagated from two
// queues, derived literals (Q2) before original unit clauses (Q1). A clause
// whose literals are all falsified by nodes except one adds that literal as
// a node, with an edge from the complement of every other literal. The round
// stops at the first literal whose complement is already a node.
//
// Each conflict yields an inconsistent subset: the clauses of every node
// with a path to either conflicting literal. When the subset has the shape
// of rule R3-R6 and the rule is enabled, the rule is applied to the formula
// in place; otherwise the subset is set aside and the underestimation grows
// by its minimum weight. Set-aside clauses come back at the end.

#ifndef UPMAX_PROPAGATE_H_
#define UPMAX_PROPAGATE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "upmax/formula.h"
#include "upmax/rules.h"

namespace upmax {

struct GraphNode {
  Literal literal;
  // The clause that added the node; a unit clause for source nodes.
  ClauseId clause = kNoClause;
  // Live literals of that clause when the node was added.
  std::vector<Literal> clause_literals;

  // Complements of the other clause literals.
  std::vector<Literal> Predecessors() const;
};

struct ImplicationGraph {
  std::vector<GraphNode> nodes;  // in insertion order
  // Set when both *conflict and ~*conflict are nodes.
  std::optional<Literal> conflict;

  const GraphNode* Find(Literal l) const;
  bool Contains(Literal l) const { return Find(l) != nullptr; }
  std::size_t EdgeCount() const;
};

enum class RuleClass : std::uint8_t { kNoRule, kRule3, kRule4, kRule5, kRule6 };

const char* ToString(RuleClass c);

struct ConflictAnalysis {
  Literal conflict;
  // Nodes with a path to `conflict` (resp. ~conflict), the target included.
  std::vector<Literal> s_literal;
  std::vector<Literal> s_negation;
  // Clauses of s_literal u s_negation, without repetition.
  std::vector<ClauseId> clauses;
  // s_literal n s_negation in chain order, when it forms one.
  std::vector<Literal> intersection_chain;
  RuleClass classification = RuleClass::kNoRule;
  // Clause ids in the argument order of ApplyRule3/4 (a single chain) or
  // ApplyRule5/6 (the chain followed by the three triangle clauses).
  std::vector<ClauseId> pattern;
};

// One propagation round over `f`. Throws PreconditionError if `f` holds
// complementary unit clauses.
ImplicationGraph BuildImplicationGraph(const Formula& f);

// Throws PreconditionError if the graph has no conflict.
ConflictAnalysis ExtractInconsistentSubset(const ImplicationGraph& g);

// Re-derives the classification of `analysis` from the graph.
RuleClass ClassifyConflict(const ConflictAnalysis& analysis,
                           const ImplicationGraph& g);

struct UnderestimationResult {
  // Lower bound on the weight of clauses falsified by any completion, not
  // counting the empty weight.
  Weight count = 0;
  std::vector<RuleApplication> applications;
  // Number of conflicts set aside.
  int subsets = 0;
};

// A queue pop recorded for tracing.
struct QueuePop {
  Literal literal;
  bool from_q2 = false;
  std::size_t q2_pending = 0;  // Q2 entries waiting at the time of the pop
};

// Reusable propagation engine. Holds per-literal scratch arrays so that one
// instance can serve every node of a search.
class Propagator {
 public:
  Propagator() = default;

  // Computes the underestimation of `f` and applies the enabled rules R3-R6
  // to `f` in place. Stops early once count + empty weight reaches `ub`.
  UnderestimationResult Underestimate(Formula& f, Weight ub,
                                      const SolverConfig& config,
                                      const RuleObserver& observer = {});

  // Runs a single propagation round and exports the graph.
  ImplicationGraph BuildGraph(const Formula& f);

  // Records every queue pop into `trace` until reset with nullptr.
  void set_trace(std::vector<QueuePop>* trace) { trace_ = trace; }

 private:
  friend struct PropagatorView;

  void Prepare(const Formula& f);
  // Returns true when the round ends in a conflict.
  bool Round(const Formula& f);
  void AddNode(Literal l, ClauseId c);
  bool HasNode(Literal l) const { return node_stamp_[l.code()] == round_; }
  bool Excluded(ClauseId c) const { return excluded_[c] == call_; }

  std::vector<std::uint32_t> node_stamp_;
  std::vector<ClauseId> node_clause_;
  std::vector<std::int32_t> node_index_;
  std::vector<Literal> nodes_;
  std::vector<Literal> q1_, q2_;
  std::vector<std::uint32_t> excluded_;
  std::uint32_t round_ = 0;
  std::uint32_t call_ = 0;
  Literal conflict_;
  std::vector<QueuePop>* trace_ = nullptr;
};

// Convenience wrapper: runs on a copy and returns the transformed copy.
std::pair<UnderestimationResult, Formula> Underestimation(
    Formula f, Weight ub, const SolverConfig& config);

}  // namespace upmax

#endif  // UPMAX_PROPAGATE_H_
