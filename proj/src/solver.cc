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

#include "upmax/solver.h"

#include <sstream>

#include "upmax/propagate.h"

namespace upmax {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kTimeoutCheckInterval = 1024;

bool Occurs(const Formula& f, Var v) {
  return f.OccurrenceCount(Literal(v, false)) > 0 ||
         f.OccurrenceCount(Literal(v, true)) > 0;
}

// Copies the formula's assignment, completing it with false.
Assignment CompleteAssignment(const Formula& f, int num_variables) {
  Assignment a(num_variables);
  for (Var v = 1; v <= num_variables; ++v) {
    a.Set(v, f.value(v) == Value::kTrue);
  }
  return a;
}

class Search {
 public:
  Search(Formula f, const SolveOptions& options, int num_variables)
      : f_(std::move(f)),
        options_(options),
        num_variables_(num_variables),
        start_(Clock::now()) {
    observer_ = [this](const Formula& g, const RuleApplication& app) {
      ++stats_.rule_applications[static_cast<int>(app.rule) - 1];
      if (app.mass_after >= app.mass_before) ++stats_.mass_audit_failures;
      if (options_.observer) options_.observer(g, app);
    };
  }

  // Looks for an assignment cheaper than `ub`. Returns true if one was found.
  bool Run(Weight ub) {
    ub_ = ub;
    found_ = false;
    f_.PushLevel();
    Node(0);
    f_.PopLevel();
    return found_;
  }

  Weight ub() const { return ub_; }
  const Assignment& best() const { return best_; }
  bool timed_out() const { return timed_out_; }
  SearchStats& stats() { return stats_; }
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_)
        .count();
  }

 private:
  // Returns false if the node can be pruned.
  bool Simplify() {
    const SolverConfig& config = options_.config;
    while (true) {
      bool changed = false;
      if (config.enable_r1r2) {
        changed |= ApplyRule1Exhaustively(f_, config.rule1_max_length,
                                          observer_) > 0;
        changed |= ApplyRule2Exhaustively(f_, observer_) > 0;
      }
      if (f_.empty_weight() >= ub_) return false;
      changed |= PureLiteral(f_) > 0;
      changed |= DominatingUnitClause(f_) > 0;
      const EmptyUnitOutcome eu = EmptyUnitRule(f_, ub_);
      if (eu.prune || f_.empty_weight() >= ub_) return false;
      changed |= eu.assigned > 0;
      if (!changed) return true;
    }
  }

  void Record() {
    ub_ = f_.empty_weight();
    best_ = CompleteAssignment(f_, num_variables_);
    found_ = true;
  }

  void Node(int depth) {
    ++stats_.nodes;
    stats_.peak_depth = std::max(stats_.peak_depth, depth);
    if (options_.timeout && stats_.nodes % kTimeoutCheckInterval == 0 &&
        Clock::now() - start_ >= *options_.timeout) {
      timed_out_ = true;
    }
    if (timed_out_) return;

    if (!Simplify()) {
      ++stats_.nodes_pruned;
      return;
    }
    if (f_.only_empty_clauses()) {
      Record();
      return;
    }
    const UnderestimationResult under =
        propagator_.Underestimate(f_, ub_, options_.config, observer_);
    if (AddWeight(f_.empty_weight(), under.count) >= ub_) {
      ++stats_.nodes_pruned;
      return;
    }
    if (f_.only_empty_clauses()) {
      Record();
      return;
    }

    const Var v = SelectVariable(f_);
    const bool first = SelectValue(f_, v);
    ++stats_.branches;
    for (bool value : {first, !first}) {
      f_.PushLevel();
      f_.Assign(Literal(v, !value));
      Node(depth + 1);
      f_.PopLevel();
      if (timed_out_) return;
    }
  }

  Formula f_;
  const SolveOptions& options_;
  const int num_variables_;
  const Clock::time_point start_;
  RuleObserver observer_;
  Propagator propagator_;
  SearchStats stats_;
  Weight ub_ = kTop;
  Assignment best_;
  bool found_ = false;
  bool timed_out_ = false;
};

}  // namespace

const char* ToString(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "OPTIMUM";
    case SolveStatus::kTimedOut: return "TIMEOUT";
    case SolveStatus::kMandatoryConflict: return "UNSATISFIABLE";
  }
  return "?";
}

std::int64_t PolarityScore(const LiteralCounts& c, bool positive) {
  return positive ? std::int64_t{c.pos1} + 4 * std::int64_t{c.pos2} + c.pos3
                  : std::int64_t{c.neg1} + 4 * std::int64_t{c.neg2} + c.neg3;
}

Var SelectVariable(const Formula& f) {
  Var best = 0;
  std::int64_t best_score = -1;
  for (Var v = 1; v <= f.num_variables(); ++v) {
    if (f.value(v) != Value::kUnassigned || !Occurs(f, v)) continue;
    const LiteralCounts c = f.Counts(v);
    const std::int64_t score = PolarityScore(c, false) * PolarityScore(c, true);
    if (score > best_score) {
      best = v;
      best_score = score;
    }
  }
  if (best == 0) throw PreconditionError("no unassigned variable occurs");
  return best;
}

bool SelectValue(const Formula& f, Var v) {
  const LiteralCounts c = f.Counts(v);
  return PolarityScore(c, false) < PolarityScore(c, true);
}

int PureLiteral(Formula& f) {
  int assigned = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Var v = 1; v <= f.num_variables(); ++v) {
      if (f.value(v) != Value::kUnassigned) continue;
      const Literal pos(v, false);
      const bool has_pos = f.OccurrenceCount(pos) > 0;
      const bool has_neg = f.OccurrenceCount(~pos) > 0;
      if (has_pos == has_neg) continue;
      f.Assign(has_pos ? pos : ~pos);
      ++assigned;
      changed = true;
    }
  }
  return assigned;
}

int DominatingUnitClause(Formula& f) {
  int assigned = 0;
  for (Var v = 1; v <= f.num_variables(); ++v) {
    if (f.value(v) != Value::kUnassigned || !Occurs(f, v)) continue;
    const Literal pos(v, false);
    if (f.OccurrenceWeight(pos) <= f.UnitWeight(~pos)) {
      f.Assign(~pos);
      ++assigned;
    } else if (f.OccurrenceWeight(~pos) <= f.UnitWeight(pos)) {
      f.Assign(pos);
      ++assigned;
    }
  }
  return assigned;
}

EmptyUnitOutcome EmptyUnitRule(Formula& f, Weight ub) {
  EmptyUnitOutcome out;
  for (Var v = 1; v <= f.num_variables(); ++v) {
    if (f.value(v) != Value::kUnassigned) continue;
    const Literal pos(v, false);
    // Setting x true falsifies the units ~x, and vice versa.
    const bool true_fails = AddWeight(f.empty_weight(), f.UnitWeight(~pos)) >= ub;
    const bool false_fails = AddWeight(f.empty_weight(), f.UnitWeight(pos)) >= ub;
    if (true_fails && false_fails) {
      out.prune = true;
      return out;
    }
    if (true_fails || false_fails) {
      f.Assign(true_fails ? ~pos : pos);
      ++out.assigned;
    }
  }
  return out;
}

Weight InitialUpperBound(const Formula& f, Assignment* witness) {
  Formula g = f;
  while (!g.only_empty_clauses()) {
    const Var v = SelectVariable(g);
    g.Assign(Literal(v, !SelectValue(g, v)));
  }
  if (witness) *witness = CompleteAssignment(g, f.num_variables());
  return g.empty_weight();
}

SolveResult Solve(const Formula& f, const SolveOptions& options) {
  SolveResult result;
  Assignment greedy;
  const Weight greedy_ub = InitialUpperBound(f, &greedy);
  Search search(f, options, f.num_variables());

  Weight ub = greedy_ub;
  if (options.initial_ub && *options.initial_ub < ub) ub = *options.initial_ub;
  bool found = search.Run(ub);
  // A user bound below the optimum hides every solution; fall back to the
  // greedy incumbent.
  if (!found && !search.timed_out() && ub < greedy_ub) {
    found = search.Run(greedy_ub);
  }

  result.stats = search.stats();
  result.stats.elapsed_ms = search.ElapsedMs();
  if (found) {
    result.optimum = search.ub();
    result.best = search.best();
  } else {
    result.optimum = greedy_ub;
    result.best = greedy;
  }
  if (search.timed_out()) {
    result.status = SolveStatus::kTimedOut;
  } else if (IsTop(result.optimum)) {
    result.status = SolveStatus::kMandatoryConflict;
  }
  return result;
}

std::string StatsRecord(const std::string& instance, Variant variant,
                        const SolveResult& result) {
  const SearchStats& s = result.stats;
  std::ostringstream out;
  out << "instance=" << instance << '\n'
      << "variant=" << VariantName(variant) << '\n'
      << "status=" << ToString(result.status) << '\n'
      << "optimum=" << result.optimum << '\n'
      << "branches=" << s.branches << '\n'
      << "nodes=" << s.nodes << '\n'
      << "nodes_pruned=" << s.nodes_pruned << '\n'
      << "peak_depth=" << s.peak_depth << '\n'
      << "elapsed_ms=" << s.elapsed_ms << '\n';
  for (int r = 0; r < kNumRules; ++r) {
    out << "rule_r" << r + 1 << '=' << s.rule_applications[r] << '\n';
  }
  out << "mass_audit_failures=" << s.mass_audit_failures << '\n';
  return out.str();
}

}  // namespace upmax
