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

// Weighted CNF multisets with reversible editing.
//
// A Formula stores clauses in slots. Each slot keeps its literal array with
// the live literals first; assigning a variable hides its falsified literals
// by swapping them past the live prefix, so undo is a length increment. All
// edits made while at least one level is open go on a trail and are undone
// by PopLevel(). Edits at level 0 are permanent and free slots immediately.

#ifndef UPMAX_FORMULA_H_
#define UPMAX_FORMULA_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "upmax/types.h"

namespace upmax {

enum class Value : std::int8_t { kFalse = 0, kTrue = 1, kUnassigned = 2 };

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_variables)
      : values_(num_variables, Value::kUnassigned) {}

  int num_variables() const { return static_cast<int>(values_.size()); }
  Value Get(Var v) const { return values_[v - 1]; }
  void Set(Var v, bool value) {
    values_[v - 1] = value ? Value::kTrue : Value::kFalse;
  }
  void Set(Literal l) { Set(l.var(), !l.negated()); }
  void Unset(Var v) { values_[v - 1] = Value::kUnassigned; }
  bool IsComplete() const;
  bool IsAssigned(Var v) const { return Get(v) != Value::kUnassigned; }
  // Requires var(l) assigned.
  bool Satisfies(Literal l) const {
    return Get(l.var()) == (l.negated() ? Value::kFalse : Value::kTrue);
  }
  // Signed DIMACS literals of the assigned variables, in variable order.
  std::vector<int> ToDimacs() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Value> values_;
};

// A clause as a plain value. An empty literal list is the empty clause.
struct Clause {
  std::vector<Literal> literals;
  Weight weight = 1;

  bool empty() const { return literals.empty(); }
  bool mandatory() const { return IsTop(weight); }

  friend bool operator==(const Clause&, const Clause&) = default;
};

std::string ToString(const Clause& c);

// 0 if some literal is satisfied, 1 otherwise. The empty clause costs 1.
// Throws PreconditionError if a variable of the clause is unassigned.
int ClauseCost(std::span<const Literal> literals, const Assignment& a);
inline int ClauseCost(const Clause& c, const Assignment& a) {
  return ClauseCost(c.literals, a);
}

using ClauseId = std::int32_t;
inline constexpr ClauseId kNoClause = -1;

// Occurrences of a variable split by polarity and current clause length:
// 1 = unit, 2 = binary, 3 = three or more literals.
struct LiteralCounts {
  int neg1 = 0, pos1 = 0;
  int neg2 = 0, pos2 = 0;
  int neg3 = 0, pos3 = 0;

  friend bool operator==(const LiteralCounts&, const LiteralCounts&) = default;
};

class Formula {
 public:
  explicit Formula(int num_variables = 0);

  // Builds a formula at level 0. Empty clauses go to the empty weight.
  static Formula FromClauses(int num_variables, std::span<const Clause> clauses);

  int num_variables() const { return num_variables_; }
  void EnsureVariables(int n);

  // Adds a clause and returns its slot. Duplicate literals are merged. An
  // empty literal list adds to empty_weight() and returns kNoClause.
  // Throws PreconditionError on weight < 1, on a tautology, or on a literal
  // whose variable is assigned or out of range.
  ClauseId AddClause(std::span<const Literal> literals, Weight weight = 1);
  ClauseId AddClause(std::initializer_list<Literal> literals, Weight weight = 1) {
    return AddClause(std::span<const Literal>(literals.begin(), literals.size()),
                     weight);
  }
  void AddEmpty(Weight weight);

  // Throws InvariantError if the clause is not active.
  void RemoveClause(ClauseId id);
  // Subtracts `by` from the clause weight, removing the clause at zero.
  // Mandatory clauses keep their weight.
  void ReduceWeight(ClauseId id, Weight by);

  // One-literal rule: deletes the clauses containing `l` and removes ~l
  // from the others. Clauses reduced to nothing add to empty_weight().
  void Assign(Literal l);

  // Reversible editing.
  void PushLevel();
  void PopLevel();
  int level() const { return static_cast<int>(level_marks_.size()); }

  // Slot queries. Ids range over [0, slot_count()).
  ClauseId slot_count() const { return static_cast<ClauseId>(slots_.size()); }
  bool IsActive(ClauseId id) const {
    return slots_[id].active;
  }
  std::span<const Literal> Literals(ClauseId id) const {
    const Slot& s = slots_[id];
    return {s.lits.data(), static_cast<std::size_t>(s.len)};
  }
  int Length(ClauseId id) const { return slots_[id].len; }
  Weight ClauseWeight(ClauseId id) const { return slots_[id].weight; }
  std::vector<ClauseId> ActiveClauses() const;
  // Every allocated slot whose raw literals contain `l`, in insertion order.
  // Callers filter on IsActive() and on the variable being unassigned.
  std::span<const ClauseId> Occurrences(Literal l) const { return occurs_[l.code()]; }
  // Slots that became unit, oldest first. May hold stale entries.
  std::span<const ClauseId> UnitOrder() const { return unit_order_; }

  Weight empty_weight() const { return empty_weight_; }
  int num_active_clauses() const { return num_active_; }
  bool only_empty_clauses() const { return num_active_ == 0; }
  // Sum of weight * length over active finite-weight clauses.
  std::int64_t literal_mass() const { return mass_; }
  // Sum of finite weights of active clauses plus empty_weight(); kTop if any
  // mandatory clause is present.
  Weight total_weight() const;

  Value value(Var v) const { return values_[v - 1]; }
  const std::vector<Value>& values() const { return values_; }

  LiteralCounts Counts(Var v) const;
  // Active clauses containing `l`.
  int OccurrenceCount(Literal l) const;
  // Total weight of active clauses containing `l` / of unit clauses {l}.
  Weight OccurrenceWeight(Literal l) const;
  Weight UnitWeight(Literal l) const;

  // Active clauses with their live literals, in slot order. Empty clauses
  // are not included; see empty_weight().
  std::vector<Clause> Snapshot() const;

  // Full recount of every incrementally maintained quantity. Throws
  // InvariantError on the first mismatch.
  void Audit() const;

 private:
  struct Slot {
    std::vector<Literal> lits;  // live prefix of length len, hidden after
    std::int32_t len = 0;
    Weight weight = 0;
    bool active = false;
    bool allocated = false;
  };

  enum class Op : std::uint8_t {
    kAssign, kDeactivate, kHide, kEmpty, kWeight, kAlloc, kUnitPush
  };
  struct TrailEntry {
    Op op;
    std::int32_t id;
    Weight old;
  };

  ClauseId Alloc(std::span<const Literal> lits, Weight weight);
  void FreeSlot(ClauseId id);
  void Deactivate(ClauseId id);
  void Hide(ClauseId id, Literal l);
  void SetEmptyWeight(Weight w);
  void PushUnit(ClauseId id);
  void Index(ClauseId id, int sign);
  void Undo(const TrailEntry& e);
  bool recording() const { return !level_marks_.empty(); }

  int num_variables_ = 0;
  std::vector<Slot> slots_;
  std::vector<ClauseId> free_slots_;
  std::vector<std::vector<ClauseId>> occurs_;
  std::vector<ClauseId> unit_order_;
  std::vector<Value> values_;

  // Per literal code: counts by length bucket, finite weight sums and the
  // number of mandatory clauses contributing to them.
  std::vector<std::array<int, 3>> counts_;
  std::vector<Weight> occ_weight_;
  std::vector<int> occ_top_;
  std::vector<Weight> unit_weight_;
  std::vector<int> unit_top_;

  Weight empty_weight_ = 0;
  int num_active_ = 0;
  int num_active_top_ = 0;
  Weight active_finite_weight_ = 0;
  std::int64_t mass_ = 0;

  std::vector<TrailEntry> trail_;
  std::vector<std::size_t> level_marks_;
};

// Copy of `f` with the one-literal rule applied.
Formula AssignLiteral(Formula f, Literal l);

// Sum of weight * ClauseCost over active clauses plus the empty weight.
// Throws PreconditionError unless `a` assigns every variable 1..n.
Weight FormulaCost(const Formula& f, const Assignment& a);
Weight FormulaCost(std::span<const Clause> clauses, const Assignment& a);

}  // namespace upmax

#endif  // UPMAX_FORMULA_H_
