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

#include "upmax/formula.h"

#include <algorithm>
#include <sstream>

namespace upmax {

std::string ToString(Literal l) { return std::to_string(l.ToDimacs()); }

std::string ToString(const Clause& c) {
  if (c.empty()) return "[]";
  std::ostringstream out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i > 0) out << ' ';
    out << c.literals[i].ToDimacs();
  }
  return out.str();
}

bool Assignment::IsComplete() const {
  return std::none_of(values_.begin(), values_.end(),
                      [](Value v) { return v == Value::kUnassigned; });
}

std::vector<int> Assignment::ToDimacs() const {
  std::vector<int> out;
  for (Var v = 1; v <= num_variables(); ++v) {
    if (Get(v) == Value::kTrue) out.push_back(v);
    if (Get(v) == Value::kFalse) out.push_back(-v);
  }
  return out;
}

int ClauseCost(std::span<const Literal> literals, const Assignment& a) {
  int cost = 1;
  for (Literal l : literals) {
    if (l.var() > a.num_variables() || !a.IsAssigned(l.var())) {
      throw PreconditionError("clause cost: variable " +
                              std::to_string(l.var()) + " is unassigned");
    }
    if (a.Satisfies(l)) cost = 0;
  }
  return cost;
}

Formula::Formula(int num_variables) { EnsureVariables(num_variables); }

Formula Formula::FromClauses(int num_variables,
                             std::span<const Clause> clauses) {
  Formula f(num_variables);
  for (const Clause& c : clauses) {
    if (c.empty()) {
      f.AddEmpty(c.weight);
    } else {
      f.AddClause(c.literals, c.weight);
    }
  }
  return f;
}

void Formula::EnsureVariables(int n) {
  if (n <= num_variables_) return;
  num_variables_ = n;
  values_.resize(n, Value::kUnassigned);
  const std::size_t codes = 2 * static_cast<std::size_t>(n);
  occurs_.resize(codes);
  counts_.resize(codes, {0, 0, 0});
  occ_weight_.resize(codes, 0);
  occ_top_.resize(codes, 0);
  unit_weight_.resize(codes, 0);
  unit_top_.resize(codes, 0);
}

ClauseId Formula::AddClause(std::span<const Literal> literals, Weight weight) {
  if (weight < 1) throw PreconditionError("clause weight must be at least 1");
  if (literals.empty()) {
    AddEmpty(weight);
    return kNoClause;
  }
  std::vector<Literal> lits;
  lits.reserve(literals.size());
  for (Literal l : literals) {
    if (l.var() < 1 || l.var() > num_variables_) {
      throw PreconditionError("literal " + ToString(l) + " out of range");
    }
    if (value(l.var()) != Value::kUnassigned) {
      throw PreconditionError("literal " + ToString(l) + " is assigned");
    }
    if (std::find(lits.begin(), lits.end(), ~l) != lits.end()) {
      throw PreconditionError("tautological clause");
    }
    if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
  }
  return Alloc(lits, weight);
}

void Formula::AddEmpty(Weight weight) {
  if (weight < 1) throw PreconditionError("clause weight must be at least 1");
  SetEmptyWeight(AddWeight(empty_weight_, weight));
}

void Formula::RemoveClause(ClauseId id) {
  if (id < 0 || id >= slot_count() || !slots_[id].active) {
    throw InvariantError("removing a clause that is not live: " +
                         std::to_string(id));
  }
  Deactivate(id);
}

void Formula::ReduceWeight(ClauseId id, Weight by) {
  if (id < 0 || id >= slot_count() || !slots_[id].active) {
    throw InvariantError("reweighting a clause that is not live");
  }
  Slot& s = slots_[id];
  if (IsTop(s.weight)) return;
  if (by >= s.weight) {
    Deactivate(id);
    return;
  }
  Index(id, -1);
  if (recording()) trail_.push_back({Op::kWeight, id, s.weight});
  s.weight -= by;
  Index(id, +1);
}

void Formula::Assign(Literal l) {
  if (l.var() < 1 || l.var() > num_variables_) {
    throw PreconditionError("assigning literal " + ToString(l) +
                            " out of range");
  }
  if (value(l.var()) != Value::kUnassigned) {
    throw PreconditionError("variable " + std::to_string(l.var()) +
                            " is already assigned");
  }
  if (recording()) trail_.push_back({Op::kAssign, l.var(), 0});
  values_[l.var() - 1] = l.negated() ? Value::kFalse : Value::kTrue;

  // Level-0 edits free slots, which rewrites the occurrence lists.
  const std::vector<ClauseId> satisfied(occurs_[l.code()].begin(),
                                        occurs_[l.code()].end());
  for (ClauseId c : satisfied) {
    if (slots_[c].active) Deactivate(c);
  }
  const std::vector<ClauseId> shrunk(occurs_[(~l).code()].begin(),
                                     occurs_[(~l).code()].end());
  for (ClauseId c : shrunk) {
    if (slots_[c].active) Hide(c, ~l);
  }
}

void Formula::PushLevel() { level_marks_.push_back(trail_.size()); }

void Formula::PopLevel() {
  if (level_marks_.empty()) throw InvariantError("PopLevel at level 0");
  const std::size_t mark = level_marks_.back();
  level_marks_.pop_back();
  while (trail_.size() > mark) {
    const TrailEntry e = trail_.back();
    trail_.pop_back();
    Undo(e);
  }
}

std::vector<ClauseId> Formula::ActiveClauses() const {
  std::vector<ClauseId> ids;
  ids.reserve(num_active_);
  for (ClauseId id = 0; id < slot_count(); ++id) {
    if (slots_[id].active) ids.push_back(id);
  }
  return ids;
}

Weight Formula::total_weight() const {
  if (num_active_top_ > 0) return kTop;
  return AddWeight(active_finite_weight_, empty_weight_);
}

LiteralCounts Formula::Counts(Var v) const {
  const auto& pos = counts_[Literal(v, false).code()];
  const auto& neg = counts_[Literal(v, true).code()];
  return {neg[0], pos[0], neg[1], pos[1], neg[2], pos[2]};
}

int Formula::OccurrenceCount(Literal l) const {
  const auto& c = counts_[l.code()];
  return c[0] + c[1] + c[2];
}

Weight Formula::OccurrenceWeight(Literal l) const {
  return occ_top_[l.code()] > 0 ? kTop : occ_weight_[l.code()];
}

Weight Formula::UnitWeight(Literal l) const {
  return unit_top_[l.code()] > 0 ? kTop : unit_weight_[l.code()];
}

std::vector<Clause> Formula::Snapshot() const {
  std::vector<Clause> out;
  out.reserve(num_active_);
  for (ClauseId id = 0; id < slot_count(); ++id) {
    if (!slots_[id].active) continue;
    auto lits = Literals(id);
    out.push_back({{lits.begin(), lits.end()}, slots_[id].weight});
  }
  return out;
}

ClauseId Formula::Alloc(std::span<const Literal> lits, Weight weight) {
  ClauseId id;
  if (!free_slots_.empty()) {
    id = free_slots_.back();
    free_slots_.pop_back();
  } else {
    id = slot_count();
    slots_.emplace_back();
  }
  Slot& s = slots_[id];
  s.lits.assign(lits.begin(), lits.end());
  s.len = static_cast<std::int32_t>(lits.size());
  s.weight = weight;
  s.active = true;
  s.allocated = true;
  for (Literal l : s.lits) occurs_[l.code()].push_back(id);
  ++num_active_;
  Index(id, +1);
  if (recording()) trail_.push_back({Op::kAlloc, id, 0});
  if (s.len == 1) PushUnit(id);
  return id;
}

void Formula::FreeSlot(ClauseId id) {
  Slot& s = slots_[id];
  for (Literal l : s.lits) {
    auto& occ = occurs_[l.code()];
    // Slots are usually freed in reverse allocation order.
    auto it = std::find(occ.rbegin(), occ.rend(), id);
    if (it != occ.rend()) occ.erase(std::next(it).base());
  }
  s.allocated = false;
  s.active = false;
  free_slots_.push_back(id);
}

void Formula::Deactivate(ClauseId id) {
  Index(id, -1);
  slots_[id].active = false;
  --num_active_;
  if (recording()) {
    trail_.push_back({Op::kDeactivate, id, 0});
  } else {
    FreeSlot(id);
  }
}

void Formula::Hide(ClauseId id, Literal l) {
  Slot& s = slots_[id];
  Index(id, -1);
  auto live_end = s.lits.begin() + s.len;
  auto it = std::find(s.lits.begin(), live_end, l);
  std::iter_swap(it, live_end - 1);
  --s.len;
  if (recording()) trail_.push_back({Op::kHide, id, 0});
  if (s.len == 0) {
    s.active = false;
    --num_active_;
    if (recording()) trail_.push_back({Op::kDeactivate, id, 0});
    SetEmptyWeight(AddWeight(empty_weight_, s.weight));
    if (!recording()) FreeSlot(id);
    return;
  }
  Index(id, +1);
  if (s.len == 1) PushUnit(id);
}

void Formula::SetEmptyWeight(Weight w) {
  if (recording()) trail_.push_back({Op::kEmpty, 0, empty_weight_});
  empty_weight_ = w;
}

void Formula::PushUnit(ClauseId id) {
  unit_order_.push_back(id);
  if (recording()) trail_.push_back({Op::kUnitPush, id, 0});
}

void Formula::Index(ClauseId id, int sign) {
  const Slot& s = slots_[id];
  if (s.len == 0) return;
  const bool top = IsTop(s.weight);
  const int bucket = std::min(s.len, 3) - 1;
  for (int i = 0; i < s.len; ++i) {
    const int code = s.lits[i].code();
    counts_[code][bucket] += sign;
    if (top) {
      occ_top_[code] += sign;
      if (s.len == 1) unit_top_[code] += sign;
    } else {
      occ_weight_[code] += sign * s.weight;
      if (s.len == 1) unit_weight_[code] += sign * s.weight;
    }
  }
  if (top) {
    num_active_top_ += sign;
  } else {
    active_finite_weight_ += sign * s.weight;
    mass_ += sign * s.weight * s.len;
  }
}

void Formula::Undo(const TrailEntry& e) {
  switch (e.op) {
    case Op::kAssign:
      values_[e.id - 1] = Value::kUnassigned;
      break;
    case Op::kDeactivate:
      slots_[e.id].active = true;
      ++num_active_;
      Index(e.id, +1);
      break;
    case Op::kHide:
      Index(e.id, -1);
      ++slots_[e.id].len;
      Index(e.id, +1);
      break;
    case Op::kEmpty:
      empty_weight_ = e.old;
      break;
    case Op::kWeight:
      Index(e.id, -1);
      slots_[e.id].weight = e.old;
      Index(e.id, +1);
      break;
    case Op::kAlloc:
      Index(e.id, -1);
      --num_active_;
      FreeSlot(e.id);
      break;
    case Op::kUnitPush:
      unit_order_.pop_back();
      break;
  }
}

void Formula::Audit() const {
  auto fail = [](const std::string& what) { throw InvariantError(what); };
  const std::size_t codes = 2 * static_cast<std::size_t>(num_variables_);
  std::vector<std::array<int, 3>> counts(codes, {0, 0, 0});
  std::vector<Weight> occ_weight(codes, 0), unit_weight(codes, 0);
  std::vector<int> occ_top(codes, 0), unit_top(codes, 0);
  int active = 0, active_top = 0;
  Weight finite = 0;
  std::int64_t mass = 0;

  for (ClauseId id = 0; id < slot_count(); ++id) {
    const Slot& s = slots_[id];
    if (!s.allocated) {
      if (s.active) fail("free slot marked active");
      continue;
    }
    for (std::size_t i = 0; i < s.lits.size(); ++i) {
      const Literal l = s.lits[i];
      const auto& occ = occurs_[l.code()];
      if (std::count(occ.begin(), occ.end(), id) != 1) {
        fail("occurrence list of " + ToString(l) + " misses clause " +
             std::to_string(id));
      }
      if (!s.active) continue;
      const Value v = value(l.var());
      if (static_cast<int>(i) < s.len && v != Value::kUnassigned) {
        fail("live literal " + ToString(l) + " is assigned");
      }
      if (static_cast<int>(i) >= s.len &&
          v != (l.negated() ? Value::kTrue : Value::kFalse)) {
        fail("hidden literal " + ToString(l) + " is not falsified");
      }
    }
    if (!s.active) continue;
    if (s.len < 1) fail("active clause of length 0");
    ++active;
    const bool top = IsTop(s.weight);
    const int bucket = std::min(s.len, 3) - 1;
    for (int i = 0; i < s.len; ++i) {
      const int code = s.lits[i].code();
      ++counts[code][bucket];
      if (top) {
        ++occ_top[code];
        if (s.len == 1) ++unit_top[code];
      } else {
        occ_weight[code] += s.weight;
        if (s.len == 1) unit_weight[code] += s.weight;
      }
    }
    if (top) {
      ++active_top;
    } else {
      finite += s.weight;
      mass += s.weight * s.len;
    }
    if (s.len == 1 &&
        std::find(unit_order_.begin(), unit_order_.end(), id) ==
            unit_order_.end()) {
      fail("unit clause " + std::to_string(id) + " missing from unit order");
    }
  }
  for (std::size_t code = 0; code < codes; ++code) {
    for (ClauseId id : occurs_[code]) {
      if (id < 0 || id >= slot_count() || !slots_[id].allocated) {
        fail("occurrence list points to a free slot");
      }
      const auto& lits = slots_[id].lits;
      if (std::find(lits.begin(), lits.end(), Literal::FromCode(code)) ==
          lits.end()) {
        fail("occurrence list points to a clause without the literal");
      }
    }
  }
  if (counts != counts_) fail("literal counts drifted");
  if (occ_weight != occ_weight_ || occ_top != occ_top_) {
    fail("occurrence weights drifted");
  }
  if (unit_weight != unit_weight_ || unit_top != unit_top_) {
    fail("unit weights drifted");
  }
  if (active != num_active_ || active_top != num_active_top_) {
    fail("active clause count drifted");
  }
  if (finite != active_finite_weight_) fail("active weight drifted");
  if (mass != mass_) fail("literal mass drifted");
}

Formula AssignLiteral(Formula f, Literal l) {
  f.Assign(l);
  return f;
}

Weight FormulaCost(const Formula& f, const Assignment& a) {
  if (a.num_variables() < f.num_variables()) {
    throw PreconditionError("assignment does not cover every variable");
  }
  for (Var v = 1; v <= f.num_variables(); ++v) {
    if (!a.IsAssigned(v)) {
      throw PreconditionError("assignment leaves variable " +
                              std::to_string(v) + " unassigned");
    }
  }
  Weight cost = f.empty_weight();
  for (ClauseId id = 0; id < f.slot_count(); ++id) {
    if (!f.IsActive(id)) continue;
    if (ClauseCost(f.Literals(id), a) != 0) {
      cost = AddWeight(cost, f.ClauseWeight(id));
    }
  }
  return cost;
}

Weight FormulaCost(std::span<const Clause> clauses, const Assignment& a) {
  Weight cost = 0;
  for (const Clause& c : clauses) {
    if (ClauseCost(c, a) != 0) cost = AddWeight(cost, c.weight);
  }
  return cost;
}

}  // namespace upmax
