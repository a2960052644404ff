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

#include <algorithm>
#include <sstream>

namespace upmax {
namespace {

void CheckLive(const Formula& f, ClauseId id) {
  if (id < 0 || id >= f.slot_count() || !f.IsActive(id)) {
    throw PatternMismatch("clause " + std::to_string(id) + " is not live");
  }
}

void CheckDistinct(std::span<const ClauseId> ids) {
  std::vector<ClauseId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PatternMismatch("a clause appears twice in the pattern");
  }
}

Literal UnitLiteral(const Formula& f, ClauseId id) {
  CheckLive(f, id);
  if (f.Length(id) != 1) throw PatternMismatch("expected a unit clause");
  return f.Literals(id)[0];
}

// For a binary clause containing `l`, the other literal.
Literal OtherOf(const Formula& f, ClauseId id, Literal l) {
  CheckLive(f, id);
  auto lits = f.Literals(id);
  if (lits.size() != 2) throw PatternMismatch("expected a binary clause");
  if (lits[0] == l) return lits[1];
  if (lits[1] == l) return lits[0];
  throw PatternMismatch("binary clause does not contain " + ToString(l));
}

bool IsBinary(const Formula& f, ClauseId id, Literal a, Literal b) {
  auto lits = f.Literals(id);
  return lits.size() == 2 && ((lits[0] == a && lits[1] == b) ||
                              (lits[0] == b && lits[1] == a));
}

// Rules on two mandatory clauses make no progress.
bool BothMandatory(const Formula& f, ClauseId a, ClauseId b) {
  return IsTop(f.ClauseWeight(a)) && IsTop(f.ClauseWeight(b));
}

// Shared replacement step. All pattern checks happen before this point.
RuleApplication Replace(Formula& f, RuleId rule,
                        std::span<const ClauseId> consumed,
                        const std::vector<std::vector<Literal>>& produced,
                        bool produce_empty) {
  CheckDistinct(consumed);
  Weight w = kTop;
  for (ClauseId id : consumed) w = std::min(w, f.ClauseWeight(id));
  if (IsTop(w)) throw MandatoryConflict();

  RuleApplication app;
  app.rule = rule;
  app.consumed.assign(consumed.begin(), consumed.end());
  app.weight = w;
  app.produced_empty = produce_empty;
  app.mass_before = f.literal_mass();
  for (ClauseId id : consumed) f.ReduceWeight(id, w);
  if (produce_empty) f.AddEmpty(w);
  for (const auto& lits : produced) app.produced.push_back(f.AddClause(lits, w));
  app.mass_after = f.literal_mass();
  return app;
}

// R5 when the chain is only the unit, R6 otherwise.
RuleApplication ApplyTriangle(Formula& f, RuleId rule,
                              std::span<const ClauseId> chain, ClauseId b_a,
                              ClauseId b_b, ClauseId b_ab) {
  if (chain.empty()) throw PatternMismatch("missing unit clause");
  Literal cur = UnitLiteral(f, chain[0]);
  std::vector<std::vector<Literal>> produced;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Literal next = OtherOf(f, chain[i], ~cur);
    produced.push_back({cur, ~next});
    cur = next;
  }
  const Literal a = OtherOf(f, b_a, ~cur);
  const Literal b = OtherOf(f, b_b, ~cur);
  CheckLive(f, b_ab);
  if (a == b || !IsBinary(f, b_ab, ~a, ~b)) {
    throw PatternMismatch("triangle clauses do not close the conflict");
  }
  produced.push_back({cur, ~a, ~b});
  produced.push_back({~cur, a, b});
  std::vector<ClauseId> consumed(chain.begin(), chain.end());
  consumed.insert(consumed.end(), {b_a, b_b, b_ab});
  return Replace(f, rule, consumed, produced, true);
}

}  // namespace

std::string TraceLine(const RuleApplication& app) {
  std::ostringstream out;
  out << 'R' << static_cast<int>(app.rule) << " consumed=";
  for (std::size_t i = 0; i < app.consumed.size(); ++i) {
    out << (i ? "," : "") << app.consumed[i];
  }
  out << " produced=";
  bool first = true;
  if (app.produced_empty) {
    out << "[]";
    first = false;
  }
  for (ClauseId id : app.produced) {
    out << (first ? "" : ",") << id;
    first = false;
  }
  return out.str();
}

RuleApplication ApplyRule1(Formula& f, ClauseId c1, ClauseId c2) {
  CheckLive(f, c1);
  CheckLive(f, c2);
  if (c1 == c2) throw PatternMismatch("R1 needs two distinct clauses");
  if (f.Length(c1) != f.Length(c2)) {
    throw PatternMismatch("R1 clauses differ in length");
  }
  if (f.Length(c1) == 1) return ApplyRule2(f, c1, c2);

  auto lits1 = f.Literals(c1);
  auto lits2 = f.Literals(c2);
  std::vector<Literal> common;
  int clashes = 0;
  for (Literal l : lits1) {
    if (std::find(lits2.begin(), lits2.end(), l) != lits2.end()) {
      common.push_back(l);
    } else if (std::find(lits2.begin(), lits2.end(), ~l) != lits2.end()) {
      ++clashes;
    } else {
      throw PatternMismatch("R1 clauses are not almost common");
    }
  }
  if (clashes != 1) throw PatternMismatch("R1 needs exactly one clash");
  const ClauseId consumed[] = {c1, c2};
  return Replace(f, RuleId::kR1, consumed, {common}, false);
}

RuleApplication ApplyRule2(Formula& f, ClauseId u1, ClauseId u2) {
  const Literal l = UnitLiteral(f, u1);
  if (UnitLiteral(f, u2) != ~l) {
    throw PatternMismatch("R2 needs complementary unit clauses");
  }
  const ClauseId consumed[] = {u1, u2};
  return Replace(f, RuleId::kR2, consumed, {}, true);
}

RuleApplication ApplyRule3(Formula& f, ClauseId unit1, ClauseId binary,
                           ClauseId unit2) {
  const Literal l1 = UnitLiteral(f, unit1);
  const Literal l2 = UnitLiteral(f, unit2);
  CheckLive(f, binary);
  if (l1.var() == l2.var() || !IsBinary(f, binary, ~l1, ~l2)) {
    throw PatternMismatch("R3 needs {l1}, {~l1 v ~l2}, {l2}");
  }
  const ClauseId consumed[] = {unit1, binary, unit2};
  return Replace(f, RuleId::kR3, consumed, {{l1, l2}}, true);
}

RuleApplication ApplyRule4(Formula& f, std::span<const ClauseId> chain) {
  if (chain.size() < 3) throw PatternMismatch("R4 chain is too short");
  Literal cur = UnitLiteral(f, chain.front());
  std::vector<std::vector<Literal>> produced;
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    const Literal next = OtherOf(f, chain[i], ~cur);
    produced.push_back({cur, ~next});
    cur = next;
  }
  if (UnitLiteral(f, chain.back()) != ~cur) {
    throw PatternMismatch("R4 chain does not end in the complement");
  }
  return Replace(f, RuleId::kR4, chain, produced, true);
}

RuleApplication ApplyRule5(Formula& f, ClauseId unit, ClauseId b12,
                           ClauseId b13, ClauseId b23) {
  const ClauseId chain[] = {unit};
  return ApplyTriangle(f, RuleId::kR5, chain, b12, b13, b23);
}

RuleApplication ApplyRule6(Formula& f, std::span<const ClauseId> chain,
                           ClauseId b_a, ClauseId b_b, ClauseId b_ab) {
  if (chain.size() < 2) throw PatternMismatch("R6 needs a chain binary");
  return ApplyTriangle(f, RuleId::kR6, chain, b_a, b_b, b_ab);
}

int ApplyRule1Exhaustively(Formula& f, int max_length,
                           const RuleObserver& observer) {
  int applied = 0;
  std::vector<Literal> flipped;
  for (ClauseId id = 0; id < f.slot_count(); ++id) {
  retry:
    if (!f.IsActive(id)) continue;
    const int len = f.Length(id);
    if (len < 2 || len > max_length) continue;
    auto lits = f.Literals(id);
    for (int i = 0; i < len; ++i) {
      flipped.assign(lits.begin(), lits.end());
      flipped[i] = ~flipped[i];
      for (ClauseId other : f.Occurrences(flipped[i])) {
        if (other == id || !f.IsActive(other) || f.Length(other) != len) {
          continue;
        }
        auto olits = f.Literals(other);
        const bool match = std::all_of(olits.begin(), olits.end(), [&](Literal l) {
          return std::find(flipped.begin(), flipped.end(), l) != flipped.end();
        });
        if (!match || BothMandatory(f, id, other)) continue;
        RuleApplication app = ApplyRule1(f, id, other);
        ++applied;
        if (observer) observer(f, app);
        // Weighted clauses may survive with a smaller weight.
        goto retry;
      }
    }
  }
  return applied;
}

int ApplyRule2Exhaustively(Formula& f, const RuleObserver& observer) {
  int applied = 0;
  for (ClauseId id = 0; id < f.slot_count(); ++id) {
  retry:
    if (!f.IsActive(id) || f.Length(id) != 1) continue;
    const Literal l = f.Literals(id)[0];
    for (ClauseId other : f.Occurrences(~l)) {
      if (!f.IsActive(other) || f.Length(other) != 1) continue;
      if (BothMandatory(f, id, other)) continue;
      RuleApplication app = ApplyRule2(f, id, other);
      ++applied;
      if (observer) observer(f, app);
      goto retry;
    }
  }
  return applied;
}

Variant ParseVariant(std::string_view name) {
  if (name == "0") return Variant::kMaxSat0;
  if (name == "12") return Variant::kMaxSat12;
  if (name == "1234") return Variant::kMaxSat1234;
  if (name == "z") return Variant::kMaxSatZ;
  throw PreconditionError("unknown variant '" + std::string(name) +
                          "' (expected 0, 12, 1234 or z)");
}

std::string VariantName(Variant v) {
  switch (v) {
    case Variant::kMaxSat0: return "0";
    case Variant::kMaxSat12: return "12";
    case Variant::kMaxSat1234: return "1234";
    case Variant::kMaxSatZ: return "z";
  }
  return "?";
}

SolverConfig SolverConfig::ForVariant(Variant v) {
  SolverConfig c;
  c.enable_r1r2 = v != Variant::kMaxSat0;
  c.enable_r3r4 = v == Variant::kMaxSat1234 || v == Variant::kMaxSatZ;
  c.enable_r5r6 = v == Variant::kMaxSatZ;
  return c;
}

}  // namespace upmax
