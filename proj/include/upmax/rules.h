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

// Equivalence-preserving Max-SAT inference rules.
//
// Each rule replaces a small clause pattern by an equivalent, strictly
// smaller one that makes a contradiction explicit as an empty clause:
//
//   R1  {l1 v L, ~l1 v L}                        -> {L}
//   R2  {l, ~l}                                  -> {[]}
//   R3  {l1, ~l1 v ~l2, l2}                      -> {[], l1 v l2}
//   R4  {l1, ~l1 v l2, ..., ~lk v lk+1, ~lk+1}   -> {[], l1 v ~l2, ..., lk v ~lk+1}
//   R5  {l1, ~l1 v l2, ~l1 v l3, ~l2 v ~l3}      -> {[], l1 v ~l2 v ~l3, ~l1 v l2 v l3}
//   R6  an R4 prefix l1 ... lk+1 followed by the R5 triangle on lk+1.
//
// With weights, w is the minimum weight over the consumed clauses: the
// produced clauses get weight w and every consumed clause loses w (clauses
// reaching 0 disappear, mandatory clauses keep kTop).

#ifndef UPMAX_RULES_H_
#define UPMAX_RULES_H_

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "upmax/formula.h"

namespace upmax {

enum class RuleId : std::uint8_t { kR1 = 1, kR2, kR3, kR4, kR5, kR6 };

inline constexpr int kNumRules = 6;

struct RuleApplication {
  RuleId rule = RuleId::kR1;
  std::vector<ClauseId> consumed;
  // Slots of the produced non-empty clauses.
  std::vector<ClauseId> produced;
  bool produced_empty = false;
  Weight weight = 1;
  // Formula::literal_mass() just before and after the replacement.
  std::int64_t mass_before = 0;
  std::int64_t mass_after = 0;
};

// "R<id> consumed=<ids> produced=<ids>", with [] standing for the empty
// clause in the produced list.
std::string TraceLine(const RuleApplication& app);

// Every clause of the pattern is mandatory; no finite-cost assignment
// extends the current one.
class MandatoryConflict : public Error {
 public:
  MandatoryConflict() : Error("inference rule on mandatory clauses only") {}
};

// Thrown when the clauses handed to an ApplyRule* function do not have the
// rule's shape. The formula is left untouched.
class PatternMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// R1 on two clauses of equal length differing in exactly one clashing
// literal. Unit clauses are delegated to ApplyRule2.
RuleApplication ApplyRule1(Formula& f, ClauseId c1, ClauseId c2);
// R2 on complementary unit clauses.
RuleApplication ApplyRule2(Formula& f, ClauseId u1, ClauseId u2);
// R3 on {l1}, {~l1, ~l2}, {l2}.
RuleApplication ApplyRule3(Formula& f, ClauseId unit1, ClauseId binary,
                           ClauseId unit2);
// R4 on a chain: a unit {l1}, binaries {~l1,l2} ... {~lk,lk+1} (k >= 1) in
// order, and the closing unit {~lk+1}.
RuleApplication ApplyRule4(Formula& f, std::span<const ClauseId> chain);
// R5 on {l1}, {~l1,l2}, {~l1,l3}, {~l2,~l3}.
RuleApplication ApplyRule5(Formula& f, ClauseId unit, ClauseId b12,
                           ClauseId b13, ClauseId b23);
// R6: `chain` is the unit followed by k >= 1 chain binaries ending in lk+1;
// the triangle is {~lk+1,a}, {~lk+1,b}, {~a,~b}.
RuleApplication ApplyRule6(Formula& f, std::span<const ClauseId> chain,
                           ClauseId b_a, ClauseId b_b, ClauseId b_ab);

using RuleObserver = std::function<void(const Formula&, const RuleApplication&)>;

// Applies R1 to clauses of length 2..max_length until no pair is left.
// Pairs of two mandatory clauses are skipped, as are R2 pairs below.
// Returns the number of applications.
int ApplyRule1Exhaustively(Formula& f, int max_length,
                           const RuleObserver& observer = {});
// Applies R2 until no complementary unit pair is left.
int ApplyRule2Exhaustively(Formula& f, const RuleObserver& observer = {});

// Solver variants, by the set of enabled rules.
enum class Variant : std::uint8_t { kMaxSat0, kMaxSat12, kMaxSat1234, kMaxSatZ };

// "0", "12", "1234", "z". Throws PreconditionError otherwise.
Variant ParseVariant(std::string_view name);
std::string VariantName(Variant v);
inline constexpr std::array<Variant, 4> kAllVariants = {
    Variant::kMaxSat0, Variant::kMaxSat12, Variant::kMaxSat1234,
    Variant::kMaxSatZ};

struct SolverConfig {
  bool enable_r1r2 = true;
  bool enable_r3r4 = true;
  bool enable_r5r6 = true;
  // Longest clauses R1 is tried on at every node.
  int rule1_max_length = 2;

  static SolverConfig ForVariant(Variant v);
};

}  // namespace upmax

#endif  // UPMAX_RULES_H_
