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

// Exhaustive reference answers for testing.
//
// Assignments are visited in reflected Gray-code order starting from
// all-true, variable 1 being the lowest bit, so each step flips one variable
// and updates clause costs incrementally. Mandatory clauses count as the
// total finite weight plus one while enumerating; any cost at or above that
// is reported as kTop.

#ifndef UPMAX_ORACLE_H_
#define UPMAX_ORACLE_H_

#include "upmax/dimacs.h"
#include "upmax/formula.h"

namespace upmax {

inline constexpr int kDefaultOracleCap = 22;
inline constexpr int kDefaultMaxCutCap = 20;

struct OptimumResult {
  Weight cost = 0;
  Assignment witness;  // first optimal assignment visited
};

// Minimum cost of the live clauses and empty weight of `f` over all
// assignments of its variables. Throws PreconditionError above `cap`
// variables.
OptimumResult BruteForceOptimum(const Formula& f, int cap = kDefaultOracleCap);

struct EquivalenceResult {
  bool equivalent = true;
  // First assignment visited on which the costs differ.
  Assignment counterexample;
  Weight cost_first = 0;
  Weight cost_second = 0;
};

// Compares costs assignment by assignment. Throws PreconditionError if the
// formulas have different variable counts or exceed `cap`.
EquivalenceResult CheckEquivalence(const Formula& first, const Formula& second,
                                   int cap = kDefaultOracleCap);

// Largest number of edges crossing a bipartition of the vertices.
int BruteForceMaxCut(const GraphInstance& g, int cap = kDefaultMaxCutCap);

}  // namespace upmax

#endif  // UPMAX_ORACLE_H_
