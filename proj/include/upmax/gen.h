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

// Seeded benchmark generators: random Max-kSAT, Max-Cut and graph
// 3-coloring encodings.
//
// Every generator draws from std::mt19937_64 seeded with
// SplitMix64(seed ^ SplitMix64(stream)), where the stream separates
// families and retries. Bounded integers use rejection sampling on the raw
// 64-bit output, so sequences are identical on every platform.

#ifndef UPMAX_GEN_H_
#define UPMAX_GEN_H_

#include <cstdint>
#include <random>

#include "upmax/dimacs.h"
#include "upmax/formula.h"

namespace upmax {

std::uint64_t SplitMix64(std::uint64_t x);

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, bound). bound > 0.
  std::uint64_t Below(std::uint64_t bound);
  bool Coin() { return (Next() >> 63) != 0; }
  // True with probability p, using 53 bits.
  bool Bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

// m clauses over k distinct variables each, sorted by variable, each literal
// negated with probability 1/2. Throws PreconditionError unless
// 1 <= k <= n.
Formula RandomMaxKSat(int n, int m, int k, std::uint64_t seed);

// A connected graph with v vertices and m distinct edges drawn uniformly;
// disconnected draws are rejected, up to 10^6 times.
GraphInstance RandomConnectedGraph(int v, int m, std::uint64_t seed);

// Vertex i (0-based) joins color class i mod 3; each pair of vertices in
// different classes is an edge with probability `density` in [0, 1].
GraphInstance RandomKColorableGraph(int v, double density, std::uint64_t seed);

// Per edge {i, j}: (xi v xj) and (~xi v ~xj). Satisfies m + k clauses
// exactly when the assignment cuts k edges.
Formula EncodeMaxCut(const GraphInstance& g);

// Variable 3(i-1)+c means vertex i takes color c in {1,2,3}. Per vertex:
// at least one color and no two; per edge: no shared color.
Formula EncodeThreeColoring(const GraphInstance& g);
Var ColorVariable(int vertex, int color);

}  // namespace upmax

#endif  // UPMAX_GEN_H_
