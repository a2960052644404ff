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

#include "upmax/gen.h"

#include <algorithm>
#include <numeric>

namespace upmax {
namespace {

enum Stream : std::uint64_t {
  kKSatStream = 1,
  kGraphStream = 2,
  kColorableStream = 3,
};

constexpr int kMaxGraphAttempts = 1'000'000;

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool Connected(int v, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(v + 1);
  std::iota(parent.begin(), parent.end(), 0);
  int components = v;
  for (const auto& [a, b] : edges) {
    const int ra = Find(parent, a), rb = Find(parent, b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components <= 1;
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(SplitMix64(seed ^ SplitMix64(stream))) {}

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::Below(0)");
  // Draws below 2^64 mod bound are rejected, leaving a multiple of bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = Next();
  } while (x < threshold);
  return x % bound;
}

bool Rng::Bernoulli(double p) {
  const double u = static_cast<double>(Next() >> 11) * 0x1.0p-53;
  return u < p;
}

Formula RandomMaxKSat(int n, int m, int k, std::uint64_t seed) {
  if (k < 1 || k > n) throw PreconditionError("random k-SAT needs 1 <= k <= n");
  if (m < 0) throw PreconditionError("negative clause count");
  Rng rng(seed, kKSatStream);
  Formula f(n);
  std::vector<Var> pool(n);
  std::vector<Literal> clause;
  for (int c = 0; c < m; ++c) {
    std::iota(pool.begin(), pool.end(), 1);
    // Partial Fisher-Yates: the first k entries are a uniform k-subset.
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(rng.Below(n - i));
      std::swap(pool[i], pool[j]);
    }
    std::sort(pool.begin(), pool.begin() + k);
    clause.clear();
    for (int i = 0; i < k; ++i) clause.emplace_back(pool[i], rng.Coin());
    f.AddClause(clause);
  }
  return f;
}

GraphInstance RandomConnectedGraph(int v, int m, std::uint64_t seed) {
  if (v < 1) throw PreconditionError("graph needs at least one vertex");
  const std::int64_t pairs = std::int64_t{v} * (v - 1) / 2;
  if (m < v - 1 || m > pairs) {
    throw PreconditionError("no connected graph with " + std::to_string(v) +
                            " vertices and " + std::to_string(m) + " edges");
  }
  std::vector<std::pair<int, int>> all;
  all.reserve(pairs);
  for (int a = 1; a <= v; ++a) {
    for (int b = a + 1; b <= v; ++b) all.emplace_back(a, b);
  }
  for (int attempt = 0; attempt < kMaxGraphAttempts; ++attempt) {
    Rng rng(seed, (std::uint64_t{kGraphStream} << 32) + attempt);
    for (int i = 0; i < m; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.Below(all.size() - i));
      std::swap(all[i], all[j]);
    }
    std::vector<std::pair<int, int>> edges(all.begin(), all.begin() + m);
    if (!Connected(v, edges)) continue;
    std::sort(edges.begin(), edges.end());
    return {v, std::move(edges)};
  }
  throw Error("no connected graph found after " +
              std::to_string(kMaxGraphAttempts) + " attempts");
}

GraphInstance RandomKColorableGraph(int v, double density, std::uint64_t seed) {
  if (v < 0) throw PreconditionError("negative vertex count");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw PreconditionError("density must lie in [0, 1]");
  }
  Rng rng(seed, kColorableStream);
  GraphInstance g{v, {}};
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (a % 3 == b % 3) continue;
      if (rng.Bernoulli(density)) g.edges.emplace_back(a + 1, b + 1);
    }
  }
  return g;
}

Formula EncodeMaxCut(const GraphInstance& g) {
  Formula f(g.vertex_count);
  for (const auto& [a, b] : g.edges) {
    f.AddClause({Literal(a, false), Literal(b, false)});
    f.AddClause({Literal(a, true), Literal(b, true)});
  }
  return f;
}

Var ColorVariable(int vertex, int color) { return 3 * (vertex - 1) + color; }

Formula EncodeThreeColoring(const GraphInstance& g) {
  Formula f(3 * g.vertex_count);
  for (int i = 1; i <= g.vertex_count; ++i) {
    f.AddClause({Literal(ColorVariable(i, 1), false),
                 Literal(ColorVariable(i, 2), false),
                 Literal(ColorVariable(i, 3), false)});
    for (int c = 1; c <= 3; ++c) {
      for (int d = c + 1; d <= 3; ++d) {
        f.AddClause({Literal(ColorVariable(i, c), true),
                     Literal(ColorVariable(i, d), true)});
      }
    }
  }
  for (const auto& [a, b] : g.edges) {
    for (int c = 1; c <= 3; ++c) {
      f.AddClause({Literal(ColorVariable(a, c), true),
                   Literal(ColorVariable(b, c), true)});
    }
  }
  return f;
}

}  // namespace upmax
