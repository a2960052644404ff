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

#include "upmax/oracle.h"

#include <bit>

namespace upmax {
namespace {

void CheckCap(int n, int cap) {
  if (n > cap) {
    throw PreconditionError("oracle refuses " + std::to_string(n) +
                            " variables (cap " + std::to_string(cap) + ")");
  }
}

// Incremental cost of a fixed clause set as single variables flip.
class Evaluator {
 public:
  explicit Evaluator(const Formula& f) : occurs_(2 * f.num_variables()) {
    const std::vector<Clause> clauses = f.Snapshot();
    Weight finite = 0;
    for (const Clause& c : clauses) {
      if (!c.mandatory()) finite += c.weight;
    }
    if (!IsTop(f.empty_weight())) finite += f.empty_weight();
    hard_ = finite + 1;
    base_ = IsTop(f.empty_weight()) ? hard_ : f.empty_weight();

    true_count_.resize(clauses.size());
    weight_.resize(clauses.size());
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      weight_[i] = clauses[i].mandatory() ? hard_ : clauses[i].weight;
      for (Literal l : clauses[i].literals) {
        occurs_[l.code()].push_back(static_cast<int>(i));
        if (!l.negated()) ++true_count_[i];
      }
      if (true_count_[i] == 0) cost_ += weight_[i];
    }
  }

  // Flips variable v, which currently holds `was_true`.
  void Flip(Var v, bool was_true) {
    const Literal became_false(v, !was_true);
    for (int c : occurs_[became_false.code()]) {
      if (--true_count_[c] == 0) cost_ += weight_[c];
    }
    for (int c : occurs_[(~became_false).code()]) {
      if (true_count_[c]++ == 0) cost_ -= weight_[c];
    }
  }

  Weight Cost() const {
    const Weight c = base_ + cost_;
    return c >= hard_ ? kTop : c;
  }

 private:
  std::vector<std::vector<int>> occurs_;
  std::vector<int> true_count_;
  std::vector<Weight> weight_;
  Weight hard_ = 1;
  Weight base_ = 0;
  Weight cost_ = 0;
};

// Calls `visit(bits)` for every assignment in Gray-code order, after
// `flip(var, was_true)` has moved every evaluator to it.
template <class Flip, class Visit>
void Enumerate(int n, Flip&& flip, Visit&& visit) {
  std::uint64_t bits = (n == 0) ? 0 : (~std::uint64_t{0} >> (64 - n));
  if (!visit(bits)) return;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int b = std::countr_zero(i);
    const bool was_true = (bits >> b) & 1;
    bits ^= std::uint64_t{1} << b;
    flip(b + 1, was_true);
    if (!visit(bits)) return;
  }
}

Assignment FromBits(int n, std::uint64_t bits) {
  Assignment a(n);
  for (Var v = 1; v <= n; ++v) a.Set(v, (bits >> (v - 1)) & 1);
  return a;
}

}  // namespace

OptimumResult BruteForceOptimum(const Formula& f, int cap) {
  const int n = f.num_variables();
  CheckCap(n, cap);
  Evaluator eval(f);
  OptimumResult best{kTop, {}};
  std::uint64_t best_bits = 0;
  bool any = false;
  Enumerate(
      n, [&](Var v, bool was_true) { eval.Flip(v, was_true); },
      [&](std::uint64_t bits) {
        const Weight c = eval.Cost();
        if (!any || c < best.cost) {
          best.cost = c;
          best_bits = bits;
          any = true;
        }
        return true;
      });
  best.witness = FromBits(n, best_bits);
  return best;
}

EquivalenceResult CheckEquivalence(const Formula& first, const Formula& second,
                                   int cap) {
  const int n = first.num_variables();
  if (second.num_variables() != n) {
    throw PreconditionError("formulas range over different variable sets");
  }
  CheckCap(n, cap);
  Evaluator a(first), b(second);
  EquivalenceResult result;
  Enumerate(
      n,
      [&](Var v, bool was_true) {
        a.Flip(v, was_true);
        b.Flip(v, was_true);
      },
      [&](std::uint64_t bits) {
        if (a.Cost() == b.Cost()) return true;
        result.equivalent = false;
        result.counterexample = FromBits(n, bits);
        result.cost_first = a.Cost();
        result.cost_second = b.Cost();
        return false;
      });
  return result;
}

int BruteForceMaxCut(const GraphInstance& g, int cap) {
  const int v = g.vertex_count;
  CheckCap(v, cap);
  if (v <= 1) return 0;
  std::vector<std::vector<int>> adj(v + 1);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Vertex v stays on side 0; side bits of the others follow a Gray code.
  std::vector<char> side(v + 1, 0);
  int cut = 0, best = 0;
  const std::uint64_t total = std::uint64_t{1} << (v - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    const int u = std::countr_zero(i) + 1;
    for (int w : adj[u]) cut += side[u] == side[w] ? 1 : -1;
    side[u] ^= 1;
    best = std::max(best, cut);
  }
  return best;
}

}  // namespace upmax
