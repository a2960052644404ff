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

#include "upmax/propagate.h"

#include <algorithm>
#include <span>

namespace upmax {

// Read access to the live graph of a Propagator, for Analyze().
struct PropagatorView {
  const Propagator& p;
  const Formula& f;

  int IndexOf(Literal l) const {
    return p.HasNode(l) ? p.node_index_[l.code()] : -1;
  }
  Literal NodeAt(int i) const { return p.nodes_[i]; }
  int NodeCount() const { return static_cast<int>(p.nodes_.size()); }
  ClauseId ClauseOf(int i) const { return p.node_clause_[p.nodes_[i].code()]; }
  std::span<const Literal> ClauseLits(int i) const {
    return f.Literals(ClauseOf(i));
  }
};

namespace {

struct GraphView {
  const ImplicationGraph& g;
  std::vector<int> index;  // by literal code

  explicit GraphView(const ImplicationGraph& graph) : g(graph) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const int code = g.nodes[i].literal.code();
      if (static_cast<int>(index.size()) <= code) index.resize(code + 2, -1);
      index[code] = static_cast<int>(i);
    }
  }
  int IndexOf(Literal l) const {
    return l.code() < static_cast<int>(index.size()) ? index[l.code()] : -1;
  }
  Literal NodeAt(int i) const { return g.nodes[i].literal; }
  int NodeCount() const { return static_cast<int>(g.nodes.size()); }
  ClauseId ClauseOf(int i) const { return g.nodes[i].clause; }
  std::span<const Literal> ClauseLits(int i) const {
    return g.nodes[i].clause_literals;
  }
};

// Index of the single predecessor of a node added by a binary clause.
template <class View>
int SolePredecessor(const View& v, int node) {
  auto lits = v.ClauseLits(node);
  const Literal self = v.NodeAt(node);
  return v.IndexOf(lits[0] == self ? ~lits[1] : ~lits[0]);
}

template <class View>
ConflictAnalysis Analyze(const View& v, Literal conflict) {
  ConflictAnalysis a;
  a.conflict = conflict;
  const int n = v.NodeCount();
  std::vector<std::uint8_t> side(n, 0);
  std::vector<int> stack;

  auto collect = [&](Literal target, std::uint8_t bit,
                     std::vector<Literal>& out) {
    const int start = v.IndexOf(target);
    side[start] |= bit;
    stack.assign(1, start);
    while (!stack.empty()) {
      const int node = stack.back();
      stack.pop_back();
      out.push_back(v.NodeAt(node));
      const Literal self = v.NodeAt(node);
      for (Literal l : v.ClauseLits(node)) {
        if (l == self) continue;
        const int pred = v.IndexOf(~l);
        if ((side[pred] & bit) == 0) {
          side[pred] |= bit;
          stack.push_back(pred);
        }
      }
    }
  };
  collect(conflict, 1, a.s_literal);
  collect(~conflict, 2, a.s_negation);

  std::vector<int> members;
  for (int i = 0; i < n; ++i) {
    if (side[i] != 0) members.push_back(i);
  }
  for (int i : members) a.clauses.push_back(v.ClauseOf(i));

  auto length = [&](int i) { return static_cast<int>(v.ClauseLits(i).size()); };
  int units = 0, binaries = 0, shared = 0;
  int units_literal_side = 0, units_negation_side = 0;
  for (int i : members) {
    const int len = length(i);
    if (len == 1) {
      ++units;
      if (side[i] & 1) ++units_literal_side;
      if (side[i] & 2) ++units_negation_side;
    } else if (len == 2) {
      ++binaries;
    }
    if (side[i] == 3) ++shared;
  }
  const bool unit_and_binaries =
      units + binaries == static_cast<int>(members.size());
  if (!unit_and_binaries) return a;

  const int pos = v.IndexOf(conflict);
  const int neg = v.IndexOf(~conflict);

  // Walks from `node` back to its source, collecting node indices.
  auto path_to_source = [&](int node) {
    std::vector<int> path{node};
    while (length(path.back()) == 2) path.push_back(SolePredecessor(v, path.back()));
    return path;
  };

  if (shared == 0) {
    // Two disjoint chains, each from its own unit clause.
    if (units_literal_side != 1 || units_negation_side != 1 || binaries < 1) {
      return a;
    }
    std::vector<int> up = path_to_source(pos);
    std::reverse(up.begin(), up.end());
    const std::vector<int> down = path_to_source(neg);
    for (int i : up) a.pattern.push_back(v.ClauseOf(i));
    for (int i : down) a.pattern.push_back(v.ClauseOf(i));
    a.classification = binaries == 1 ? RuleClass::kRule3 : RuleClass::kRule4;
    return a;
  }

  // One unit clause feeding a shared chain that forks into a triangle.
  if (units != 1 || static_cast<int>(members.size()) - shared != 3) return a;
  std::vector<int> chain;
  for (int i : path_to_source(pos)) {
    if (side[i] == 3) chain.push_back(i);
  }
  std::reverse(chain.begin(), chain.end());
  if (static_cast<int>(chain.size()) != shared) return a;
  const int end = chain.back();
  int third = -1;
  for (int i : members) {
    if (side[i] != 3 && i != pos && i != neg) third = i;
  }
  if (third < 0 || SolePredecessor(v, third) != end) return a;
  int direct, via_third;
  if (SolePredecessor(v, pos) == end && SolePredecessor(v, neg) == third) {
    direct = pos;
    via_third = neg;
  } else if (SolePredecessor(v, neg) == end &&
             SolePredecessor(v, pos) == third) {
    direct = neg;
    via_third = pos;
  } else {
    return a;
  }
  for (int i : chain) {
    a.intersection_chain.push_back(v.NodeAt(i));
    a.pattern.push_back(v.ClauseOf(i));
  }
  a.pattern.push_back(v.ClauseOf(third));
  a.pattern.push_back(v.ClauseOf(direct));
  a.pattern.push_back(v.ClauseOf(via_third));
  a.classification = chain.size() == 1 ? RuleClass::kRule5 : RuleClass::kRule6;
  return a;
}

RuleApplication ApplyClassified(Formula& f, const ConflictAnalysis& a) {
  const std::vector<ClauseId>& p = a.pattern;
  switch (a.classification) {
    case RuleClass::kRule3:
      return ApplyRule3(f, p[0], p[1], p[2]);
    case RuleClass::kRule4:
      return ApplyRule4(f, p);
    case RuleClass::kRule5:
      return ApplyRule5(f, p[0], p[1], p[2], p[3]);
    case RuleClass::kRule6: {
      const std::size_t k = p.size() - 3;
      return ApplyRule6(f, std::span(p).first(k), p[k], p[k + 1], p[k + 2]);
    }
    case RuleClass::kNoRule:
      break;
  }
  throw InvariantError("no rule to apply");
}

bool RuleEnabled(RuleClass c, const SolverConfig& config) {
  switch (c) {
    case RuleClass::kRule3:
    case RuleClass::kRule4:
      return config.enable_r3r4;
    case RuleClass::kRule5:
    case RuleClass::kRule6:
      return config.enable_r5r6;
    case RuleClass::kNoRule:
      return false;
  }
  return false;
}

void CheckNoComplementaryUnits(const Formula& f) {
  for (ClauseId id : f.UnitOrder()) {
    if (!f.IsActive(id) || f.Length(id) != 1) continue;
    const Literal l = f.Literals(id)[0];
    for (ClauseId other : f.Occurrences(~l)) {
      if (f.IsActive(other) && f.Length(other) == 1) {
        throw PreconditionError("complementary unit clauses on variable " +
                                std::to_string(l.var()));
      }
    }
  }
}

}  // namespace

std::vector<Literal> GraphNode::Predecessors() const {
  std::vector<Literal> preds;
  for (Literal l : clause_literals) {
    if (l != literal) preds.push_back(~l);
  }
  return preds;
}

const GraphNode* ImplicationGraph::Find(Literal l) const {
  for (const GraphNode& n : nodes) {
    if (n.literal == l) return &n;
  }
  return nullptr;
}

std::size_t ImplicationGraph::EdgeCount() const {
  std::size_t edges = 0;
  for (const GraphNode& n : nodes) edges += n.clause_literals.size() - 1;
  return edges;
}

const char* ToString(RuleClass c) {
  switch (c) {
    case RuleClass::kNoRule: return "NoRule";
    case RuleClass::kRule3: return "Rule3Applicable";
    case RuleClass::kRule4: return "Rule4Applicable";
    case RuleClass::kRule5: return "Rule5Applicable";
    case RuleClass::kRule6: return "Rule6Applicable";
  }
  return "?";
}

void Propagator::Prepare(const Formula& f) {
  const std::size_t codes = 2 * static_cast<std::size_t>(f.num_variables());
  if (node_stamp_.size() < codes) {
    node_stamp_.resize(codes, 0);
    node_clause_.resize(codes, kNoClause);
    node_index_.resize(codes, -1);
  }
  if (excluded_.size() < static_cast<std::size_t>(f.slot_count())) {
    excluded_.resize(f.slot_count(), 0);
  }
}

void Propagator::AddNode(Literal l, ClauseId c) {
  node_stamp_[l.code()] = round_;
  node_clause_[l.code()] = c;
  node_index_[l.code()] = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(l);
}

bool Propagator::Round(const Formula& f) {
  Prepare(f);
  if (++round_ == 0) {
    std::fill(node_stamp_.begin(), node_stamp_.end(), 0);
    round_ = 1;
  }
  nodes_.clear();
  q1_.clear();
  q2_.clear();

  for (ClauseId id : f.UnitOrder()) {
    if (!f.IsActive(id) || f.Length(id) != 1 || Excluded(id)) continue;
    const Literal l = f.Literals(id)[0];
    if (HasNode(l)) continue;
    AddNode(l, id);
    if (HasNode(~l)) {
      conflict_ = l;
      return true;
    }
    q1_.push_back(l);
  }

  std::size_t h1 = 0, h2 = 0;
  while (true) {
    Literal p;
    if (h2 < q2_.size()) {
      p = q2_[h2++];
      if (trace_) trace_->push_back({p, true, q2_.size() - h2 + 1});
    } else if (h1 < q1_.size()) {
      p = q1_[h1++];
      if (trace_) trace_->push_back({p, false, 0});
    } else {
      return false;
    }
    for (ClauseId c : f.Occurrences(~p)) {
      if (!f.IsActive(c) || Excluded(c)) continue;
      auto lits = f.Literals(c);
      int open = 0;
      Literal candidate;
      bool satisfied = false;
      for (Literal y : lits) {
        if (HasNode(y)) {
          satisfied = true;
          break;
        }
        if (!HasNode(~y)) {
          candidate = y;
          if (++open > 1) break;
        }
      }
      if (satisfied || open > 1) continue;
      if (open == 1) {
        AddNode(candidate, c);
        q2_.push_back(candidate);
        continue;
      }
      // Every literal is falsified: the last one other than ~p is implied
      // and clashes with its complement.
      Literal implied = ~p;
      for (auto it = lits.rbegin(); it != lits.rend(); ++it) {
        if (*it != ~p) {
          implied = *it;
          break;
        }
      }
      if (implied == ~p) throw InvariantError("falsified unit clause in graph");
      AddNode(implied, c);
      conflict_ = implied;
      return true;
    }
  }
}

ImplicationGraph Propagator::BuildGraph(const Formula& f) {
  if (++call_ == 0) {
    std::fill(excluded_.begin(), excluded_.end(), 0);
    call_ = 1;
  }
  ImplicationGraph g;
  const bool conflict = Round(f);
  for (Literal l : nodes_) {
    const ClauseId c = node_clause_[l.code()];
    auto lits = f.Literals(c);
    g.nodes.push_back({l, c, {lits.begin(), lits.end()}});
  }
  if (conflict) g.conflict = conflict_;
  return g;
}

UnderestimationResult Propagator::Underestimate(Formula& f, Weight ub,
                                                const SolverConfig& config,
                                                const RuleObserver& observer) {
  UnderestimationResult result;
  if (++call_ == 0) {
    std::fill(excluded_.begin(), excluded_.end(), 0);
    call_ = 1;
  }
  while (AddWeight(result.count, f.empty_weight()) < ub && Round(f)) {
    const ConflictAnalysis a = Analyze(PropagatorView{*this, f}, conflict_);
    bool applied = false;
    if (RuleEnabled(a.classification, config)) {
      Weight w = kTop;
      for (ClauseId c : a.clauses) w = std::min(w, f.ClauseWeight(c));
      if (!IsTop(w)) {
        result.applications.push_back(ApplyClassified(f, a));
        if (observer) observer(f, result.applications.back());
        applied = true;
      }
    }
    if (!applied) {
      Weight w = kTop;
      for (ClauseId c : a.clauses) {
        w = std::min(w, f.ClauseWeight(c));
        excluded_[c] = call_;
      }
      result.count = AddWeight(result.count, w);
      ++result.subsets;
    }
  }
  return result;
}

ImplicationGraph BuildImplicationGraph(const Formula& f) {
  CheckNoComplementaryUnits(f);
  Propagator p;
  return p.BuildGraph(f);
}

ConflictAnalysis ExtractInconsistentSubset(const ImplicationGraph& g) {
  if (!g.conflict) throw PreconditionError("implication graph has no conflict");
  return Analyze(GraphView(g), *g.conflict);
}

RuleClass ClassifyConflict(const ConflictAnalysis& analysis,
                           const ImplicationGraph& g) {
  return Analyze(GraphView(g), analysis.conflict).classification;
}

std::pair<UnderestimationResult, Formula> Underestimation(
    Formula f, Weight ub, const SolverConfig& config) {
  Propagator p;
  UnderestimationResult r = p.Underestimate(f, ub, config);
  return {std::move(r), std::move(f)};
}

}  // namespace upmax
