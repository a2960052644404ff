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

#include "upmax/dimacs.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace upmax {
namespace {

constexpr std::string_view kSpace = " \t\r\f\v";

// Larger variable indices are rejected before any allocation.
constexpr int kMaxVariables = 1 << 22;

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(kSpace) - b + 1);
}

std::vector<std::string_view> Split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (true) {
    i = s.find_first_not_of(kSpace, i);
    if (i == std::string_view::npos) break;
    std::size_t j = s.find_first_of(kSpace, i);
    if (j == std::string_view::npos) j = s.size();
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t ParseInt(std::string_view token, int line) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, "integer out of range: '" + std::string(token) + "'");
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

int ParseCount(std::string_view token, int line, const char* what) {
  const std::int64_t v = ParseInt(token, line);
  if (v < 0 || v > std::numeric_limits<int>::max()) {
    throw ParseError(line, std::string("invalid ") + what);
  }
  return static_cast<int>(v);
}

// Calls `header` on the 'p' line and `data` on every other data line.
template <class Header, class Data>
void ScanLines(std::string_view text, std::vector<std::string>* comments,
               Header&& header, Data&& data) {
  int line_no = 0;
  bool seen_header = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == 'c') {
      if (comments) comments->emplace_back(Trim(line.substr(1)));
      continue;
    }
    if (line[0] == '%') break;
    if (line[0] == 'p') {
      if (seen_header) throw ParseError(line_no, "duplicate header");
      seen_header = true;
      header(Split(line), line_no);
      continue;
    }
    if (!seen_header) throw ParseError(line_no, "missing header");
    data(Split(line), line_no);
  }
  if (!seen_header) throw ParseError(line_no, "missing header");
}

ParsedInstance ParseFormula(std::string_view text, const ParseOptions& options,
                            bool weighted) {
  ParsedInstance out;
  out.weighted = weighted;
  const char* format = weighted ? "wcnf" : "cnf";
  std::vector<Literal> clause;
  bool in_clause = false;
  bool tautology = false;
  Weight weight = 1;
  int clauses_seen = 0;
  int last_line = 0;

  auto warn_or_throw = [&](int line, const std::string& message) {
    if (options.strict) throw ParseError(line, message);
    out.warnings.push_back("line " + std::to_string(line) + ": " + message);
  };

  auto header = [&](const std::vector<std::string_view>& t, int line) {
    const std::size_t max_tokens = weighted ? 5 : 4;
    if (t.size() < 4 || t.size() > max_tokens || t[0] != "p" || t[1] != format) {
      throw ParseError(line, std::string("malformed header, expected 'p ") +
                                 format + " <vars> <clauses>" +
                                 (weighted ? " [top]'" : "'"));
    }
    out.declared_variables = ParseCount(t[2], line, "variable count");
    if (out.declared_variables > kMaxVariables) {
      throw ParseError(line, "too many variables");
    }
    out.declared_clauses = ParseCount(t[3], line, "clause count");
    if (t.size() == 5) {
      const std::int64_t top = ParseInt(t[4], line);
      if (top < 1) throw ParseError(line, "top must be positive");
      out.top = top;
    }
    out.formula.EnsureVariables(out.declared_variables);
  };

  auto finish_clause = [&](int line) {
    ++clauses_seen;
    if (tautology) {
      out.warnings.push_back("line " + std::to_string(line) +
                             ": tautological clause dropped");
    } else if (clause.empty()) {
      out.formula.AddEmpty(weight);
    } else {
      out.formula.AddClause(clause, weight);
    }
    clause.clear();
    in_clause = false;
    tautology = false;
  };

  auto data = [&](const std::vector<std::string_view>& tokens, int line) {
    last_line = line;
    for (std::string_view token : tokens) {
      const std::int64_t v = ParseInt(token, line);
      if (weighted && !in_clause) {
        if (v < 1) throw ParseError(line, "clause weight must be positive");
        weight = (out.top && v >= *out.top) || v >= kTop ? kTop : v;
        in_clause = true;
        continue;
      }
      in_clause = true;
      if (v == 0) {
        finish_clause(line);
        continue;
      }
      if (v > kMaxVariables || v < -kMaxVariables) {
        throw ParseError(line, "literal out of range");
      }
      const Literal l = Literal::FromDimacs(static_cast<int>(v));
      if (l.var() > out.formula.num_variables()) {
        warn_or_throw(line, "literal " + std::string(token) +
                                " exceeds the declared variable count");
        out.formula.EnsureVariables(l.var());
      }
      if (std::find(clause.begin(), clause.end(), ~l) != clause.end()) {
        tautology = true;
      }
      if (std::find(clause.begin(), clause.end(), l) == clause.end()) {
        clause.push_back(l);
      }
    }
  };

  ScanLines(text, &out.comments, header, data);
  if (in_clause) {
    warn_or_throw(last_line, "unterminated clause at end of input");
    if (!weighted || !clause.empty() || tautology) finish_clause(last_line);
  }
  if (clauses_seen != out.declared_clauses) {
    warn_or_throw(last_line, "header declares " +
                                 std::to_string(out.declared_clauses) +
                                 " clauses, found " +
                                 std::to_string(clauses_seen));
  }
  return out;
}

void AppendClause(std::ostringstream& out, std::span<const Literal> lits) {
  for (Literal l : lits) out << l.ToDimacs() << ' ';
  out << "0\n";
}

}  // namespace

ParsedInstance ParseCnf(std::string_view text, const ParseOptions& options) {
  return ParseFormula(text, options, false);
}

ParsedInstance ParseWcnf(std::string_view text, const ParseOptions& options) {
  return ParseFormula(text, options, true);
}

ParsedInstance ParseDimacs(std::string_view text, const ParseOptions& options) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto tokens = Split(text.substr(pos, end - pos));
    pos = end + 1;
    if (tokens.empty() || tokens[0][0] == 'c') continue;
    if (tokens[0] == "p" && tokens.size() > 1 && tokens[1] == "wcnf") {
      return ParseWcnf(text, options);
    }
    break;
  }
  return ParseCnf(text, options);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ParsedInstance ReadDimacsFile(const std::string& path,
                              const ParseOptions& options) {
  return ParseDimacs(ReadFile(path), options);
}

std::string WriteCnf(const Formula& f) {
  if (IsTop(f.empty_weight())) {
    throw PreconditionError("cnf cannot express a mandatory empty clause");
  }
  const std::vector<ClauseId> ids = f.ActiveClauses();
  for (ClauseId id : ids) {
    if (f.ClauseWeight(id) != 1) {
      throw PreconditionError("cnf cannot express clause weights; use wcnf");
    }
  }
  std::ostringstream out;
  out << "p cnf " << f.num_variables() << ' '
      << static_cast<std::int64_t>(ids.size()) + f.empty_weight() << '\n';
  for (ClauseId id : ids) AppendClause(out, f.Literals(id));
  for (Weight i = 0; i < f.empty_weight(); ++i) out << "0\n";
  return out.str();
}

std::string WriteWcnf(const Formula& f) {
  const std::vector<ClauseId> ids = f.ActiveClauses();
  Weight finite = 0;
  for (ClauseId id : ids) {
    if (!IsTop(f.ClauseWeight(id))) finite = AddWeight(finite, f.ClauseWeight(id));
  }
  if (!IsTop(f.empty_weight())) finite = AddWeight(finite, f.empty_weight());
  const Weight top = AddWeight(finite, 1);
  auto weight_of = [&](Weight w) { return IsTop(w) ? top : w; };

  std::ostringstream out;
  const std::int64_t m = static_cast<std::int64_t>(ids.size()) +
                         (f.empty_weight() > 0 ? 1 : 0);
  out << "p wcnf " << f.num_variables() << ' ' << m << ' ' << top << '\n';
  for (ClauseId id : ids) {
    out << weight_of(f.ClauseWeight(id)) << ' ';
    AppendClause(out, f.Literals(id));
  }
  if (f.empty_weight() > 0) out << weight_of(f.empty_weight()) << " 0\n";
  return out.str();
}

GraphInstance ParseGraph(std::string_view text, const ParseOptions& options) {
  GraphInstance g;
  int declared_edges = 0;
  int last_line = 0;
  std::set<std::pair<int, int>> seen;
  std::vector<std::string> warnings;

  auto header = [&](const std::vector<std::string_view>& t, int line) {
    if (t.size() != 4 || t[0] != "p" || (t[1] != "edge" && t[1] != "col")) {
      throw ParseError(line, "malformed header, expected 'p edge <v> <e>'");
    }
    g.vertex_count = ParseCount(t[2], line, "vertex count");
    declared_edges = ParseCount(t[3], line, "edge count");
  };
  auto data = [&](const std::vector<std::string_view>& t, int line) {
    last_line = line;
    if (t.size() != 3 || t[0] != "e") {
      throw ParseError(line, "expected 'e <i> <j>'");
    }
    int a = ParseCount(t[1], line, "vertex index");
    int b = ParseCount(t[2], line, "vertex index");
    if (a < 1 || b < 1 || a > g.vertex_count || b > g.vertex_count) {
      throw ParseError(line, "vertex index out of range");
    }
    if (a == b) throw ParseError(line, "self-loop");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      if (options.strict) throw ParseError(line, "duplicate edge");
      return;
    }
    g.edges.emplace_back(a, b);
  };
  ScanLines(text, nullptr, header, data);
  if (options.strict && static_cast<int>(g.edges.size()) != declared_edges) {
    throw ParseError(last_line, "header declares " +
                                    std::to_string(declared_edges) +
                                    " edges, found " +
                                    std::to_string(g.edges.size()));
  }
  return g;
}

std::string WriteGraph(const GraphInstance& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count << ' ' << g.edges.size() << '\n';
  for (const auto& [a, b] : g.edges) out << "e " << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace upmax
