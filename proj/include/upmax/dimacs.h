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

// DIMACS CNF / WCNF formulas and DIMACS edge-list graphs.
//
// Tokens are separated by any whitespace and clauses may span lines. Lines
// starting with 'c' are comments; a line starting with '%' ends the data.
// The empty clause, which standard DIMACS cannot express, is written as a
// clause line holding only the terminating 0.

#ifndef UPMAX_DIMACS_H_
#define UPMAX_DIMACS_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upmax/formula.h"

namespace upmax {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParseOptions {
  // Strict parsing rejects clause-count mismatches, out-of-range literals
  // and unterminated clauses; lenient parsing warns and carries on.
  bool strict = true;
};

struct ParsedInstance {
  Formula formula;
  std::vector<std::string> comments;
  int declared_variables = 0;
  int declared_clauses = 0;
  bool weighted = false;
  std::optional<Weight> top;  // as declared in a wcnf header
  std::vector<std::string> warnings;
};

ParsedInstance ParseCnf(std::string_view text, const ParseOptions& options = {});
ParsedInstance ParseWcnf(std::string_view text,
                         const ParseOptions& options = {});
// Dispatches on the header.
ParsedInstance ParseDimacs(std::string_view text,
                           const ParseOptions& options = {});
ParsedInstance ReadDimacsFile(const std::string& path,
                              const ParseOptions& options = {});

// Throws PreconditionError if a clause weight is not 1.
std::string WriteCnf(const Formula& f);
// Mandatory clauses get the declared top, the total finite weight plus one.
std::string WriteWcnf(const Formula& f);

struct GraphInstance {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, first < second
};

GraphInstance ParseGraph(std::string_view text,
                         const ParseOptions& options = {});
std::string WriteGraph(const GraphInstance& g);

std::string ReadFile(const std::string& path);

}  // namespace upmax

#endif  // UPMAX_DIMACS_H_
