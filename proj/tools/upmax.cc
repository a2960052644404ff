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

// Command-line front end: solve, gen, bench and oracle subcommands.
//
// Exit codes: 0 when every requested result is a proven optimum, 1 on
// usage or input errors, 2 on timeout, 3 when mandatory clauses conflict.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "upmax/bench.h"
#include "upmax/dimacs.h"
#include "upmax/gen.h"
#include "upmax/oracle.h"
#include "upmax/solver.h"

namespace upmax {
namespace {

constexpr int kExitError = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitUnsatisfiable = 3;
constexpr int kSeedcheckMaxVariables = 18;

std::string CostText(Weight w) { return IsTop(w) ? "TOP" : std::to_string(w); }

void PrintAssignment(std::ostream& out, const Assignment& a) {
  out << 'v';
  for (int lit : a.ToDimacs()) out << ' ' << lit;
  out << '\n';
}

ParsedInstance Load(const std::string& path, bool strict) {
  ParseOptions options;
  options.strict = strict;
  ParsedInstance p = ReadDimacsFile(path, options);
  for (const std::string& w : p.warnings) std::cout << "c warning: " << w << '\n';
  return p;
}

void WriteOrPrint(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

struct SolveArgs {
  std::string path;
  std::string variant = "z";
  std::optional<Weight> ub;
  std::optional<double> timeout;
  bool stats = false;
  std::string trace;
  bool seedcheck = false;
  bool strict = false;
};

int RunSolve(const SolveArgs& args) {
  const ParsedInstance input = Load(args.path, args.strict);
  const Variant variant = ParseVariant(args.variant);
  SolveOptions options;
  options.config = SolverConfig::ForVariant(variant);
  options.initial_ub = args.ub;
  if (args.timeout) options.timeout = std::chrono::duration<double>(*args.timeout);
  std::ofstream trace;
  if (!args.trace.empty()) {
    trace.open(args.trace);
    if (!trace) throw Error("cannot write '" + args.trace + "'");
    options.observer = [&trace](const Formula&, const RuleApplication& app) {
      trace << TraceLine(app) << '\n';
    };
  }

  const SolveResult r = Solve(input.formula, options);
  std::cout << "o " << CostText(r.optimum) << '\n';
  if (args.stats) {
    std::istringstream lines(StatsRecord(args.path, variant, r));
    for (std::string line; std::getline(lines, line);) {
      std::cout << "c " << line << '\n';
    }
  }
  int code = 0;
  if (args.seedcheck) {
    if (input.formula.num_variables() > kSeedcheckMaxVariables) {
      std::cout << "c seedcheck skipped: more than " << kSeedcheckMaxVariables
                << " variables\n";
    } else if (r.status == SolveStatus::kTimedOut) {
      std::cout << "c seedcheck skipped: search timed out\n";
    } else {
      const Weight expected = BruteForceOptimum(input.formula).cost;
      const bool ok = expected == r.optimum;
      std::cout << "c seedcheck oracle " << CostText(expected)
                << (ok ? " agrees\n" : " DISAGREES\n");
      if (!ok) code = kExitError;
    }
  }
  switch (r.status) {
    case SolveStatus::kOptimal:
      PrintAssignment(std::cout, r.best);
      std::cout << "s OPTIMUM FOUND\n";
      return code;
    case SolveStatus::kTimedOut:
      PrintAssignment(std::cout, r.best);
      std::cout << "s UNKNOWN\nc timeout: best cost found so far\n";
      return code ? code : kExitTimeout;
    case SolveStatus::kMandatoryConflict:
      std::cout << "s UNSATISFIABLE\n";
      return code ? code : kExitUnsatisfiable;
  }
  return code;
}

struct GenArgs {
  int n = 0, m = 0, k = 2, vertices = 0, edges = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string out;
  bool graph = false;
};

int RunOracle(const std::string& path, int cap, bool strict) {
  const ParsedInstance input = Load(path, strict);
  const OptimumResult r = BruteForceOptimum(input.formula, cap);
  std::cout << "o " << CostText(r.cost) << '\n';
  PrintAssignment(std::cout, r.witness);
  return 0;
}

struct BenchArgs {
  std::string manifest;
  std::string variants = "0,12,1234,z";
  std::string out;
  int jobs = 1;
  std::optional<double> timeout;
};

int RunBenchCommand(const BenchArgs& args) {
  BenchOptions options;
  options.variants.clear();
  std::istringstream names(args.variants);
  for (std::string name; std::getline(names, name, ',');) {
    options.variants.push_back(ParseVariant(name));
  }
  options.jobs = args.jobs;
  if (args.timeout) options.timeout = std::chrono::duration<double>(*args.timeout);
  const std::string dir =
      std::filesystem::path(args.manifest).parent_path().string();
  const auto rows =
      RunBench(ParseManifest(ReadFile(args.manifest), dir), options);
  WriteOrPrint(ToCsv(rows), args.out);
  int code = 0;
  for (const BenchRow& row : rows) {
    if (row.status != "OPTIMUM") {
      std::cerr << row.instance << " (" << VariantName(row.variant)
                << "): " << row.status
                << (row.error.empty() ? "" : ": " + row.error) << '\n';
      code = kExitError;
    }
  }
  return code;
}

int Main(int argc, char** argv) {
  CLI::App app{"Branch and bound Max-SAT solver with inference-rule lower bounds"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a cnf or wcnf file");
  solve_cmd->add_option("file", solve.path, "DIMACS input")->required();
  solve_cmd->add_option("--variant", solve.variant, "0, 12, 1234 or z")
      ->check(CLI::IsMember({"0", "12", "1234", "z"}));
  solve_cmd->add_option("--ub", solve.ub, "Only look for cheaper assignments")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--timeout", solve.timeout, "Seconds")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--stats", solve.stats, "Print search statistics");
  solve_cmd->add_option("--trace", solve.trace, "Write one line per rule application");
  solve_cmd->add_flag("--seedcheck", solve.seedcheck,
                      "Cross-check against exhaustive search on small inputs");
  solve_cmd->add_flag("--strict", solve.strict, "Reject header mismatches");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a benchmark instance");
  gen_cmd->require_subcommand(1);
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen_cmd->fallthrough();
  CLI::App* ksat = gen_cmd->add_subcommand("ksat", "Random Max-kSAT");
  ksat->add_option("-n", gen.n, "Variables")->required()->check(CLI::PositiveNumber);
  ksat->add_option("-m", gen.m, "Clauses")->required()->check(CLI::NonNegativeNumber);
  ksat->add_option("-k", gen.k, "Clause length")->capture_default_str();
  CLI::App* maxcut = gen_cmd->add_subcommand("maxcut", "Max-Cut of a random connected graph");
  maxcut->add_option("-v", gen.vertices, "Vertices")->required()->check(CLI::PositiveNumber);
  maxcut->add_option("-e", gen.edges, "Edges")->required()->check(CLI::NonNegativeNumber);
  maxcut->add_flag("--graph", gen.graph, "Emit the graph instead of the encoding");
  CLI::App* color3 = gen_cmd->add_subcommand("color3", "3-coloring of a 3-colorable graph");
  color3->add_option("-v", gen.vertices, "Vertices")->required()->check(CLI::PositiveNumber);
  color3->add_option("--density", gen.density, "Cross-class edge probability")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  color3->add_flag("--graph", gen.graph, "Emit the graph instead of the encoding");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Compare variants, print CSV");
  bench_cmd->add_option("manifest", bench.manifest, "Instance list")->required();
  bench_cmd->add_option("--variants", bench.variants, "Comma-separated variants")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV file (default stdout)");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--timeout", bench.timeout, "Seconds per solve")
      ->check(CLI::NonNegativeNumber);

  std::string oracle_path;
  int oracle_cap = kDefaultOracleCap;
  bool oracle_strict = false;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Exhaustive optimum of a small instance");
  oracle_cmd->add_option("file", oracle_path, "DIMACS input")->required();
  oracle_cmd->add_option("--cap", oracle_cap, "Largest variable count to enumerate")
      ->capture_default_str();
  oracle_cmd->add_flag("--strict", oracle_strict, "Reject header mismatches");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*oracle_cmd) return RunOracle(oracle_path, oracle_cap, oracle_strict);
    if (*bench_cmd) return RunBenchCommand(bench);
    if (*ksat) {
      WriteOrPrint(WriteCnf(RandomMaxKSat(gen.n, gen.m, gen.k, gen.seed)), gen.out);
    } else {
      const GraphInstance g =
          *maxcut ? RandomConnectedGraph(gen.vertices, gen.edges, gen.seed)
                  : RandomKColorableGraph(gen.vertices, gen.density, gen.seed);
      if (gen.graph) {
        WriteOrPrint(WriteGraph(g), gen.out);
      } else {
        WriteOrPrint(WriteCnf(*maxcut ? EncodeMaxCut(g) : EncodeThreeColoring(g)),
                     gen.out);
      }
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "upmax: parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "upmax: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace
}  // namespace upmax

int main(int argc, char** argv) { return upmax::Main(argc, argv); }
