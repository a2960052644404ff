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

// Variant-comparison harness.
//
// A manifest lists one instance per line; '#' starts a comment. A line is
// either a DIMACS file path (relative paths resolve against the manifest's
// directory) or a generator spec:
//
//   ksat <n> <m> <k> <seed>
//   maxcut <vertices> <edges> <seed>
//   color3 <vertices> <density> <seed>

#ifndef UPMAX_BENCH_H_
#define UPMAX_BENCH_H_

#include <array>
#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "upmax/formula.h"
#include "upmax/rules.h"

namespace upmax {

struct BenchInstance {
  std::string name;
  std::string source;  // file path or generator spec
  bool generated = false;
};

std::vector<BenchInstance> ParseManifest(std::string_view text,
                                         const std::string& base_dir = "");

// Reads or generates the formula. Throws on malformed specs or files.
Formula LoadInstance(const BenchInstance& instance);

struct BenchRow {
  std::string instance;
  Variant variant = Variant::kMaxSatZ;
  Weight optimum = 0;
  std::int64_t branches = 0;
  double time_ms = 0;
  std::array<std::int64_t, kNumRules> rules{};
  std::string status;  // OPTIMUM, TIMEOUT, UNSATISFIABLE or ERROR
  std::int64_t mass_audit_failures = 0;
  std::string error;
};

struct BenchOptions {
  std::vector<Variant> variants{kAllVariants.begin(), kAllVariants.end()};
  int jobs = 1;
  std::optional<std::chrono::duration<double>> timeout;
};

// One row per instance and variant, in manifest order then variant order.
// Each instance is loaded once per worker; rows of a failing instance carry
// status ERROR.
std::vector<BenchRow> RunBench(const std::vector<BenchInstance>& instances,
                               const BenchOptions& options);

std::string CsvHeader();
std::string CsvLine(const BenchRow& row);
std::string ToCsv(const std::vector<BenchRow>& rows);

}  // namespace upmax

#endif  // UPMAX_BENCH_H_
