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

#include "upmax/bench.h"

#include <atomic>
#include <charconv>
#include <filesystem>
#include <sstream>
#include <thread>

#include "upmax/dimacs.h"
#include "upmax/gen.h"
#include "upmax/solver.h"

namespace upmax {
namespace {

std::vector<std::string> Words(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int ToInt(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    throw PreconditionError("bad count '" + s + "'");
  }
  return v;
}

std::uint64_t ToSeed(const std::string& s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw PreconditionError("bad seed '" + s + "'");
  }
  return v;
}

double ToDensity(const std::string& s) {
  std::istringstream in(s);
  double v = 0;
  if (!(in >> v) || !in.eof()) throw PreconditionError("bad density '" + s + "'");
  return v;
}

std::string Join(const std::vector<std::string>& words, char sep) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += sep;
    out += w;
  }
  return out;
}

}  // namespace

std::vector<BenchInstance> ParseManifest(std::string_view text,
                                         const std::string& base_dir) {
  std::vector<BenchInstance> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    line = line.substr(0, line.find('#'));
    const std::vector<std::string> words = Words(line);
    if (words.empty()) continue;
    const std::string& kind = words[0];
    if (kind == "ksat" || kind == "maxcut" || kind == "color3") {
      out.push_back({Join(words, '-'), Join(words, ' '), true});
      continue;
    }
    std::filesystem::path path(Join(words, ' '));
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    out.push_back({path.filename().string(), path.string(), false});
  }
  return out;
}

Formula LoadInstance(const BenchInstance& instance) {
  if (!instance.generated) {
    ParseOptions lenient;
    lenient.strict = false;
    return ReadDimacsFile(instance.source, lenient).formula;
  }
  const std::vector<std::string> w = Words(instance.source);
  if (w[0] == "ksat" && w.size() == 5) {
    return RandomMaxKSat(ToInt(w[1]), ToInt(w[2]), ToInt(w[3]), ToSeed(w[4]));
  }
  if (w[0] == "maxcut" && w.size() == 4) {
    return EncodeMaxCut(RandomConnectedGraph(ToInt(w[1]), ToInt(w[2]), ToSeed(w[3])));
  }
  if (w[0] == "color3" && w.size() == 4) {
    return EncodeThreeColoring(
        RandomKColorableGraph(ToInt(w[1]), ToDensity(w[2]), ToSeed(w[3])));
  }
  throw PreconditionError("malformed generator spec '" + instance.source + "'");
}

std::vector<BenchRow> RunBench(const std::vector<BenchInstance>& instances,
                               const BenchOptions& options) {
  const std::size_t per = options.variants.size();
  std::vector<BenchRow> rows(instances.size() * per);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      std::optional<Formula> f;
      std::string error;
      try {
        f = LoadInstance(instances[i]);
      } catch (const std::exception& e) {
        error = e.what();
      }
      for (std::size_t j = 0; j < per; ++j) {
        BenchRow& row = rows[i * per + j];
        row.instance = instances[i].name;
        row.variant = options.variants[j];
        if (!f) {
          row.status = "ERROR";
          row.error = error;
          continue;
        }
        SolveOptions so;
        so.config = SolverConfig::ForVariant(row.variant);
        so.timeout = options.timeout;
        try {
          const SolveResult r = Solve(*f, so);
          row.optimum = r.optimum;
          row.branches = r.stats.branches;
          row.time_ms = r.stats.elapsed_ms;
          row.rules = r.stats.rule_applications;
          row.status = ToString(r.status);
          row.mass_audit_failures = r.stats.mass_audit_failures;
        } catch (const std::exception& e) {
          row.status = "ERROR";
          row.error = e.what();
        }
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return rows;
}

std::string CsvHeader() {
  return "instance,variant,optimum,branches,time_ms,rule_r1,rule_r2,rule_r3,"
         "rule_r4,rule_r5,rule_r6,status";
}

std::string CsvLine(const BenchRow& row) {
  std::ostringstream out;
  out << row.instance << ',' << VariantName(row.variant) << ','
      << (IsTop(row.optimum) ? std::string("TOP") : std::to_string(row.optimum))
      << ',' << row.branches << ',';
  out.setf(std::ios::fixed);
  out.precision(3);
  out << row.time_ms;
  for (std::int64_t c : row.rules) out << ',' << c;
  out << ',' << row.status;
  return out.str();
}

std::string ToCsv(const std::vector<BenchRow>& rows) {
  std::string out = CsvHeader() + '\n';
  for (const BenchRow& row : rows) out += CsvLine(row) + '\n';
  return out;
}

}  // namespace upmax
