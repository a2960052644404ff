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

#include <gtest/gtest.h>

#include "upmax/gen.h"

namespace upmax {
namespace {

const std::string kData = UPMAX_TEST_DATA;

BenchOptions Options(std::vector<Variant> variants, int jobs = 1) {
  BenchOptions o;
  o.variants = std::move(variants);
  o.jobs = jobs;
  return o;
}

TEST(ManifestTest, FilesSpecsAndComments) {
  const auto list = ParseManifest(
      "# corpus\n\nksat 6 20 2 1\nthree_conflicts.cnf  # inline\n"
      "maxcut 5 6 2\ncolor3 4 0.5 9\n",
      "/data");
  ASSERT_EQ(list.size(), 4u);
  EXPECT_EQ(list[0].name, "ksat-6-20-2-1");
  EXPECT_TRUE(list[0].generated);
  EXPECT_EQ(list[1].name, "three_conflicts.cnf");
  EXPECT_EQ(list[1].source, "/data/three_conflicts.cnf");
  EXPECT_FALSE(list[1].generated);
  EXPECT_EQ(list[2].name, "maxcut-5-6-2");
  EXPECT_EQ(list[3].name, "color3-4-0.5-9");
}

TEST(ManifestTest, LoadInstance) {
  const auto list = ParseManifest("ksat 6 20 2 1\nmaxcut 5 6 2\n");
  EXPECT_EQ(WriteCnf(LoadInstance(list[0])), WriteCnf(RandomMaxKSat(6, 20, 2, 1)));
  EXPECT_EQ(LoadInstance(list[1]).num_active_clauses(), 12);
  EXPECT_THROW(LoadInstance({"bad", "ksat 3 x 2 1", true}), Error);
}

TEST(RunBenchTest, TwoInstancesTwoVariantsGiveFourRows) {
  const auto list =
      ParseManifest("ksat 6 20 2 1\nthree_conflicts.cnf\n", kData);
  const auto rows = RunBench(list, Options({Variant::kMaxSat0, Variant::kMaxSatZ}));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].instance, "ksat-6-20-2-1");
  EXPECT_EQ(rows[0].variant, Variant::kMaxSat0);
  EXPECT_EQ(rows[1].variant, Variant::kMaxSatZ);
  EXPECT_EQ(rows[0].optimum, rows[1].optimum);
  EXPECT_EQ(rows[2].optimum, 3);
  EXPECT_EQ(rows[3].optimum, 3);
  for (const BenchRow& r : rows) EXPECT_EQ(r.status, "OPTIMUM");
}

TEST(RunBenchTest, FailingInstanceYieldsErrorRows) {
  const auto list = ParseManifest("missing.cnf\nksat 4 8 2 3\n", kData);
  const auto rows = RunBench(list, Options({Variant::kMaxSat12, Variant::kMaxSatZ}));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].status, "ERROR");
  EXPECT_EQ(rows[1].status, "ERROR");
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_EQ(rows[2].status, "OPTIMUM");
}

TEST(RunBenchTest, AllVariantsAgree) {
  const auto rows = RunBench(ParseManifest("ksat 12 70 2 4\ncolor3 5 0.6 1\n"),
                             BenchOptions{});
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].optimum, rows[i - i % 4].optimum);
  }
}

// Property: parallel runs produce the same rows as a sequential run, apart
// from wall time.
TEST(RunBenchTest, ParallelMatchesSequential) {
  const auto list = ParseManifest(
      "ksat 10 60 2 1\nksat 10 60 2 2\nksat 10 40 3 3\nmaxcut 6 9 4\n"
      "color3 5 0.7 5\nthree_conflicts.cnf\n",
      kData);
  auto strip = [](std::vector<BenchRow> rows) {
    for (BenchRow& r : rows) r.time_ms = 0;
    return ToCsv(rows);
  };
  const BenchOptions seq;
  BenchOptions par;
  par.jobs = 4;
  EXPECT_EQ(strip(RunBench(list, seq)), strip(RunBench(list, par)));
}

TEST(CsvTest, HeaderAndLine) {
  EXPECT_EQ(CsvHeader(),
            "instance,variant,optimum,branches,time_ms,rule_r1,rule_r2,rule_r3,"
            "rule_r4,rule_r5,rule_r6,status");
  BenchRow row;
  row.instance = "a";
  row.variant = Variant::kMaxSat1234;
  row.optimum = 7;
  row.branches = 12;
  row.time_ms = 1.5;
  row.rules = {1, 2, 3, 4, 5, 6};
  row.status = "OPTIMUM";
  EXPECT_EQ(CsvLine(row), "a,1234,7,12,1.500,1,2,3,4,5,6,OPTIMUM");
  row.optimum = kTop;
  row.status = "UNSATISFIABLE";
  EXPECT_EQ(CsvLine(row), "a,1234,TOP,12,1.500,1,2,3,4,5,6,UNSATISFIABLE");
  EXPECT_EQ(ToCsv({}), CsvHeader() + "\n");
}

}  // namespace
}  // namespace upmax
