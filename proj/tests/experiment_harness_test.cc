// Copyright 2026 The ehpip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ehpip/experiment_harness.h"

#include <set>

#include "fixtures.h"
#include "gtest/gtest.h"

namespace ehpip {
namespace {

TEST(MethodTest, NamesRoundTrip) {
  for (Method m : {Method::kEh, Method::kCr, Method::kWnr}) {
    EXPECT_EQ(ParseMethod(MethodName(m)), m);
  }
  EXPECT_FALSE(ParseMethod("ray").has_value());
}

TEST(RngTest, FixedStream) {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const double x = a.Uniform01();
    EXPECT_EQ(x, b.Uniform01());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    (void)c.Uniform01();
  }
  EXPECT_NE(Rng(42).Uniform01(), Rng(43).Uniform01());
}

TEST(GeneratePolygonsTest, DeterministicForSeed) {
  const auto a = GeneratePolygons(42, 4, 2);
  const auto b = GeneratePolygons(42, 4, 2);
  ASSERT_EQ(a.size(), 2u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].size(), 4u);
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_EQ(a[i][k], b[i][k]);
      EXPECT_GE(a[i][k].x, 0.0);
      EXPECT_LT(a[i][k].x, 1.0);
    }
  }
  EXPECT_NE(GeneratePolygons(43, 4, 1)[0][0], a[0][0]);
}

TEST(GeneratePolygonsTest, PrefixStable) {
  const auto few = GeneratePolygons(7, 8, 3);
  const auto many = GeneratePolygons(7, 8, 10);
  for (std::size_t i = 0; i < few.size(); ++i) {
    for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(few[i][k], many[i][k]);
  }
}

TEST(GeneratePolygonsTest, RejectsTooFewVertices) {
  EXPECT_THROW(GeneratePolygons(1, 2, 1), std::invalid_argument);
}

TEST(GeneratePolygonsTest, TrianglesAreSimpleLargeRingsOftenAreNot) {
  for (const Polygon& p : GeneratePolygons(5, 3, 200)) {
    EXPECT_TRUE(IsSimple(p));
  }
  int crossing = 0;
  for (const Polygon& p : GeneratePolygons(5, 64, 50)) {
    if (!IsSimple(p)) ++crossing;
  }
  EXPECT_GT(crossing, 0);
}

TEST(IsSimpleTest, Examples) {
  EXPECT_TRUE(IsSimple(testing::UnitSquare()));
  EXPECT_TRUE(IsSimple(testing::Triangle()));
  EXPECT_FALSE(IsSimple(testing::Pentagram()));
  EXPECT_FALSE(IsSimple(testing::PrisonSpiral()));
  EXPECT_FALSE(IsSimple(Polygon::Create({{0, 0}, {1, 1}, {1, 0}, {0, 1}})));
}

TEST(GenerateDatasetTest, LayoutAndDeterminism) {
  const std::vector<int> counts = {4, 8};
  const Dataset a = GenerateDataset(9, counts, 3);
  const Dataset b = GenerateDataset(9, counts, 3);
  ASSERT_EQ(a.samples.size(), 6u);
  EXPECT_EQ(a.samples[0].vertex_count, 4);
  EXPECT_EQ(a.samples[3].vertex_count, 8);
  EXPECT_EQ(a.samples[4].index, 1u);
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].query, b.samples[i].query);
    EXPECT_EQ(a.samples[i].polygon.size(),
              static_cast<std::size_t>(a.samples[i].vertex_count));
  }
}

TEST(ContingencyTableTest, Add) {
  ContingencyTable t;
  t.Add(false, false);
  t.Add(false, true);
  t.Add(true, false);
  t.Add(true, false);
  t.Add(true, true);
  EXPECT_EQ(t.n00, 1u);
  EXPECT_EQ(t.n01, 1u);
  EXPECT_EQ(t.n10, 2u);
  EXPECT_EQ(t.n11, 1u);
  EXPECT_EQ(t.total(), 5u);
  EXPECT_EQ(t.discordant(), 3u);
}

TEST(McNemarTest, Examples) {
  const auto balanced = McNemarCorrected({0, 5, 5, 0});
  ASSERT_TRUE(balanced.has_value());
  EXPECT_NEAR(balanced->corrected, 0.1, 1e-12);
  EXPECT_NEAR(balanced->uncorrected, 0.0, 1e-12);
  EXPECT_FALSE(balanced->significant);

  const auto one_sided = McNemarCorrected({50, 10, 0, 40});
  ASSERT_TRUE(one_sided.has_value());
  EXPECT_NEAR(one_sided->corrected, 8.1, 1e-12);
  EXPECT_NEAR(one_sided->uncorrected, 10.0, 1e-12);
  EXPECT_TRUE(one_sided->significant);

  EXPECT_FALSE(McNemarCorrected({10, 0, 0, 10}).has_value());
}

TEST(RatesTest, Examples) {
  const ContingencyTable t{6, 1, 2, 1};
  EXPECT_DOUBLE_EQ(ErrorRate(t), 0.3);
  EXPECT_DOUBLE_EQ(FalsePositiveRate(t), 1.0 / 7.0);
  EXPECT_DOUBLE_EQ(Precision(t), 0.5);
  EXPECT_DOUBLE_EQ(Recall(t), 1.0 / 3.0);

  const ContingencyTable empty;
  EXPECT_EQ(ErrorRate(empty), 0.0);
  EXPECT_EQ(FalsePositiveRate(empty), 0.0);
  EXPECT_EQ(Precision(empty), 1.0);
  EXPECT_EQ(Recall(empty), 1.0);
}

TEST(ComparisonPairsTest, BaseFirstThenOthers) {
  const std::vector<Method> methods = {Method::kEh, Method::kCr, Method::kWnr};
  const auto pairs = ComparisonPairs(methods, Method::kEh);
  ASSERT_EQ(pairs.size(), 4u);
  EXPECT_EQ(pairs[0], std::make_pair(Method::kEh, Method::kEh));
  EXPECT_EQ(pairs[1], std::make_pair(Method::kEh, Method::kCr));
  EXPECT_EQ(pairs[2], std::make_pair(Method::kEh, Method::kWnr));
  EXPECT_EQ(pairs[3], std::make_pair(Method::kCr, Method::kWnr));
}

TEST(CompareTest, SelfComparisonHasNoDiscordance) {
  const std::vector<int> counts = {3, 16};
  const Dataset d = GenerateDataset(11, counts, 100);
  CompareOptions opts;
  opts.measure_time = false;
  const ComparisonReport r = Compare(d, opts);
  for (const PairRow& row : r.rows) {
    if (row.reference == row.other) {
      EXPECT_EQ(row.table.discordant(), 0u);
      EXPECT_FALSE(row.mcnemar.has_value());
      EXPECT_EQ(row.error_rate, 0.0);
    }
  }
  EXPECT_TRUE(r.timings.empty());
}

TEST(CompareTest, TrianglesAgreeAcrossMethods) {
  const std::vector<int> counts = {3};
  const ComparisonReport r =
      Compare(GenerateDataset(12, counts, 300), {.measure_time = false});
  for (const PairRow& row : r.rows) EXPECT_EQ(row.table.discordant(), 0u);
}

TEST(CompareTest, CountsAreConserved) {
  const std::vector<int> counts = {4, 8};
  const Dataset d = GenerateDataset(13, counts, 50);
  const ComparisonReport r = Compare(d, {.measure_time = false});
  ASSERT_EQ(r.counts.size(), 2u);
  for (const CountSummary& c : r.counts) {
    EXPECT_EQ(c.trials, 50u);
    for (const PairRow& row : r.rows) {
      if (row.vertex_count == c.vertex_count) {
        EXPECT_EQ(row.table.total() + c.excluded, c.trials);
      }
    }
  }
}

TEST(CompareTest, WindingDisagreesWithEvenOddOnLargeRings) {
  const std::vector<int> counts = {64};
  const ComparisonReport r =
      Compare(GenerateDataset(14, counts, 300), {.measure_time = false});
  bool found = false;
  for (const PairRow& row : r.rows) {
    if (row.reference != Method::kEh || row.other != Method::kWnr) continue;
    found = true;
    // WNR is never "outside" where even-odd says "inside".
    EXPECT_EQ(row.table.n10, 0u);
    ASSERT_TRUE(row.mcnemar.has_value());
    EXPECT_GT(row.mcnemar->corrected, kChiSquareCritical);
  }
  EXPECT_TRUE(found);
}

TEST(CompareTest, IndependentOfThreadCount) {
  const std::vector<int> counts = {8, 16};
  const Dataset d = GenerateDataset(15, counts, 80);
  CompareOptions one{.measure_time = false, .threads = 1};
  CompareOptions four{.measure_time = false, .threads = 4};
  const ComparisonReport a = Compare(d, one);
  const ComparisonReport b = Compare(d, four);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].table, b.rows[i].table);
  }
}

TEST(CompareTest, TimingsReported) {
  const std::vector<int> counts = {8};
  const ComparisonReport r = Compare(GenerateDataset(16, counts, 20), {});
  EXPECT_EQ(r.timings.size(), 3u);
  for (const TimingRow& t : r.timings) EXPECT_GT(t.mean_s, 0.0);
}

TEST(BenchTest, RowsAndRatios) {
  const std::vector<int> counts = {8, 16, 32};
  BenchOptions opts;
  opts.repetitions = 2;
  const BenchReport r = Bench(GenerateDataset(17, counts, 20), opts);
  EXPECT_EQ(r.rows.size(), 9u);
  for (const BenchRow& row : r.rows) {
    EXPECT_EQ(row.samples, 20u);
    EXPECT_GT(row.median_s, 0.0);
    EXPECT_LE(row.median_s, row.p95_s);
  }
  EXPECT_EQ(r.ratios.size(), 6u);
  std::set<std::pair<int, int>> spans;
  for (const GrowthRatio& g : r.ratios) spans.insert({g.from_count, g.to_count});
  EXPECT_EQ(spans, (std::set<std::pair<int, int>>{{8, 16}, {16, 32}}));
}

}  // namespace
}  // namespace ehpip
