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

#ifndef EHPIP_EXPERIMENT_HARNESS_H_
#define EHPIP_EXPERIMENT_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ehpip/geom_core.h"

namespace ehpip {

enum class Method { kEh, kCr, kWnr };

std::string_view MethodName(Method m);
std::optional<Method> ParseMethod(std::string_view name);

// Inside verdict of `m`: EH inside flag, half-open crossing parity along +x,
// or nonzero winding.
bool MethodInside(Method m, const Polygon& poly, Point2 s,
                  const Tolerance& tol = {});

// Seedable generator with output that does not depend on the standard
// library implementation: mt19937_64 words mapped to doubles by taking the
// top 53 bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

// Seed of the independent stream for polygon `index` of a vertex count. It
// depends only on (seed, vertex_count, index), so a polygon is the same no
// matter how many polygons per count are requested.
std::uint64_t StreamSeed(std::uint64_t seed, int vertex_count,
                         std::size_t index);

// `count` rings of `vertex_count` i.i.d. uniform vertices in [0,1]^2, joined
// in generation order. Self-intersecting rings are kept.
std::vector<Polygon> GeneratePolygons(std::uint64_t seed, int vertex_count,
                                      std::size_t count);

struct Sample {
  int vertex_count = 0;
  std::size_t index = 0;
  Polygon polygon;
  Point2 query;
};

struct Dataset {
  std::uint64_t seed = 0;
  std::vector<int> vertex_counts;
  std::size_t polygons_per_count = 0;
  std::vector<Sample> samples;  // grouped by vertex count, in index order
};

// Each sample draws its vertices and then its query point from its own
// stream (see StreamSeed).
Dataset GenerateDataset(std::uint64_t seed, std::span<const int> vertex_counts,
                        std::size_t polygons_per_count);

// True if no two non-adjacent edges touch and adjacent edges meet only at
// their shared vertex. Pairwise test, O(n^2).
bool IsSimple(const Polygon& poly);

// Rows: reference verdict, columns: other verdict. n01 = reference false /
// other true, n10 = reference true / other false.
struct ContingencyTable {
  std::size_t n00 = 0;
  std::size_t n01 = 0;
  std::size_t n10 = 0;
  std::size_t n11 = 0;

  void Add(bool reference, bool other);
  std::size_t total() const { return n00 + n01 + n10 + n11; }
  std::size_t discordant() const { return n01 + n10; }

  friend bool operator==(const ContingencyTable&,
                         const ContingencyTable&) = default;
};

inline constexpr double kChiSquareCritical = 3.84;

struct McNemarResult {
  double corrected = 0.0;    // (|n01 - n10| - 1)^2 / (n01 + n10)
  double uncorrected = 0.0;  // (n01 - n10)^2 / (n01 + n10)
  bool significant = false;  // corrected >= kChiSquareCritical
};

// Absent when there are no discordant pairs.
std::optional<McNemarResult> McNemarCorrected(const ContingencyTable& t);

// Rates with the reference method taken as ground truth. Empty denominators
// give FPR 0, precision 1 and recall 1; an empty table has error rate 0.
double ErrorRate(const ContingencyTable& t);
double FalsePositiveRate(const ContingencyTable& t);
double Precision(const ContingencyTable& t);
double Recall(const ContingencyTable& t);

struct CompareOptions {
  std::vector<Method> methods = {Method::kEh, Method::kCr, Method::kWnr};
  Method base = Method::kEh;
  Tolerance tol;
  // Queries closer than this to the boundary are excluded. Defaults to
  // 10 * merge_eps when unset.
  std::optional<double> boundary_guard;
  bool measure_time = true;
  // 0 = use EH_PIP_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

struct CountSummary {
  int vertex_count = 0;
  std::size_t trials = 0;
  std::size_t excluded = 0;
};

struct PairRow {
  int vertex_count = 0;
  Method reference = Method::kEh;
  Method other = Method::kEh;
  ContingencyTable table;
  std::optional<McNemarResult> mcnemar;
  double error_rate = 0.0;
  double fpr = 0.0;
  double precision = 1.0;
  double recall = 1.0;
};

struct TimingRow {
  int vertex_count = 0;
  Method method = Method::kEh;
  double mean_s = 0.0;  // per classification, wall clock
};

struct ComparisonReport {
  std::uint64_t seed = 0;
  Method base = Method::kEh;
  std::vector<Method> methods;
  std::vector<CountSummary> counts;
  std::vector<PairRow> rows;
  std::vector<TimingRow> timings;  // empty unless measure_time
};

// The method pairs compared: (base, m) for every requested m, then pairs of
// non-base methods in request order.
std::vector<std::pair<Method, Method>> ComparisonPairs(
    std::span<const Method> methods, Method base);

ComparisonReport Compare(const Dataset& dataset, const CompareOptions& options);

struct BenchOptions {
  std::vector<Method> methods = {Method::kEh, Method::kCr, Method::kWnr};
  Tolerance tol;
  int warmup_rounds = 1;
  int repetitions = 5;  // classifications timed back to back per sample
};

struct BenchRow {
  Method method = Method::kEh;
  int vertex_count = 0;
  std::size_t samples = 0;
  double mean_s = 0.0;
  double median_s = 0.0;
  double p95_s = 0.0;
};

// time(2n) / time(n) on medians, for consecutive counts that double.
struct GrowthRatio {
  Method method = Method::kEh;
  int from_count = 0;
  int to_count = 0;
  double ratio = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<GrowthRatio> ratios;
};

// Single-threaded timing of every sample with every method.
BenchReport Bench(const Dataset& dataset, const BenchOptions& options = {});

// Worker count for data-parallel loops: EH_PIP_THREADS if set and positive,
// otherwise the hardware concurrency (at least 1).
unsigned DefaultThreadCount();

}  // namespace ehpip

#endif  // EHPIP_EXPERIMENT_HARNESS_H_
