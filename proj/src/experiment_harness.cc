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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>

#include "ehpip/baselines.h"
#include "ehpip/eh_classifier.h"

namespace ehpip {

std::string_view MethodName(Method m) {
  switch (m) {
    case Method::kEh:
      return "eh";
    case Method::kCr:
      return "cr";
    case Method::kWnr:
      return "wnr";
  }
  return "?";
}

std::optional<Method> ParseMethod(std::string_view name) {
  if (name == "eh") return Method::kEh;
  if (name == "cr") return Method::kCr;
  if (name == "wnr") return Method::kWnr;
  return std::nullopt;
}

bool MethodInside(Method m, const Polygon& poly, Point2 s,
                  const Tolerance& tol) {
  switch (m) {
    case Method::kEh:
      return Classify(poly, s, tol).inside;
    case Method::kCr:
      return CrossingNumber(poly, s, {}, tol).inside;
    case Method::kWnr:
      return WindingNumber(poly, s, tol).inside_nonzero;
  }
  return false;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t StreamSeed(std::uint64_t seed, int vertex_count,
                         std::size_t index) {
  std::uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ static_cast<std::uint64_t>(vertex_count));
  return SplitMix64(h ^ static_cast<std::uint64_t>(index));
}

namespace {

Sample DrawSample(std::uint64_t seed, int vertex_count, std::size_t index) {
  Rng rng(StreamSeed(seed, vertex_count, index));
  std::vector<Point2> vertices(static_cast<std::size_t>(vertex_count));
  for (Point2& p : vertices) {
    p.x = rng.Uniform01();
    p.y = rng.Uniform01();
  }
  Point2 query;
  query.x = rng.Uniform01();
  query.y = rng.Uniform01();
  return Sample{vertex_count, index, Polygon::Create(std::move(vertices)),
                query};
}

}  // namespace

std::vector<Polygon> GeneratePolygons(std::uint64_t seed, int vertex_count,
                                      std::size_t count) {
  if (vertex_count < 3) {
    throw std::invalid_argument("vertex_count must be at least 3");
  }
  std::vector<Polygon> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(DrawSample(seed, vertex_count, i).polygon);
  }
  return out;
}

Dataset GenerateDataset(std::uint64_t seed, std::span<const int> vertex_counts,
                        std::size_t polygons_per_count) {
  if (polygons_per_count == 0) {
    throw std::invalid_argument("polygons_per_count must be positive");
  }
  Dataset d;
  d.seed = seed;
  d.vertex_counts.assign(vertex_counts.begin(), vertex_counts.end());
  d.polygons_per_count = polygons_per_count;
  for (int n : vertex_counts) {
    if (n < 3) throw std::invalid_argument("vertex counts must be at least 3");
    for (std::size_t i = 0; i < polygons_per_count; ++i) {
      d.samples.push_back(DrawSample(seed, n, i));
    }
  }
  return d;
}

namespace {

int Orient(Point2 a, Point2 b, Point2 c) {
  const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0.0) - (v < 0.0);
}

bool OnSegment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool SegmentsTouch(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = Orient(a, b, c);
  const int o2 = Orient(a, b, d);
  const int o3 = Orient(c, d, a);
  const int o4 = Orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && OnSegment(a, b, c)) return true;
  if (o2 == 0 && OnSegment(a, b, d)) return true;
  if (o3 == 0 && OnSegment(c, d, a)) return true;
  if (o4 == 0 && OnSegment(c, d, b)) return true;
  return false;
}

}  // namespace

bool IsSimple(const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly.edge_start(i);
    const Point2 b = poly.edge_end(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2 c = poly.edge_start(j);
      const Point2 d = poly.edge_end(j);
      const bool next = j == i + 1;
      const bool wrap = i == 0 && j == n - 1;
      if (next || wrap) {
        // Adjacent edges share one vertex; they must not fold back onto
        // each other.
        const Point2 shared = next ? b : a;
        const Point2 p = next ? a : b;
        const Point2 q = next ? d : c;
        if (Orient(shared, p, q) == 0 &&
            ((p.x - shared.x) * (q.x - shared.x) +
             (p.y - shared.y) * (q.y - shared.y)) > 0.0) {
          return false;
        }
        continue;
      }
      if (SegmentsTouch(a, b, c, d)) return false;
    }
  }
  return true;
}

void ContingencyTable::Add(bool reference, bool other) {
  if (reference) {
    ++(other ? n11 : n10);
  } else {
    ++(other ? n01 : n00);
  }
}

std::optional<McNemarResult> McNemarCorrected(const ContingencyTable& t) {
  const double disc = static_cast<double>(t.discordant());
  if (disc == 0.0) return std::nullopt;
  const double diff =
      static_cast<double>(t.n01) - static_cast<double>(t.n10);
  McNemarResult r;
  r.uncorrected = diff * diff / disc;
  const double corr = std::abs(diff) - 1.0;
  r.corrected = corr * corr / disc;
  r.significant = r.corrected >= kChiSquareCritical;
  return r;
}

double ErrorRate(const ContingencyTable& t) {
  if (t.total() == 0) return 0.0;
  return static_cast<double>(t.discordant()) / static_cast<double>(t.total());
}

double FalsePositiveRate(const ContingencyTable& t) {
  const std::size_t negatives = t.n00 + t.n01;
  if (negatives == 0) return 0.0;
  return static_cast<double>(t.n01) / static_cast<double>(negatives);
}

double Precision(const ContingencyTable& t) {
  const std::size_t predicted = t.n11 + t.n01;
  if (predicted == 0) return 1.0;
  return static_cast<double>(t.n11) / static_cast<double>(predicted);
}

double Recall(const ContingencyTable& t) {
  const std::size_t actual = t.n11 + t.n10;
  if (actual == 0) return 1.0;
  return static_cast<double>(t.n11) / static_cast<double>(actual);
}

unsigned DefaultThreadCount() {
  if (const char* env = std::getenv("EH_PIP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::pair<Method, Method>> ComparisonPairs(
    std::span<const Method> methods, Method base) {
  std::vector<std::pair<Method, Method>> pairs;
  for (Method m : methods) pairs.emplace_back(base, m);
  for (std::size_t i = 0; i < methods.size(); ++i) {
    if (methods[i] == base) continue;
    for (std::size_t j = i + 1; j < methods.size(); ++j) {
      if (methods[j] == base || methods[j] == methods[i]) continue;
      pairs.emplace_back(methods[i], methods[j]);
    }
  }
  return pairs;
}

namespace {

constexpr std::size_t kMethodSlots = 3;

std::size_t Slot(Method m) { return static_cast<std::size_t>(m); }

struct TrialResult {
  bool excluded = true;
  bool inside[kMethodSlots] = {false, false, false};
};

template <typename Fn>
void ParallelFor(std::size_t n, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, n == 0 ? 1 : n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) fn(i);
    });
  }
  for (std::thread& w : workers) w.join();
}

// Every method that appears in the report, deduplicated in request order.
std::vector<Method> UsedMethods(std::span<const Method> methods, Method base) {
  std::vector<Method> used{base};
  for (Method m : methods) {
    if (std::find(used.begin(), used.end(), m) == used.end()) used.push_back(m);
  }
  return used;
}

}  // namespace

ComparisonReport Compare(const Dataset& dataset,
                         const CompareOptions& options) {
  const Tolerance& tol = options.tol;
  const double guard = options.boundary_guard.value_or(10.0 * tol.merge_eps);
  const std::vector<Method> used = UsedMethods(options.methods, options.base);
  const unsigned threads =
      options.threads == 0 ? DefaultThreadCount() : options.threads;

  std::vector<TrialResult> results(dataset.samples.size());
  ParallelFor(dataset.samples.size(), threads, [&](std::size_t i) {
    const Sample& s = dataset.samples[i];
    TrialResult r;
    if (BoundaryDistance(s.polygon, s.query) <= guard) {
      results[i] = r;
      return;
    }
    try {
      for (Method m : used) {
        r.inside[Slot(m)] = MethodInside(m, s.polygon, s.query, tol);
      }
      r.excluded = false;
    } catch (const std::exception&) {
      r.excluded = true;
    }
    results[i] = r;
  });

  ComparisonReport report;
  report.seed = dataset.seed;
  report.base = options.base;
  report.methods = options.methods;
  const auto pairs = ComparisonPairs(options.methods, options.base);

  // Fold in sample order so the report does not depend on the thread count.
  std::map<int, std::vector<ContingencyTable>> tables;
  std::map<int, CountSummary> summaries;
  for (int n : dataset.vertex_counts) {
    tables[n].assign(pairs.size(), {});
    summaries[n] = {n, 0, 0};
  }
  for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
    const int n = dataset.samples[i].vertex_count;
    CountSummary& summary = summaries[n];
    ++summary.trials;
    if (results[i].excluded) {
      ++summary.excluded;
      continue;
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      tables[n][p].Add(results[i].inside[Slot(pairs[p].first)],
                       results[i].inside[Slot(pairs[p].second)]);
    }
  }
  for (int n : dataset.vertex_counts) {
    report.counts.push_back(summaries[n]);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const ContingencyTable& t = tables[n][p];
      PairRow row;
      row.vertex_count = n;
      row.reference = pairs[p].first;
      row.other = pairs[p].second;
      row.table = t;
      row.mcnemar = McNemarCorrected(t);
      row.error_rate = ErrorRate(t);
      row.fpr = FalsePositiveRate(t);
      row.precision = Precision(t);
      row.recall = Recall(t);
      report.rows.push_back(row);
    }
  }

  if (options.measure_time) {
    using Clock = std::chrono::steady_clock;
    for (int n : dataset.vertex_counts) {
      for (Method m : used) {
        double total = 0.0;
        std::size_t timed = 0;
        for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
          const Sample& s = dataset.samples[i];
          if (s.vertex_count != n || results[i].excluded) continue;
          const auto t0 = Clock::now();
          volatile bool sink = MethodInside(m, s.polygon, s.query, tol);
          (void)sink;
          total += std::chrono::duration<double>(Clock::now() - t0).count();
          ++timed;
        }
        report.timings.push_back(
            {n, m, timed == 0 ? 0.0 : total / static_cast<double>(timed)});
      }
    }
  }
  return report;
}

namespace {

double Percentile(std::vector<double> v, double q) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return v[lo] + (v[hi] - v[lo]) * frac;
}

}  // namespace

BenchReport Bench(const Dataset& dataset, const BenchOptions& options) {
  using Clock = std::chrono::steady_clock;
  const int reps = std::max(1, options.repetitions);
  BenchReport report;
  for (Method m : options.methods) {
    for (int n : dataset.vertex_counts) {
      std::vector<const Sample*> group;
      for (const Sample& s : dataset.samples) {
        if (s.vertex_count == n) group.push_back(&s);
      }
      for (int w = 0; w < options.warmup_rounds; ++w) {
        for (const Sample* s : group) {
          try {
            volatile bool sink =
                MethodInside(m, s->polygon, s->query, options.tol);
            (void)sink;
          } catch (const std::exception&) {
          }
        }
      }
      std::vector<double> times;
      times.reserve(group.size());
      for (const Sample* s : group) {
        try {
          const auto t0 = Clock::now();
          for (int r = 0; r < reps; ++r) {
            volatile bool sink =
                MethodInside(m, s->polygon, s->query, options.tol);
            (void)sink;
          }
          const double dt =
              std::chrono::duration<double>(Clock::now() - t0).count();
          times.push_back(dt / reps);
        } catch (const std::exception&) {
        }
      }
      BenchRow row;
      row.method = m;
      row.vertex_count = n;
      row.samples = times.size();
      if (!times.empty()) {
        double sum = 0.0;
        for (double t : times) sum += t;
        row.mean_s = sum / static_cast<double>(times.size());
        row.median_s = Percentile(times, 0.5);
        row.p95_s = Percentile(times, 0.95);
      }
      report.rows.push_back(row);
    }
  }
  for (Method m : options.methods) {
    for (const BenchRow& a : report.rows) {
      if (a.method != m) continue;
      for (const BenchRow& b : report.rows) {
        if (b.method == m && b.vertex_count == 2 * a.vertex_count &&
            a.median_s > 0.0) {
          report.ratios.push_back(
              {m, a.vertex_count, b.vertex_count, b.median_s / a.median_s});
        }
      }
    }
  }
  return report;
}

}  // namespace ehpip
