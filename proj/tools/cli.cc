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

#include "cli.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ehpip/baselines.h"
#include "ehpip/dataset_io.h"
#include "ehpip/eh_classifier.h"
#include "ehpip/experiment_harness.h"
#include "json.hpp"

namespace ehpip::cli {
namespace {

using nlohmann::json;

// Bad flags or parameters; maps to kExitInputError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Point2 ParsePointArg(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("--point must look like \"x,y\", got \"" + text + "\"");
  }
  auto parse = [&](const std::string& part) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size() ||
        !std::isfinite(v)) {
      throw UsageError("bad coordinate \"" + part + "\" in --point");
    }
    return v;
  };
  return {parse(text.substr(0, comma)), parse(text.substr(comma + 1))};
}

Tolerance MakeTolerance(double merge_eps) {
  Tolerance tol;
  tol.merge_eps = merge_eps;
  if (tol.boundary_eps >= merge_eps) tol.boundary_eps = merge_eps / 10.0;
  try {
    tol.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--tolerance: ") + e.what());
  }
  return tol;
}

std::vector<Method> ParseMethods(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const std::string& n : names) {
    const std::optional<Method> m = ParseMethod(n);
    if (!m) throw UsageError("unknown method \"" + n + "\"");
    out.push_back(*m);
  }
  if (out.empty()) throw UsageError("no methods given");
  return out;
}

struct ClassifyArgs {
  std::string polygon;
  std::string point;
  std::string method = "eh";
  double ray_angle_deg = 0.0;
  bool naive_cr = false;
  double tolerance = 1e-5;
};

int RunClassify(const ClassifyArgs& a, std::ostream& out) {
  const Tolerance tol = MakeTolerance(a.tolerance);
  const std::optional<Method> method = ParseMethod(a.method);
  if (!method) throw UsageError("unknown method \"" + a.method + "\"");
  const Point2 s = ParsePointArg(a.point);
  const PolygonFile pf = ReadPolygonFile(a.polygon, tol);

  json doc = json::object();
  doc["format"] = kVerdictFormatVersion;
  doc["method"] = MethodName(*method);
  if (pf.name) doc["polygon"] = *pf.name;
  switch (*method) {
    case Method::kEh: {
      const EhVerdict v = Classify(pf.polygon, s, tol);
      doc["inside"] = v.inside;
      doc["inaccessibility"] = v.inaccessibility;
      json hits = json::array();
      for (const ChainIntersection& h : v.intersections) {
        hits.push_back({{"chain", h.chain_id}, {"y", h.y_int}});
      }
      doc["diagnostics"] = {
          {"vertex_hit", v.vertex_hit},
          {"bbox_rejected", v.bbox_rejected},
          {"cuts", v.cut_count},
          {"chains", v.chain_count},
          {"valid_chains", v.valid_chain_count},
          {"broken_pair",
           v.broken_pair
               ? json::array({v.broken_pair->first, v.broken_pair->second})
               : json(nullptr)},
          {"ignored_pairs", v.ignored_pairs},
          {"missed_chains", v.missed_chains},
          {"unpaired", v.unpaired},
          {"intersections", std::move(hits)}};
      break;
    }
    case Method::kCr: {
      CrOptions opts;
      opts.ray_angle = a.ray_angle_deg * std::numbers::pi / 180.0;
      opts.rule = a.naive_cr ? CrossingRule::kNaive : CrossingRule::kHalfOpen;
      const CrVerdict v = CrossingNumber(pf.polygon, s, opts, tol);
      doc["inside"] = v.inside;
      doc["crossings"] = v.crossings;
      doc["diagnostics"] = {{"ray_angle_deg", a.ray_angle_deg},
                            {"rule", a.naive_cr ? "naive" : "half-open"},
                            {"on_boundary", v.on_boundary}};
      break;
    }
    case Method::kWnr: {
      const WnrVerdict v = WindingNumber(pf.polygon, s, tol);
      doc["inside"] = v.inside_nonzero;
      doc["winding"] = v.winding;
      doc["diagnostics"] = {{"turns", v.turns},
                            {"on_boundary", v.on_boundary},
                            {"near_boundary", v.near_boundary}};
      break;
    }
  }
  out << doc.dump() << "\n";
  return kExitOk;
}

struct GenArgs {
  std::vector<int> vertices;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string out_dir;
};

int RunGen(const GenArgs& a, std::ostream& out) {
  if (a.count < 1) throw UsageError("--count must be at least 1");
  for (int n : a.vertices) {
    if (n < 3) throw UsageError("--vertices entries must be at least 3");
  }
  const Dataset d = GenerateDataset(a.seed, a.vertices, a.count);
  WriteDataset(d, a.out_dir);
  out << json{{"dataset", a.out_dir}, {"samples", d.samples.size()}}.dump()
      << "\n";
  return kExitOk;
}

struct CompareArgs {
  std::string dataset;
  std::vector<std::string> methods = {"eh", "cr", "wnr"};
  std::string base = "eh";
  std::string out_json = "report.json";
  double tolerance = 1e-5;
  bool no_timing = false;
};

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + path.string());
  f << text;
}

int RunCompare(const CompareArgs& a, std::ostream& out) {
  const Tolerance tol = MakeTolerance(a.tolerance);
  CompareOptions opts;
  opts.methods = ParseMethods(a.methods);
  const std::optional<Method> base = ParseMethod(a.base);
  if (!base) throw UsageError("unknown base method \"" + a.base + "\"");
  opts.base = *base;
  opts.tol = tol;
  opts.measure_time = !a.no_timing;
  const Dataset d = ReadDataset(a.dataset, tol);
  const ComparisonReport report = Compare(d, opts);

  std::filesystem::path json_path = a.out_json;
  std::filesystem::path csv_path = json_path;
  csv_path.replace_extension(".csv");
  WriteText(json_path, ReportToJson(report));
  WriteText(csv_path, ReportToCsv(report));

  out << "vertex_count\treference\tother\tn01\tn10\tchi2_corrected\t"
         "significant\terror_rate\n";
  for (const PairRow& r : report.rows) {
    out << r.vertex_count << '\t' << MethodName(r.reference) << '\t'
        << MethodName(r.other) << '\t' << r.table.n01 << '\t' << r.table.n10
        << '\t';
    if (r.mcnemar) {
      out << r.mcnemar->corrected << '\t'
          << (r.mcnemar->significant ? "yes" : "no");
    } else {
      out << "-\tno";
    }
    out << '\t' << r.error_rate << '\n';
  }
  return kExitOk;
}

struct BenchArgs {
  std::string dataset;
  std::vector<std::string> methods = {"eh", "cr", "wnr"};
  std::string out_csv = "timings.csv";
  int repetitions = 5;
  int warmup = 1;
  double tolerance = 1e-5;
};

int RunBench(const BenchArgs& a, std::ostream& out) {
  BenchOptions opts;
  opts.methods = ParseMethods(a.methods);
  opts.tol = MakeTolerance(a.tolerance);
  if (a.repetitions < 1) throw UsageError("--repetitions must be positive");
  opts.repetitions = a.repetitions;
  opts.warmup_rounds = std::max(0, a.warmup);
  const Dataset d = ReadDataset(a.dataset, opts.tol);
  const BenchReport report = Bench(d, opts);
  WriteText(a.out_csv, BenchToCsv(report));
  json ratios = json::array();
  for (const GrowthRatio& g : report.ratios) {
    ratios.push_back({{"method", MethodName(g.method)},
                      {"from", g.from_count},
                      {"to", g.to_count},
                      {"ratio", g.ratio}});
  }
  out << json{{"timings", a.out_csv}, {"ratios", std::move(ratios)}}.dump()
      << "\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Point-in-polygon classification with chain decomposition"};
  app.name(args.empty() ? "ehpip" : args.front());
  app.require_subcommand(1);

  ClassifyArgs classify;
  CLI::App* c = app.add_subcommand("classify", "Classify one point");
  c->add_option("--polygon", classify.polygon, "Polygon JSON file")->required();
  c->add_option("--point", classify.point, "Query point as x,y")->required();
  c->add_option("--method", classify.method, "eh | cr | wnr");
  c->add_option("--ray-angle", classify.ray_angle_deg,
                "Crossing-number ray angle in degrees");
  c->add_flag("--naive-cr", classify.naive_cr,
              "Count raw segment hits, vertices included");
  c->add_option("--tolerance", classify.tolerance, "Vertex merge tolerance");

  GenArgs gen;
  CLI::App* g = app.add_subcommand("gen", "Generate a random dataset");
  g->add_option("--vertices", gen.vertices, "Vertex counts, e.g. 4,8,16")
      ->required()
      ->delimiter(',');
  g->add_option("--count", gen.count, "Polygons per vertex count")->required();
  g->add_option("--seed", gen.seed, "RNG seed")->required();
  g->add_option("--out", gen.out_dir, "Output directory")->required();

  CompareArgs compare;
  CLI::App* cmp = app.add_subcommand("compare", "Compare methods on a dataset");
  cmp->add_option("--dataset", compare.dataset, "Dataset directory")
      ->required();
  cmp->add_option("--methods", compare.methods, "Methods, e.g. eh,cr,wnr")
      ->delimiter(',');
  cmp->add_option("--base", compare.base, "Reference method");
  cmp->add_option("--out", compare.out_json,
                  "Report JSON path; CSV is written next to it");
  cmp->add_option("--tolerance", compare.tolerance, "Vertex merge tolerance");
  cmp->add_flag("--no-timing", compare.no_timing, "Skip the timing pass");

  BenchArgs bench;
  CLI::App* b = app.add_subcommand("bench", "Time methods on a dataset");
  b->add_option("--dataset", bench.dataset, "Dataset directory")->required();
  b->add_option("--methods", bench.methods, "Methods, e.g. eh,cr,wnr")
      ->delimiter(',');
  b->add_option("--out", bench.out_csv, "Timing CSV path");
  b->add_option("--repetitions", bench.repetitions,
                "Back-to-back classifications per sample");
  b->add_option("--warmup", bench.warmup, "Warm-up rounds");
  b->add_option("--tolerance", bench.tolerance, "Vertex merge tolerance");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const std::string& s : args) argv.push_back(s.c_str());
  if (argv.empty()) argv.push_back("ehpip");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitInputError;
  }

  try {
    if (c->parsed()) return RunClassify(classify, out);
    if (g->parsed()) return RunGen(gen, out);
    if (cmp->parsed()) return RunCompare(compare, out);
    if (b->parsed()) return RunBench(bench, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace ehpip::cli
