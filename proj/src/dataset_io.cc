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

#include "ehpip/dataset_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ehpip {
namespace {

using nlohmann::json;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed for " + path.string());
}

json ParseJson(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line =
        1 + static_cast<std::size_t>(
                std::count(text.begin(), text.begin() + byte, '\n'));
    throw InputError(std::string(source) + ": JSON syntax error at line " +
                     std::to_string(line) + ", offset " +
                     std::to_string(e.byte) + ": " + e.what());
  }
}

Point2 ParsePoint(const json& j, std::string_view source,
                  std::string_view what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw InputError(std::string(source) + ": " + std::string(what) +
                     " must be a [x, y] pair of numbers");
  }
  Point2 p{j[0].get<double>(), j[1].get<double>()};
  if (!IsFinite(p)) {
    throw InputError(std::string(source) + ": " + std::string(what) +
                     " has a non-finite coordinate");
  }
  return p;
}

json PointJson(Point2 p) { return json::array({p.x, p.y}); }

std::string Num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::filesystem::path SampleFile(int vertex_count, std::size_t index) {
  char dir[32];
  char file[32];
  std::snprintf(dir, sizeof(dir), "n%04d", vertex_count);
  std::snprintf(file, sizeof(file), "p%05zu.json", index);
  return std::filesystem::path(dir) / file;
}

}  // namespace

PolygonFile ParsePolygonJson(std::string_view text, std::string_view source,
                             const Tolerance& tol) {
  const json doc = ParseJson(text, source);
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc["vertices"].is_array()) {
    throw InputError(std::string(source) +
                     ": expected an object with a \"vertices\" array");
  }
  const json& vs = doc["vertices"];
  if (vs.size() < 3) {
    throw InputError(std::string(source) + ": need at least 3 vertices, got " +
                     std::to_string(vs.size()));
  }
  std::vector<Point2> vertices;
  vertices.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices.push_back(
        ParsePoint(vs[i], source, "vertex " + std::to_string(i)));
  }
  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw InputError(std::string(source) + ": \"name\" must be a string");
    }
    name = doc["name"].get<std::string>();
  }
  try {
    return PolygonFile{std::move(name),
                       Polygon::Create(std::move(vertices), tol)};
  } catch (const InvalidPolygon& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

PolygonFile ReadPolygonFile(const std::filesystem::path& path,
                            const Tolerance& tol) {
  return ParsePolygonJson(ReadFile(path), path.string(), tol);
}

std::string PolygonToJson(const Polygon& poly,
                          const std::optional<std::string>& name) {
  json doc = json::object();
  if (name) doc["name"] = *name;
  json vs = json::array();
  for (const Point2& p : poly.vertices()) vs.push_back(PointJson(p));
  doc["vertices"] = std::move(vs);
  return doc.dump(1) + "\n";
}

void WriteDataset(const Dataset& dataset, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());

  json manifest = json::object();
  manifest["format"] = "ehpip-dataset";
  manifest["format_version"] = kDatasetFormatVersion;
  manifest["rng"] = "mt19937_64, splitmix64 stream per (seed, count, index)";
  manifest["seed"] = dataset.seed;
  manifest["vertex_counts"] = dataset.vertex_counts;
  manifest["polygons_per_count"] = dataset.polygons_per_count;
  json entries = json::array();
  for (const Sample& s : dataset.samples) {
    const std::filesystem::path rel = SampleFile(s.vertex_count, s.index);
    std::filesystem::create_directories(dir / rel.parent_path(), ec);
    if (ec) {
      throw InputError("cannot create " + (dir / rel.parent_path()).string());
    }
    WriteFile(dir / rel,
              PolygonToJson(s.polygon, "n" + std::to_string(s.vertex_count) +
                                           "-i" + std::to_string(s.index)));
    entries.push_back({{"file", rel.generic_string()},
                       {"vertex_count", s.vertex_count},
                       {"index", s.index},
                       {"query_point", PointJson(s.query)}});
  }
  manifest["samples"] = std::move(entries);
  WriteFile(dir / "manifest.json", manifest.dump(1) + "\n");
}

Dataset ReadDataset(const std::filesystem::path& dir, const Tolerance& tol) {
  const std::filesystem::path manifest_path = dir / "manifest.json";
  if (!std::filesystem::exists(manifest_path)) {
    throw InputError("missing manifest: " + manifest_path.string());
  }
  const std::string source = manifest_path.string();
  const json m = ParseJson(ReadFile(manifest_path), source);
  try {
    if (m.at("format") != "ehpip-dataset") {
      throw InputError(source + ": not an ehpip dataset manifest");
    }
    if (m.at("format_version").get<int>() != kDatasetFormatVersion) {
      throw InputError(source + ": unsupported format_version");
    }
    Dataset d;
    d.seed = m.at("seed").get<std::uint64_t>();
    d.vertex_counts = m.at("vertex_counts").get<std::vector<int>>();
    d.polygons_per_count = m.at("polygons_per_count").get<std::size_t>();
    for (const json& e : m.at("samples")) {
      const std::string file = e.at("file").get<std::string>();
      PolygonFile pf = ReadPolygonFile(dir / file, tol);
      d.samples.push_back(Sample{e.at("vertex_count").get<int>(),
                                 e.at("index").get<std::size_t>(),
                                 std::move(pf.polygon),
                                 ParsePoint(e.at("query_point"), source,
                                            "query_point")});
    }
    return d;
  } catch (const json::exception& e) {
    throw InputError(source + ": malformed manifest: " + e.what());
  }
}

namespace {

json McNemarJson(const std::optional<McNemarResult>& r) {
  if (!r) return json{{"defined", false}, {"note", "no discordant pairs"}};
  return json{{"defined", true},
              {"chi2_corrected", r->corrected},
              {"chi2_uncorrected", r->uncorrected},
              {"significant", r->significant}};
}

}  // namespace

std::string ReportToJson(const ComparisonReport& report) {
  json doc = json::object();
  doc["format"] = "ehpip-report";
  doc["format_version"] = kReportFormatVersion;
  doc["seed"] = report.seed;
  doc["base"] = MethodName(report.base);
  json methods = json::array();
  for (Method m : report.methods) methods.push_back(MethodName(m));
  doc["methods"] = std::move(methods);
  doc["chi2_critical"] = kChiSquareCritical;
  json counts = json::array();
  for (const CountSummary& c : report.counts) {
    counts.push_back({{"vertex_count", c.vertex_count},
                      {"trials", c.trials},
                      {"excluded", c.excluded}});
  }
  doc["counts"] = std::move(counts);
  json rows = json::array();
  for (const PairRow& r : report.rows) {
    rows.push_back({{"vertex_count", r.vertex_count},
                    {"reference", MethodName(r.reference)},
                    {"other", MethodName(r.other)},
                    {"n00", r.table.n00},
                    {"n01", r.table.n01},
                    {"n10", r.table.n10},
                    {"n11", r.table.n11},
                    {"mcnemar", McNemarJson(r.mcnemar)},
                    {"error_rate", r.error_rate},
                    {"fpr", r.fpr},
                    {"precision", r.precision},
                    {"recall", r.recall}});
  }
  doc["pairs"] = std::move(rows);
  json timing = json::array();
  for (const TimingRow& t : report.timings) {
    timing.push_back({{"vertex_count", t.vertex_count},
                      {"method", MethodName(t.method)},
                      {"mean_s", t.mean_s}});
  }
  doc["timing"] = std::move(timing);
  return doc.dump(2) + "\n";
}

std::string ReportToCsv(const ComparisonReport& report) {
  auto mean_time = [&](int n, Method m) -> std::string {
    for (const TimingRow& t : report.timings) {
      if (t.vertex_count == n && t.method == m) return Num(t.mean_s);
    }
    return "";
  };
  auto excluded = [&](int n) -> std::size_t {
    for (const CountSummary& c : report.counts) {
      if (c.vertex_count == n) return c.excluded;
    }
    return 0;
  };
  std::ostringstream out;
  out << "vertex_count,reference,other,n00,n01,n10,n11,excluded,"
         "chi2_corrected,chi2_uncorrected,significant,error_rate,fpr,"
         "precision,recall,mean_time_reference_s,mean_time_other_s\n";
  for (const PairRow& r : report.rows) {
    out << r.vertex_count << ',' << MethodName(r.reference) << ','
        << MethodName(r.other) << ',' << r.table.n00 << ',' << r.table.n01
        << ',' << r.table.n10 << ',' << r.table.n11 << ','
        << excluded(r.vertex_count) << ',';
    if (r.mcnemar) {
      out << Num(r.mcnemar->corrected) << ',' << Num(r.mcnemar->uncorrected)
          << ',' << (r.mcnemar->significant ? "true" : "false");
    } else {
      out << ",,";
    }
    out << ',' << Num(r.error_rate) << ',' << Num(r.fpr) << ','
        << Num(r.precision) << ',' << Num(r.recall) << ','
        << mean_time(r.vertex_count, r.reference) << ','
        << mean_time(r.vertex_count, r.other) << '\n';
  }
  return out.str();
}

std::string BenchToCsv(const BenchReport& report) {
  std::ostringstream out;
  out << "method,vertex_count,mean_s,median_s,p95_s\n";
  for (const BenchRow& r : report.rows) {
    out << MethodName(r.method) << ',' << r.vertex_count << ','
        << Num(r.mean_s) << ',' << Num(r.median_s) << ',' << Num(r.p95_s)
        << '\n';
  }
  return out.str();
}

}  // namespace ehpip
