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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

namespace ehpip {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path ScratchDir() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  const fs::path dir = fs::temp_directory_path() / "ehpip_io_test" /
                       (std::string(info->test_suite_name()) + "." +
                        info->name());
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ParsePolygonJsonTest, Valid) {
  const PolygonFile pf = ParsePolygonJson(
      R"({"name": "sq", "vertices": [[0,0],[1,0],[1,1],[0,1]]})", "mem");
  EXPECT_EQ(pf.name, "sq");
  EXPECT_EQ(pf.polygon.size(), 4u);
  EXPECT_EQ(pf.polygon[2], (Point2{1, 1}));
}

TEST(ParsePolygonJsonTest, SyntaxErrorNamesLine) {
  try {
    ParsePolygonJson("{\n\"vertices\": [[0,0],\n[1,0]\n", "bad.json");
    FAIL();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("bad.json"), std::string::npos);
    EXPECT_NE(msg.find("line"), std::string::npos);
  }
}

TEST(ParsePolygonJsonTest, SchemaErrors) {
  EXPECT_THROW(ParsePolygonJson("[]", "x"), InputError);
  EXPECT_THROW(ParsePolygonJson(R"({"vertices": [[0,0],[1,0]]})", "x"),
               InputError);
  EXPECT_THROW(ParsePolygonJson(R"({"vertices": [[0,0],[1,0],[1]]})", "x"),
               InputError);
  EXPECT_THROW(
      ParsePolygonJson(R"({"vertices": [[0,0],[1,0],["a",1]]})", "x"),
      InputError);
  EXPECT_THROW(
      ParsePolygonJson(R"({"vertices": [[0,0],[1,0],[1,1]], "name": 3})", "x"),
      InputError);
  // Collapses under vertex merging.
  EXPECT_THROW(
      ParsePolygonJson(R"({"vertices": [[0,0],[1,0],[0,0.000001]]})", "x"),
      InputError);
}

TEST(PolygonToJsonTest, RoundTripsExactly) {
  const Polygon p = Polygon::Create({{0.1, 0.2}, {0.7, 1.0 / 3.0}, {0.5, 0.9}});
  const PolygonFile back = ParsePolygonJson(PolygonToJson(p, "t"), "mem");
  ASSERT_EQ(back.polygon.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(back.polygon[i], p[i]);
}

TEST(DatasetTest, WriteReadRoundTrip) {
  const fs::path dir = ScratchDir();
  const std::vector<int> counts = {4, 8};
  const Dataset d = GenerateDataset(42, counts, 3);
  WriteDataset(d, dir);
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
  EXPECT_TRUE(fs::exists(dir / "n0004" / "p00002.json"));

  const Dataset back = ReadDataset(dir);
  EXPECT_EQ(back.seed, 42u);
  EXPECT_EQ(back.vertex_counts, counts);
  EXPECT_EQ(back.polygons_per_count, 3u);
  ASSERT_EQ(back.samples.size(), d.samples.size());
  for (std::size_t i = 0; i < d.samples.size(); ++i) {
    EXPECT_EQ(back.samples[i].query, d.samples[i].query);
    ASSERT_EQ(back.samples[i].polygon.size(), d.samples[i].polygon.size());
    for (std::size_t k = 0; k < d.samples[i].polygon.size(); ++k) {
      EXPECT_EQ(back.samples[i].polygon[k], d.samples[i].polygon[k]);
    }
  }
}

TEST(DatasetTest, ManifestSchema) {
  const fs::path dir = ScratchDir();
  const std::vector<int> counts = {5};
  WriteDataset(GenerateDataset(1, counts, 2), dir);
  const json m = json::parse(Slurp(dir / "manifest.json"));
  EXPECT_EQ(m["format"], "ehpip-dataset");
  EXPECT_EQ(m["format_version"], kDatasetFormatVersion);
  EXPECT_EQ(m["seed"], 1);
  ASSERT_EQ(m["samples"].size(), 2u);
  EXPECT_EQ(m["samples"][1]["file"], "n0005/p00001.json");
  EXPECT_EQ(m["samples"][1]["query_point"].size(), 2u);
}

TEST(DatasetTest, ByteIdenticalRewrite) {
  const fs::path a = ScratchDir() / "a";
  const fs::path b = a.parent_path() / "b";
  const std::vector<int> counts = {3, 6};
  WriteDataset(GenerateDataset(7, counts, 4), a);
  WriteDataset(GenerateDataset(7, counts, 4), b);
  EXPECT_EQ(Slurp(a / "manifest.json"), Slurp(b / "manifest.json"));
  EXPECT_EQ(Slurp(a / "n0006" / "p00003.json"),
            Slurp(b / "n0006" / "p00003.json"));
}

TEST(DatasetTest, MissingManifest) {
  const fs::path dir = ScratchDir();
  EXPECT_THROW(ReadDataset(dir), InputError);
}

TEST(ReportTest, JsonKeepsTimingSeparate) {
  const std::vector<int> counts = {8};
  const ComparisonReport r = Compare(GenerateDataset(3, counts, 20), {});
  json doc = json::parse(ReportToJson(r));
  EXPECT_EQ(doc["format"], "ehpip-report");
  EXPECT_EQ(doc["format_version"], kReportFormatVersion);
  EXPECT_EQ(doc["pairs"].size(), 4u);
  EXPECT_EQ(doc["timing"].size(), 3u);
  const ComparisonReport again = Compare(GenerateDataset(3, counts, 20), {});
  json doc2 = json::parse(ReportToJson(again));
  doc.erase("timing");
  doc2.erase("timing");
  EXPECT_EQ(doc, doc2);
}

TEST(ReportTest, CsvHeaderAndRows) {
  const std::vector<int> counts = {4, 8};
  const ComparisonReport r =
      Compare(GenerateDataset(3, counts, 10), {.measure_time = false});
  const std::string csv = ReportToCsv(r);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("vertex_count,reference,other,n00,n01,n10,n11", 0),
            0u);
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 8);
}

TEST(ReportTest, BenchCsv) {
  BenchReport r;
  r.rows.push_back({Method::kCr, 8, 3, 1e-6, 1e-6, 2e-6});
  const std::string csv = BenchToCsv(r);
  EXPECT_EQ(csv.rfind("method,vertex_count,mean_s,median_s,p95_s\n", 0), 0u);
  EXPECT_NE(csv.find("cr,8,"), std::string::npos);
}

}  // namespace
}  // namespace ehpip
