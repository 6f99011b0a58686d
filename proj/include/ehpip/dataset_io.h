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

#ifndef EHPIP_DATASET_IO_H_
#define EHPIP_DATASET_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ehpip/experiment_harness.h"
#include "ehpip/geom_core.h"

namespace ehpip {

// Malformed or unreadable input file. The message names the file and, for
// JSON syntax errors, the line and byte offset.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDatasetFormatVersion = 1;
inline constexpr int kReportFormatVersion = 1;

struct PolygonFile {
  std::optional<std::string> name;
  Polygon polygon;
};

// {"vertices": [[x, y], ...], "name": "..."}; `source` labels error messages.
PolygonFile ParsePolygonJson(std::string_view text, std::string_view source,
                             const Tolerance& tol = {});
PolygonFile ReadPolygonFile(const std::filesystem::path& path,
                            const Tolerance& tol = {});
std::string PolygonToJson(const Polygon& poly,
                          const std::optional<std::string>& name);

// Layout:
//   DIR/manifest.json                 seed, parameters, per-sample entries
//   DIR/n<count>/p<index>.json        one PolygonFile per sample
// Query points live in the manifest entries. Output is byte-for-byte
// reproducible for equal datasets.
void WriteDataset(const Dataset& dataset, const std::filesystem::path& dir);
Dataset ReadDataset(const std::filesystem::path& dir,
                    const Tolerance& tol = {});

// Report outputs. The JSON keeps all timing values under "timing" so two
// runs can be compared after dropping that key.
std::string ReportToJson(const ComparisonReport& report);
std::string ReportToCsv(const ComparisonReport& report);
std::string BenchToCsv(const BenchReport& report);

}  // namespace ehpip

#endif  // EHPIP_DATASET_IO_H_
