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

#ifndef EHPIP_TESTS_FIXTURES_H_
#define EHPIP_TESTS_FIXTURES_H_

#include <cmath>
#include <numbers>
#include <vector>

#include "ehpip/geom_core.h"

namespace ehpip::testing {

inline Polygon UnitSquare() {
  return Polygon::Create({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline Polygon UnitSquareClockwise() {
  return Polygon::Create({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
}

inline Polygon Triangle() {
  return Polygon::Create({{0, 0}, {2, 0}, {1, 2}});
}

inline std::vector<Point2> PentagramVertices() {
  std::vector<Point2> v;
  for (double deg : {90.0, 234.0, 18.0, 162.0, 306.0}) {
    const double a = deg * std::numbers::pi / 180.0;
    v.push_back({std::cos(a), std::sin(a)});
  }
  return v;
}

// Regular pentagon vertices joined every second vertex; the centre is wound
// twice.
inline Polygon Pentagram() { return Polygon::Create(PentagramVertices()); }

// A wall that spirals twice around the pocket (3, 3): an outer square loop
// that steps inward at (0, 1) and closes with an inner loop crossing the
// first one at (1, 1). Winding number 2 in the pocket, 1 in the corridor
// between the loops near (3, 0.25).
inline Polygon PrisonSpiral() {
  return Polygon::Create({{0, 0},
                          {6, 0},
                          {6, 6},
                          {0, 6},
                          {0, 1},
                          {5, 1},
                          {5, 5},
                          {1, 5},
                          {1, 0.5}});
}
inline constexpr Point2 kPrisonPocket{3, 3};
inline constexpr Point2 kPrisonCorridor{3, 0.25};

// Triangle whose leftward ray from (1, 0) runs through the apex at the
// origin while the rightward ray crosses the far edge once.
inline Polygon GrazedTriangle() {
  return Polygon::Create({{0, 0}, {3, -1}, {3, 1}});
}
inline constexpr Point2 kGrazedQuery{1, 0};

}  // namespace ehpip::testing

#endif  // EHPIP_TESTS_FIXTURES_H_
