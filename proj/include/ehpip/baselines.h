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

#ifndef EHPIP_BASELINES_H_
#define EHPIP_BASELINES_H_

#include "ehpip/geom_core.h"

namespace ehpip {

enum class CrossingRule {
  // An edge counts iff its endpoints lie strictly on opposite sides of the
  // ray's supporting line, with "on the line" grouped with one side. Never
  // double-counts a vertex.
  kHalfOpen,
  // Counts every segment the ray touches, endpoints included. A ray through
  // a vertex counts both incident edges.
  kNaive,
};

struct CrVerdict {
  bool inside = false;
  int crossings = 0;
  double ray_angle = 0.0;  // radians, 0 = towards +x
  bool on_boundary = false;
};

struct CrOptions {
  double ray_angle = 0.0;
  CrossingRule rule = CrossingRule::kHalfOpen;
};

// Even-odd test along a ray from `s`. on_boundary is set (the count is still
// reported) when `s` lies within merge_eps of an edge.
CrVerdict CrossingNumber(const Polygon& poly, Point2 s,
                         const CrOptions& options = {},
                         const Tolerance& tol = {});

struct WnrVerdict {
  int winding = 0;
  bool inside_nonzero = false;
  double turns = 0.0;          // unrounded angle sum / 2pi
  bool on_boundary = false;    // s within merge_eps of an edge
  bool near_boundary = false;  // |turns - winding| > 0.25
};

// Signed angle accumulation around `s`, rounded to the nearest integer.
WnrVerdict WindingNumber(const Polygon& poly, Point2 s,
                         const Tolerance& tol = {});

}  // namespace ehpip

#endif  // EHPIP_BASELINES_H_
