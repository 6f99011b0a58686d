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

#include "ehpip/baselines.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ehpip {
namespace {

// Rotated coordinates below this magnitude are treated as lying on the ray's
// line, so rays at multiples of 90 degrees see exact vertex hits.
constexpr double kOnRayEps = 1e-12;

struct RayFrame {
  double cos_a;
  double sin_a;
  Point2 origin;

  Point2 operator()(Point2 p) const {
    const double dx = p.x - origin.x;
    const double dy = p.y - origin.y;
    Point2 r{cos_a * dx + sin_a * dy, -sin_a * dx + cos_a * dy};
    if (std::abs(r.y) <= kOnRayEps) r.y = 0.0;
    return r;
  }
};

bool HalfOpenCrossing(Point2 a, Point2 b) {
  if ((a.y > 0.0) == (b.y > 0.0)) return false;
  const double x = a.x + (0.0 - a.y) * (b.x - a.x) / (b.y - a.y);
  return x > 0.0;
}

bool NaiveHit(Point2 a, Point2 b) {
  if (a.y == 0.0 && b.y == 0.0) return std::max(a.x, b.x) >= 0.0;
  if (a.y == 0.0) return a.x >= 0.0;
  if (b.y == 0.0) return b.x >= 0.0;
  if ((a.y > 0.0) == (b.y > 0.0)) return false;
  const double x = a.x + (0.0 - a.y) * (b.x - a.x) / (b.y - a.y);
  return x >= 0.0;
}

}  // namespace

CrVerdict CrossingNumber(const Polygon& poly, Point2 s,
                         const CrOptions& options, const Tolerance& tol) {
  const RayFrame frame{std::cos(options.ray_angle),
                       std::sin(options.ray_angle), s};
  CrVerdict v;
  v.ray_angle = options.ray_angle;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 a = frame(poly.edge_start(i));
    const Point2 b = frame(poly.edge_end(i));
    const bool hit = options.rule == CrossingRule::kHalfOpen
                         ? HalfOpenCrossing(a, b)
                         : NaiveHit(a, b);
    if (hit) ++v.crossings;
  }
  v.inside = v.crossings % 2 == 1;
  v.on_boundary = BoundaryDistance(poly, s) <= tol.merge_eps;
  return v;
}

WnrVerdict WindingNumber(const Polygon& poly, Point2 s, const Tolerance& tol) {
  double total = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 a = poly.edge_start(i);
    const Point2 b = poly.edge_end(i);
    const double ax = a.x - s.x, ay = a.y - s.y;
    const double bx = b.x - s.x, by = b.y - s.y;
    total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  WnrVerdict v;
  v.turns = total / (2.0 * std::numbers::pi);
  v.winding = static_cast<int>(std::lround(v.turns));
  v.inside_nonzero = v.winding != 0;
  v.near_boundary = std::abs(v.turns - v.winding) > 0.25;
  v.on_boundary = BoundaryDistance(poly, s) <= tol.merge_eps;
  return v;
}

}  // namespace ehpip
