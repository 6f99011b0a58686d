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

#include "ehpip/geom_core.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ehpip {

bool IsFinite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double Distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

void Tolerance::Validate() const {
  if (!(boundary_eps > 0.0 && boundary_eps < merge_eps && merge_eps < 1.0)) {
    throw std::invalid_argument(
        "tolerance must satisfy 0 < boundary_eps < merge_eps < 1");
  }
}

Polygon Polygon::Create(std::vector<Point2> vertices, const Tolerance& tol) {
  for (const Point2& p : vertices) {
    if (!IsFinite(p)) throw InvalidPolygon("polygon has a non-finite vertex");
  }
  std::vector<Point2> ring;
  ring.reserve(vertices.size());
  for (const Point2& p : vertices) {
    if (!ring.empty() && Distance(ring.back(), p) <= tol.merge_eps) continue;
    ring.push_back(p);
  }
  while (ring.size() > 1 &&
         Distance(ring.front(), ring.back()) <= tol.merge_eps) {
    ring.pop_back();
  }
  if (ring.size() < 3) {
    throw InvalidPolygon("polygon needs at least 3 distinct vertices, got " +
                         std::to_string(ring.size()));
  }
  return Polygon(std::move(ring));
}

bool BoundingBox::Contains(Point2 p, double margin) const {
  return p.x >= min.x - margin && p.x <= max.x + margin &&
         p.y >= min.y - margin && p.y <= max.y + margin;
}

BoundingBox ComputeBoundingBox(std::span<const Point2> points) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  BoundingBox box{{kInf, kInf}, {-kInf, -kInf}};
  for (const Point2& p : points) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
  }
  return box;
}

Edge Edge::Make(Point2 a, Point2 b, const Tolerance& tol) {
  Edge e{a, b};
  if (std::abs(a.x - b.x) <= tol.merge_eps) {
    e.slope_class = SlopeClass::kVertical;
  } else if (std::abs(a.y - b.y) <= tol.merge_eps) {
    e.slope_class = SlopeClass::kHorizontal;
  } else {
    e.slope_class = SlopeClass::kGeneral;
    e.m = (b.y - a.y) / (b.x - a.x);
    e.c = a.y - e.m * a.x;
  }
  return e;
}

std::optional<double> AffineCoefficient(double p, double lo, double hi) {
  if (lo == hi) {
    if (p == lo) return 0.5;
    return std::nullopt;
  }
  return (hi - p) / (hi - lo);
}

bool InUnitInterval(std::optional<double> theta) {
  return theta.has_value() && *theta >= 0.0 && *theta <= 1.0;
}

namespace {

bool Between(double v, double p, double q) {
  return v >= std::min(p, q) && v <= std::max(p, q);
}

}  // namespace

std::optional<double> HorizontalEdgeIntersection(const Edge& e, double y0) {
  switch (e.slope_class) {
    case SlopeClass::kVertical:
      if (Between(y0, e.a.y, e.b.y)) return e.a.x;
      return std::nullopt;
    case SlopeClass::kHorizontal:
      return std::nullopt;
    case SlopeClass::kGeneral: {
      const std::optional<double> theta = AffineCoefficient(y0, e.a.y, e.b.y);
      if (!InUnitInterval(theta)) return std::nullopt;
      if (*theta == 1.0) return e.a.x;
      if (*theta == 0.0) return e.b.x;
      return (y0 - e.c) / e.m;
    }
  }
  return std::nullopt;
}

std::optional<double> VerticalEdgeIntersection(const Edge& e, double x0,
                                               const Tolerance& tol) {
  switch (e.slope_class) {
    case SlopeClass::kVertical:
      if (std::abs(x0 - e.a.x) <= tol.merge_eps || Between(x0, e.a.x, e.b.x)) {
        return e.a.y;
      }
      return std::nullopt;
    case SlopeClass::kHorizontal:
      if (InUnitInterval(AffineCoefficient(x0, e.a.x, e.b.x))) return e.a.y;
      return std::nullopt;
    case SlopeClass::kGeneral: {
      const std::optional<double> theta = AffineCoefficient(x0, e.a.x, e.b.x);
      if (!InUnitInterval(theta)) return std::nullopt;
      if (*theta == 1.0) return e.a.y;
      if (*theta == 0.0) return e.b.y;
      return e.m * x0 + e.c;
    }
  }
  return std::nullopt;
}

double SegmentDistance(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return Distance(p, a);
  double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return Distance(p, {a.x + t * dx, a.y + t * dy});
}

double BoundaryDistance(const Polygon& poly, Point2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best, SegmentDistance(p, poly.edge_start(i), poly.edge_end(i)));
  }
  return best;
}

}  // namespace ehpip
