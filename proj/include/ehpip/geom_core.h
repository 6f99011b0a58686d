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

#ifndef EHPIP_GEOM_CORE_H_
#define EHPIP_GEOM_CORE_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehpip {

// Thrown when a vertex list cannot form a polygon (too few vertices, or
// non-finite coordinates).
class InvalidPolygon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

bool IsFinite(Point2 p);
double Distance(Point2 a, Point2 b);

// Numeric tolerances. `merge_eps` is the radius within which pre-existing
// vertices are absorbed into freshly inserted cut vertices, and the slope
// classification threshold. `boundary_eps` is only used by callers that need
// to reject queries sitting on the boundary.
struct Tolerance {
  double merge_eps = 1e-5;
  double boundary_eps = 1e-9;

  // Throws std::invalid_argument unless 0 < boundary_eps < merge_eps < 1.
  void Validate() const;
};

// An ordered vertex ring, implicitly closed. Construction drops consecutive
// near-duplicate vertices (including the wrap-around pair).
class Polygon {
 public:
  static Polygon Create(std::vector<Point2> vertices,
                        const Tolerance& tol = {});

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

  // Edge i runs from vertex i to vertex (i + 1) mod n.
  Point2 edge_start(std::size_t i) const { return vertices_[i]; }
  Point2 edge_end(std::size_t i) const {
    return vertices_[(i + 1) % vertices_.size()];
  }

 private:
  explicit Polygon(std::vector<Point2> v) : vertices_(std::move(v)) {}

  std::vector<Point2> vertices_;
};

struct BoundingBox {
  Point2 min;
  Point2 max;

  // True if `p` lies within the box grown by `margin` on every side.
  bool Contains(Point2 p, double margin = 0.0) const;
};

BoundingBox ComputeBoundingBox(std::span<const Point2> points);
inline BoundingBox ComputeBoundingBox(const Polygon& poly) {
  return ComputeBoundingBox(poly.vertices());
}

enum class SlopeClass { kVertical, kHorizontal, kGeneral };

// A directed segment with its slope classification. For kGeneral edges the
// supporting line is y = m * x + c.
struct Edge {
  Point2 a;
  Point2 b;
  SlopeClass slope_class = SlopeClass::kGeneral;
  double m = 0.0;
  double c = 0.0;

  static Edge Make(Point2 a, Point2 b, const Tolerance& tol = {});
};

// Returns theta with p == theta * lo + (1 - theta) * hi. Exact at the
// endpoints: p == lo gives 1 and p == hi gives 0. For lo == hi the result is
// 0.5 when p matches and absent otherwise.
std::optional<double> AffineCoefficient(double p, double lo, double hi);

// Containment test on the inclusive unit interval.
bool InUnitInterval(std::optional<double> theta);

// x coordinate where the line y = y0 meets `e`, if it does. Horizontal edges
// never report an intersection, even when they lie on the line.
std::optional<double> HorizontalEdgeIntersection(const Edge& e, double y0);

// y coordinate where the line x = x0 meets `e`, if it does. A vertical edge
// on the line reports its first endpoint's y; a horizontal edge reports its
// own y.
std::optional<double> VerticalEdgeIntersection(const Edge& e, double x0,
                                               const Tolerance& tol = {});

// Euclidean distance from `p` to the closed segment [a, b].
double SegmentDistance(Point2 p, Point2 a, Point2 b);

// Smallest distance from `p` to any edge of `poly`.
double BoundaryDistance(const Polygon& poly, Point2 p);

}  // namespace ehpip

#endif  // EHPIP_GEOM_CORE_H_
