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

#ifndef EHPIP_CHAIN_DECOMPOSITION_H_
#define EHPIP_CHAIN_DECOMPOSITION_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ehpip/geom_core.h"

namespace ehpip {

// Vertex merging left fewer than three vertices.
class DegeneratePolygon : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Decomposition was requested for a ring the cut line never touched.
class NoCut : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The polygon ring after cutting with y = y0: original vertices in traversal
// order with the cut vertices spliced in between their edge endpoints.
struct AugmentedRing {
  std::vector<Point2> vertices;
  std::vector<bool> cut_flags;
  std::size_t q = 0;  // number of cut vertices
  double y0 = 0.0;
};

enum class ChainSide { kAbove, kBelow, kMixed };

// A run of ring vertices from one cut vertex to the next. `points` includes
// both endpoints; for a ring with a single cut, start and end coincide.
struct Chain {
  std::vector<Point2> points;
  Point2 start;
  Point2 end;
  ChainSide side = ChainSide::kAbove;
  // Majority of strict signs of interior points, ties go to kAbove. Equals
  // `side` unless `side` is kMixed.
  ChainSide dominant_side = ChainSide::kAbove;
  bool valid = false;
  std::size_t ring_start = 0;  // index of `start` in the augmented ring
};

// Cuts `poly` with the horizontal line through `s`. Every edge crossing is
// inserted as a cut vertex; original vertices within merge_eps of an adjacent
// cut vertex are dropped, and coincident consecutive cut vertices are
// collapsed. Throws DegeneratePolygon if fewer than 3 vertices survive.
AugmentedRing HorizontalCut(const Polygon& poly, Point2 s,
                            const Tolerance& tol = {});

// Splits the ring into exactly `ring.q` chains, starting from the first cut
// vertex in traversal order, and marks each chain's validity. Throws NoCut
// when q == 0.
std::vector<Chain> Decompose(const AugmentedRing& ring, Point2 s,
                             const Tolerance& tol = {});

// A chain is valid when its endpoints straddle x0 on the cut line. An
// endpoint within merge_eps of x0 counts as straddling.
bool ValidateChain(const Chain& chain, Point2 s, const Tolerance& tol = {});

}  // namespace ehpip

#endif  // EHPIP_CHAIN_DECOMPOSITION_H_
