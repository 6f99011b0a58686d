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

#ifndef EHPIP_EH_CLASSIFIER_H_
#define EHPIP_EH_CLASSIFIER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ehpip/chain_decomposition.h"
#include "ehpip/geom_core.h"

namespace ehpip {

// Where the vertical line x = x0 meets a valid chain. `chain_id` indexes the
// list of valid chains handed to VerticalCut.
struct ChainIntersection {
  std::size_t chain_id = 0;
  double y_int = 0.0;
};

// Result of the epigraph/hypograph classification.
//
// Invariants (checked by CheckVerdictInvariants):
//   inside  => (vertex_hit && inaccessibility == valid_chain_count) ||
//              (broken_pair && inaccessibility == 1 + ignored_pairs)
//   !inside => !broken_pair && inaccessibility == ignored_pairs
struct EhVerdict {
  bool inside = false;
  int inaccessibility = 0;
  std::optional<std::pair<std::size_t, std::size_t>> broken_pair;
  int ignored_pairs = 0;
  bool vertex_hit = false;
  int valid_chain_count = 0;

  // Diagnostics.
  bool bbox_rejected = false;
  std::size_t cut_count = 0;    // q
  std::size_t chain_count = 0;  // valid + invalid
  int missed_chains = 0;        // valid chains the vertical line never met
  int unpaired = 0;             // leftover intersection of an odd count
  std::vector<ChainIntersection> intersections;  // sorted by (y_int, id)
};

// Intersects every chain with x = x0 and keeps, per chain, the hit nearest
// to `y0` (ties: the smaller y). Chains with no hit are skipped and counted
// in `*missed` when given.
std::vector<ChainIntersection> VerticalCut(std::span<const Chain> chains,
                                           double x0, double y0,
                                           const Tolerance& tol = {},
                                           int* missed = nullptr);

// s lies on or above / on or below the chain's graph at x0.
inline bool EpigraphContains(double y_int, Point2 s) { return s.y >= y_int; }
inline bool HypographContains(double y_int, Point2 s) { return s.y <= y_int; }

// Chain overloads: evaluate the chain at s.x first. False when the vertical
// line through s misses the chain.
bool EpigraphContains(const Chain& chain, Point2 s, const Tolerance& tol = {});
bool HypographContains(const Chain& chain, Point2 s, const Tolerance& tol = {});

// Classifies `s` against `poly`. Throws DegeneratePolygon if vertex merging
// collapses the ring (outside the vertex fast path).
EhVerdict Classify(const Polygon& poly, Point2 s, const Tolerance& tol = {});

// True when the verdict satisfies the inside/inaccessibility relations above.
bool CheckVerdictInvariants(const EhVerdict& v);

}  // namespace ehpip

#endif  // EHPIP_EH_CLASSIFIER_H_
