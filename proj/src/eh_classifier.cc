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

#include "ehpip/eh_classifier.h"

#include <algorithm>
#include <cmath>

namespace ehpip {
namespace {

std::optional<double> NearestHit(const Chain& chain, double x0, double y0,
                                 const Tolerance& tol) {
  std::optional<double> best;
  for (std::size_t i = 0; i + 1 < chain.points.size(); ++i) {
    const Edge e = Edge::Make(chain.points[i], chain.points[i + 1], tol);
    const std::optional<double> y = VerticalEdgeIntersection(e, x0, tol);
    if (!y) continue;
    if (!best) {
      best = y;
      continue;
    }
    const double d = std::abs(*y - y0);
    const double best_d = std::abs(*best - y0);
    if (d < best_d || (d == best_d && *y < *best)) best = y;
  }
  return best;
}

EhVerdict VertexVerdict(EhVerdict v, int valid_chains) {
  v.inside = true;
  v.vertex_hit = true;
  // A vertex always belongs to at least the chain formed by the whole ring.
  v.valid_chain_count = std::max(1, valid_chains);
  v.inaccessibility = v.valid_chain_count;
  return v;
}

}  // namespace

std::vector<ChainIntersection> VerticalCut(std::span<const Chain> chains,
                                           double x0, double y0,
                                           const Tolerance& tol, int* missed) {
  std::vector<ChainIntersection> hits;
  hits.reserve(chains.size());
  for (std::size_t id = 0; id < chains.size(); ++id) {
    if (const std::optional<double> y = NearestHit(chains[id], x0, y0, tol)) {
      hits.push_back({id, *y});
    } else if (missed != nullptr) {
      ++*missed;
    }
  }
  return hits;
}

bool EpigraphContains(const Chain& chain, Point2 s, const Tolerance& tol) {
  const std::optional<double> y = NearestHit(chain, s.x, s.y, tol);
  return y && EpigraphContains(*y, s);
}

bool HypographContains(const Chain& chain, Point2 s, const Tolerance& tol) {
  const std::optional<double> y = NearestHit(chain, s.x, s.y, tol);
  return y && HypographContains(*y, s);
}

EhVerdict Classify(const Polygon& poly, Point2 s, const Tolerance& tol) {
  EhVerdict v;
  if (!ComputeBoundingBox(poly).Contains(s, tol.merge_eps)) {
    v.bbox_rejected = true;
    return v;
  }
  for (const Point2& p : poly.vertices()) {
    if (Distance(p, s) <= tol.merge_eps) {
      v.vertex_hit = true;
      break;
    }
  }

  AugmentedRing ring;
  try {
    ring = HorizontalCut(poly, s, tol);
  } catch (const DegeneratePolygon&) {
    if (v.vertex_hit) return VertexVerdict(std::move(v), 0);
    throw;
  }
  v.cut_count = ring.q;
  if (ring.q == 0) {
    if (v.vertex_hit) return VertexVerdict(std::move(v), 0);
    return v;
  }

  std::vector<Chain> chains = Decompose(ring, s, tol);
  v.chain_count = chains.size();
  std::erase_if(chains, [](const Chain& c) { return !c.valid; });
  if (v.vertex_hit) {
    return VertexVerdict(std::move(v), static_cast<int>(chains.size()));
  }
  v.valid_chain_count = static_cast<int>(chains.size());
  if (chains.empty()) return v;

  v.intersections = VerticalCut(chains, s.x, s.y, tol, &v.missed_chains);
  std::sort(v.intersections.begin(), v.intersections.end(),
            [](const ChainIntersection& a, const ChainIntersection& b) {
              if (a.y_int != b.y_int) return a.y_int < b.y_int;
              return a.chain_id < b.chain_id;
            });
  std::size_t paired = v.intersections.size();
  if (paired % 2 == 1) {
    --paired;
    v.unpaired = 1;
  }

  for (std::size_t k = 0; k < paired; k += 2) {
    const ChainIntersection& lo = v.intersections[k];
    const ChainIntersection& hi = v.intersections[k + 1];
    if (!v.broken_pair &&
        InUnitInterval(AffineCoefficient(s.y, lo.y_int, hi.y_int))) {
      v.broken_pair = {lo.chain_id, hi.chain_id};
    } else {
      ++v.ignored_pairs;
    }
  }
  v.inside = v.broken_pair.has_value();
  v.inaccessibility = v.ignored_pairs + (v.inside ? 1 : 0);
  return v;
}

bool CheckVerdictInvariants(const EhVerdict& v) {
  if (v.inaccessibility < 0 || v.ignored_pairs < 0) return false;
  if (v.inside) {
    const bool vertex_case =
        v.vertex_hit && v.inaccessibility == v.valid_chain_count;
    const bool pair_case =
        v.broken_pair.has_value() && v.inaccessibility == 1 + v.ignored_pairs;
    return vertex_case || pair_case;
  }
  return !v.broken_pair.has_value() && v.inaccessibility == v.ignored_pairs;
}

}  // namespace ehpip
