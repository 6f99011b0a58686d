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

#include "ehpip/chain_decomposition.h"

#include <cmath>
#include <optional>
#include <string>

namespace ehpip {
namespace {

struct RingEntry {
  Point2 p;
  bool cut = false;
};

}  // namespace

AugmentedRing HorizontalCut(const Polygon& poly, Point2 s,
                            const Tolerance& tol) {
  const std::size_t n = poly.size();
  std::vector<RingEntry> entries;
  entries.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    entries.push_back({poly[i], false});
    const Edge e = Edge::Make(poly.edge_start(i), poly.edge_end(i), tol);
    if (const std::optional<double> x = HorizontalEdgeIntersection(e, s.y)) {
      entries.push_back({{*x, s.y}, true});
    }
  }

  // Drop original vertices sitting on top of a neighbouring cut vertex. The
  // neighbours of an original vertex are exactly the cuts of its two edges.
  const std::size_t m = entries.size();
  std::vector<bool> keep(m, true);
  for (std::size_t k = 0; k < m; ++k) {
    if (entries[k].cut) continue;
    const RingEntry& prev = entries[(k + m - 1) % m];
    const RingEntry& next = entries[(k + 1) % m];
    if ((prev.cut && Distance(prev.p, entries[k].p) <= tol.merge_eps) ||
        (next.cut && Distance(next.p, entries[k].p) <= tol.merge_eps)) {
      keep[k] = false;
    }
  }

  AugmentedRing ring;
  ring.y0 = s.y;
  for (std::size_t k = 0; k < m; ++k) {
    if (!keep[k]) continue;
    const RingEntry& e = entries[k];
    if (e.cut && !ring.vertices.empty() && ring.cut_flags.back() &&
        Distance(ring.vertices.back(), e.p) <= tol.merge_eps) {
      continue;
    }
    ring.vertices.push_back(e.p);
    ring.cut_flags.push_back(e.cut);
  }
  while (ring.vertices.size() > 1 && ring.cut_flags.front() &&
         ring.cut_flags.back() &&
         Distance(ring.vertices.front(), ring.vertices.back()) <=
             tol.merge_eps) {
    ring.vertices.pop_back();
    ring.cut_flags.pop_back();
  }

  if (ring.vertices.size() < 3) {
    throw DegeneratePolygon("only " + std::to_string(ring.vertices.size()) +
                            " vertices left after merging near cut points");
  }
  for (bool f : ring.cut_flags) ring.q += f ? 1 : 0;
  return ring;
}

bool ValidateChain(const Chain& chain, Point2 s, const Tolerance& tol) {
  const double ds = chain.start.x - s.x;
  const double de = chain.end.x - s.x;
  if (std::abs(ds) <= tol.merge_eps || std::abs(de) <= tol.merge_eps) {
    return true;
  }
  return (ds < 0.0) != (de < 0.0);
}

std::vector<Chain> Decompose(const AugmentedRing& ring, Point2 s,
                             const Tolerance& tol) {
  if (ring.q == 0) throw NoCut("cut line does not meet the polygon");
  const std::size_t m = ring.vertices.size();
  std::size_t first = 0;
  while (!ring.cut_flags[first]) ++first;

  std::vector<Chain> chains;
  chains.reserve(ring.q);
  std::size_t k = first;
  do {
    Chain chain;
    chain.ring_start = k;
    chain.points.push_back(ring.vertices[k]);
    std::size_t above = 0;
    std::size_t below = 0;
    std::size_t j = (k + 1) % m;
    while (!ring.cut_flags[j]) {
      const Point2& p = ring.vertices[j];
      if (p.y > ring.y0) ++above;
      if (p.y < ring.y0) ++below;
      chain.points.push_back(p);
      j = (j + 1) % m;
    }
    chain.points.push_back(ring.vertices[j]);
    chain.start = chain.points.front();
    chain.end = chain.points.back();
    chain.dominant_side = above >= below ? ChainSide::kAbove : ChainSide::kBelow;
    if (below == 0) {
      chain.side = ChainSide::kAbove;
    } else if (above == 0) {
      chain.side = ChainSide::kBelow;
    } else {
      chain.side = ChainSide::kMixed;
    }
    chain.valid = ValidateChain(chain, s, tol);
    chains.push_back(std::move(chain));
    k = j;
  } while (k != first);
  return chains;
}

}  // namespace ehpip
