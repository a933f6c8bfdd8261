// Copyright 2026 The Covering Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVERING_HITTING_H_
#define COVERING_HITTING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "covering/epsnet.h"
#include "covering/geometry.h"

namespace covering {

// One reweighting round of the hitting-set loop.
struct HittingRound {
  int64_t guess = 0;
  int round = 0;
  std::optional<int> violated;  // first rectangle the net missed
  int64_t doublings = 0;        // points whose weight was doubled
  int net_size = 0;
  int net_attempts = 0;         // weighted-net builds, including retries
};

struct HittingResult {
  std::vector<int> points;  // sorted ids, hits every rectangle
  int64_t guess = 0;        // accepted OPT guess
  std::vector<HittingRound> log;
  int net_calls = 0;
};

struct HitCheck {
  bool ok = true;
  std::optional<int> unhit;  // smallest unhit rectangle id
};

// Exhaustive closed-containment check of `subset` against every rectangle.
HitCheck VerifyHitting(const PointSet& points, const std::vector<int>& subset,
                       const RectSet& rects);

// Rectangles must be finite with lo <= hi; throws MalformedInput otherwise
// and Infeasible for a rectangle holding no point.
void CheckHittingInstance(const PointSet& points, const RectSet& rects);

struct WeightedNetResult {
  std::vector<int> ids;    // sorted ids into the original points
  int attempts = 0;        // construction runs until verification passed
  int64_t replicated = 0;  // size of the replicated point set
};

// Net for the weight measure: every closed rectangle of weight >= eps * W
// holds a returned point. Each point is replicated ceil(w / W * D) times
// with D = ceil(2 * max(n, 2) / eps), copies are laid out in rank space so
// that the multiset is in general position, and the unweighted
// construction runs with the matching eps. Verified before returning;
// failed builds are retried with fresh seeds up to config.max_retries
// times, then NetSampleFailure is thrown. config.eps is ignored.
WeightedNetResult WeightedNet(const PointSet& points,
                              const std::vector<double>& weights, double eps,
                              const NetConfig& config);

// Iterative reweighting. Guesses k = 1, 2, 4, ...; within a guess each
// round builds a weighted 1/(2k)-net and doubles the weight of every point
// in the first rectangle it misses. A guess fails after
// ceil(4k * max(1, log2(n / k))) rounds. The accepted net is pruned of
// points that are redundant for the cover. Throws BgDivergence when the
// guess passes the first power of two >= n.
HittingResult SolveHitting(const PointSet& points, const RectSet& rects,
                           const NetConfig& config);

}  // namespace covering

#endif  // COVERING_HITTING_H_
