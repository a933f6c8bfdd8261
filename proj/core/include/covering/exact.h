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

#ifndef COVERING_EXACT_H_
#define COVERING_EXACT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "covering/geometry.h"
#include "covering/setsystem.h"

namespace covering {

// Limits for the brute-force oracles. Every oracle throws BudgetExceeded
// rather than running past these.
struct OracleBudget {
  int64_t max_subsets = int64_t{1} << 20;
  int64_t max_candidate_rects = 10'000'000;
  double timeout_seconds = 600;
};

struct OptCover {
  Cost cost;
  std::vector<SetId> family;
  AssignmentCover witness;
};

// Minimum-cost feasible family by enumerating all 2^m families. Ties keep
// the family with the smallest bitmask. Throws Infeasible or
// BudgetExceeded.
OptCover OptCapacitatedCover(const SetCoverInstance& inst,
                             const OracleBudget& budget = {});

struct OptHitting {
  int size = 0;
  std::vector<int> points;  // sorted ids
};

// Point ids contained (closed) in each rectangle.
std::vector<std::vector<int>> RectMembers(const PointSet& points,
                                          const RectSet& rects);

// Minimum-cardinality hitting set. Up to 25 points the subsets are
// enumerated by increasing size; larger inputs use branch and bound.
// Throws Infeasible naming an unhittable rectangle, or BudgetExceeded.
OptHitting OptHittingSet(const PointSet& points, const RectSet& rects,
                         const OracleBudget& budget = {});
// Forces the branch-and-bound search regardless of size.
OptHitting OptHittingSetBranchAndBound(const PointSet& points,
                                       const RectSet& rects,
                                       const OracleBudget& budget = {});

// All maximal probe-empty rectangles inside `strip` with one vertical side
// on the anchor boundary, by testing every rectangle whose free sides are
// probe coordinates or infinite. Sorted.
std::vector<Rect> EnumMaximalEmptyRects(Strip strip, AnchorSide anchor,
                                        const PointSet& probes);

// Number of maximal probe-empty rectangles in the whole plane. Works for
// degenerate inputs. Throws BudgetExceeded past max_candidate_rects.
int64_t CountAllMaximalEmptyRects(const PointSet& probes,
                                  const OracleBudget& budget = {});

struct NetCheck {
  bool ok = true;
  // A closed rectangle holding at least the heavy threshold of points and
  // no net point, when !ok.
  std::optional<Rect> witness;
  int64_t witness_count = 0;
  double witness_weight = 0;
};

// Smallest point count that makes a range heavy: ceil(eps * n).
int64_t HeavyThreshold(double eps, int64_t n);

// Checks that every rectangle containing >= eps * |points| points contains
// a net point. Net entries are ids into `points`. Works in rank space, so
// ties are broken by id; on general-position input this is exact.
// Throws MalformedInput for eps outside (0, 1) or bad ids.
NetCheck VerifyEpsNet(const PointSet& points, double eps,
                      const std::vector<int>& net);

// Weighted form: heavy means total weight >= eps * (sum of weights).
NetCheck VerifyWeightedEpsNet(const PointSet& points,
                              const std::vector<double>& weights, double eps,
                              const std::vector<int>& net);

}  // namespace covering

#endif  // COVERING_EXACT_H_
