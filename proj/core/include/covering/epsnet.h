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

#ifndef COVERING_EPSNET_H_
#define COVERING_EPSNET_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "covering/geometry.h"

namespace covering {

// max(1, log2(log2(max(x, 4)))). Keeps s and the weight-factor threshold
// positive for small r.
double LogLog2(double x);

struct NetConfig {
  double eps = 0.1;
  double c = 2;       // first-level constant: s = c * r * loglog r
  double k_hw = 4;    // secondary net size constant
  uint64_t seed = 0;
  int max_retries = 20;

  double r() const { return 2.0 / eps; }
  double s() const { return c * r() * LogLog2(r()); }
};

// Throws MalformedInput unless eps is in (0, 1) and the constants are
// positive.
void ValidateConfig(const NetConfig& config);

struct BBTNode {
  int id = 0;
  int level = 0;
  int parent = -1;
  int left = -1;
  int right = -1;
  Strip strip;
  double split = 0;  // x of the dividing line; meaningful for internal nodes
  int begin = 0;     // P_v is order[begin, end) of the owning tree
  int end = 0;
  // Side of the strip that lies on the parent's dividing line. Empty for
  // the root.
  std::optional<AnchorSide> entry_side;

  bool is_leaf() const { return left < 0; }
  int size() const { return end - begin; }
};

// Balanced binary tree over the x-order. Nodes are in preorder.
struct BalancedTree {
  std::vector<int> order;  // point ids sorted by x
  std::vector<BBTNode> nodes;
  int max_leaf = 0;   // nodes larger than this are split
  int max_depth = 0;  // ceil(log2 r); nodes at this depth are never split

  int levels() const;
};

// Splits at the median x until every node holds at most floor(n / r)
// points or reaches depth ceil(log2 r). Throws DegenerateInput on repeated
// x and MalformedInput for r <= 0.
BalancedTree BuildBalancedTree(const PointSet& points, double r);

// Includes each of the n ids independently with probability min(1, s / n).
std::vector<int> SampleFirstLevel(int n, double s, uint64_t seed);

struct AnchoredRect {
  int node = -1;
  AnchorSide anchor = AnchorSide::kLeft;
  Rect rect;
  std::vector<int> defining;  // sample points on the free sides
  int64_t count = 0;          // |M ∩ P|, closed
  double weight_factor = 0;   // s * count / n
  bool heavy = false;         // weight_factor >= s / r
  std::vector<int> net;       // N_M, for heavy rectangles
  int attempts = 0;
};

// The maximal sample-empty rectangles of `strip` anchored on `side`.
// `sample` lists point ids lying strictly inside the strip. Output is
// sorted by rectangle; in general position it has 2|sample| + 1 entries.
std::vector<AnchoredRect> MaximalAnchoredEmpty(Strip strip, AnchorSide side,
                                               const PointSet& points,
                                               const std::vector<int>& sample);

// Upper bound on |N_M|: ceil(k_hw * t * log2 t), at least 1.
int64_t SecondaryNetSizeBound(double weight_factor, double k_hw);

struct SecondaryNet {
  std::vector<int> ids;
  int attempts = 0;
};

// A verified (1 / weight_factor)-net of the points `local` (ids into
// `points`) drawn uniformly at random; retried up to config.max_retries
// times. Throws NetSampleFailure.
SecondaryNet BuildSecondaryNet(const PointSet& points,
                               const std::vector<int>& local,
                               double weight_factor, const NetConfig& config,
                               uint64_t stream_seed);

struct LevelStats {
  int level = 0;
  int nodes = 0;
  int64_t sample_points = 0;       // sum of r_v over the level
  std::vector<int64_t> at_least;   // at_least[j] = |CT_j(R)|
};

struct EpsNetResult {
  int n = 0;
  double eps = 0;
  double r = 0;
  double s = 0;
  std::vector<int> net;          // sorted ids
  std::vector<int> first_level;  // R, sorted ids
  BalancedTree tree;
  std::vector<AnchoredRect> rects;  // by node, then rectangle
  std::vector<LevelStats> levels;   // one per non-root level
  int retries = 0;                  // extra secondary-net attempts
};

// Two-level construction: first-level sample R, then for every non-root
// node the rectangles anchored on its entry side, and for each heavy one a
// secondary net. Requires n >= 2r and general position.
EpsNetResult BuildEpsNet(const PointSet& points, const NetConfig& config);

struct DecayRow {
  int level = 0;
  int j = 0;
  int64_t count = 0;
};

// Flattens the per-level |CT_j(R)| table.
std::vector<DecayRow> DecayProfile(const EpsNetResult& result);

}  // namespace covering

#endif  // COVERING_EPSNET_H_
