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

#ifndef COVERING_GEOMETRY_H_
#define COVERING_GEOMETRY_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace covering {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Point ids are positions in the vector.
using PointSet = std::vector<Point>;

// Axis-parallel rectangle. Sides may be +-infinity for the unbounded
// families; finite inputs are closed.
struct Rect {
  double x_lo = -kInf;
  double y_lo = -kInf;
  double x_hi = kInf;
  double y_hi = kInf;

  bool Contains(Point p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
  bool InteriorContains(Point p) const {
    return x_lo < p.x && p.x < x_hi && y_lo < p.y && p.y < y_hi;
  }
  bool ContainsRect(const Rect& o) const {
    return x_lo <= o.x_lo && o.x_hi <= x_hi && y_lo <= o.y_lo && o.y_hi <= y_hi;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
  friend auto operator<=>(const Rect&, const Rect&) = default;
};

using RectSet = std::vector<Rect>;

enum class AnchorSide { kLeft, kRight };

// Open vertical slab lo < x < hi.
struct Strip {
  double lo = -kInf;
  double hi = kInf;
};

// All x distinct and all y distinct.
bool InGeneralPosition(const PointSet& points);

// Throws DegenerateInput naming the first repeated coordinate.
void RequireGeneralPosition(const PointSet& points);
void RequireDistinctX(const PointSet& points);

// Replaces every point by its (x-rank, y-rank), ties broken by id, so the
// image is in general position and preserves every closed-rectangle
// containment of the original.
PointSet RankTransform(const PointSet& points);

// Calls emit(rect) for every maximal open axis-parallel rectangle whose
// interior contains none of `points`. Requires general position.
// Output size is O(k^2) in the worst case.
template <typename Emit>
void ForEachMaximalEmptyRect(const PointSet& points, Emit&& emit);

// Closed bounding box of the given points; the empty box is returned as
// the whole plane.
Rect BoundingBox(const PointSet& points, const std::vector<int>& ids);

// Offline counts of points strictly inside each open query rectangle, via a
// sweep over x with a Fenwick tree on y-ranks. Weighted variant sums
// per-point weights instead.
std::vector<int64_t> CountInteriorPoints(const PointSet& points,
                                         const std::vector<Rect>& queries);
std::vector<double> SumInteriorWeights(const PointSet& points,
                                       const std::vector<double>& weights,
                                       const std::vector<Rect>& queries);

// ---- implementation ----

std::vector<int> SortedByX(const PointSet& points);

template <typename Emit>
void ForEachMaximalEmptyRect(const PointSet& points, Emit&& emit) {
  const std::vector<int> order = SortedByX(points);
  const size_t k = order.size();
  // Left side supported by a point.
  for (size_t i = 0; i < k; ++i) {
    const Point p = points[static_cast<size_t>(order[i])];
    double top = kInf, bottom = -kInf;
    for (size_t j = i + 1; j < k; ++j) {
      const Point q = points[static_cast<size_t>(order[j])];
      if (q.y <= bottom || q.y >= top) continue;
      emit(Rect{p.x, bottom, q.x, top});
      if (q.y > p.y) {
        top = q.y;
      } else {
        bottom = q.y;
      }
    }
    emit(Rect{p.x, bottom, kInf, top});
  }
  // Unbounded on the left, right side supported by a point.
  for (size_t j = 0; j < k; ++j) {
    const Point q = points[static_cast<size_t>(order[j])];
    double top = kInf, bottom = -kInf;
    for (size_t i = 0; i < j; ++i) {
      const double y = points[static_cast<size_t>(order[i])].y;
      if (y > q.y && y < top) top = y;
      if (y < q.y && y > bottom) bottom = y;
    }
    emit(Rect{-kInf, bottom, q.x, top});
  }
  // Horizontal bands.
  std::vector<double> ys;
  ys.reserve(k);
  for (const Point& p : points) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  double below = -kInf;
  for (double y : ys) {
    emit(Rect{-kInf, below, kInf, y});
    below = y;
  }
  emit(Rect{-kInf, below, kInf, kInf});
}

}  // namespace covering

#endif  // COVERING_GEOMETRY_H_
