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

#include "covering/geometry.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "covering/error.h"

namespace covering {
namespace {

template <typename Key>
std::vector<int> SortedIds(const PointSet& points, Key key) {
  std::vector<int> ids(points.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    return key(points[static_cast<size_t>(a)]) <
           key(points[static_cast<size_t>(b)]);
  });
  return ids;
}

// Returns the id pair of the first repeated coordinate, or {-1, -1}.
template <typename Key>
std::pair<int, int> FirstRepeat(const PointSet& points, Key key) {
  std::vector<int> ids = SortedIds(points, key);
  for (size_t i = 1; i < ids.size(); ++i) {
    if (key(points[static_cast<size_t>(ids[i - 1])]) ==
        key(points[static_cast<size_t>(ids[i])])) {
      return {ids[i - 1], ids[i]};
    }
  }
  return {-1, -1};
}

void ThrowRepeat(const char* axis, std::pair<int, int> ids, double value) {
  std::ostringstream os;
  os << "points " << ids.first << " and " << ids.second << " share " << axis
     << " = " << value << "; input must be in general position";
  throw DegenerateInput(os.str());
}

template <typename Value>
class Fenwick {
 public:
  explicit Fenwick(size_t n) : tree_(n + 1, Value{}) {}
  void Add(size_t i, Value v) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += v;
  }
  // Sum over [0, i).
  Value Prefix(size_t i) const {
    Value s{};
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<Value> tree_;
};

template <typename Value, typename WeightOf>
std::vector<Value> InteriorSums(const PointSet& points, WeightOf weight_of,
                                const std::vector<Rect>& queries) {
  std::vector<double> ys;
  ys.reserve(points.size());
  for (const Point& p : points) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  const std::vector<int> by_x = SortedIds(points, [](Point p) { return p.x; });

  struct Event {
    double x;
    int inclusive;  // 0: points with x < value, 1: x <= value
    int query;
    int sign;
  };
  std::vector<Event> events;
  events.reserve(2 * queries.size());
  for (size_t q = 0; q < queries.size(); ++q) {
    const Rect& r = queries[q];
    events.push_back({r.x_hi, 0, static_cast<int>(q), +1});
    events.push_back({r.x_lo, 1, static_cast<int>(q), -1});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.inclusive < b.inclusive;
  });

  std::vector<Value> result(queries.size(), Value{});
  Fenwick<Value> tree(ys.size());
  size_t next = 0;
  for (const Event& ev : events) {
    while (next < by_x.size()) {
      const int id = by_x[next];
      const double x = points[static_cast<size_t>(id)].x;
      if (ev.inclusive ? x > ev.x : x >= ev.x) break;
      const size_t yi = static_cast<size_t>(
          std::lower_bound(ys.begin(), ys.end(),
                           points[static_cast<size_t>(id)].y) -
          ys.begin());
      tree.Add(yi, weight_of(id));
      ++next;
    }
    const Rect& r = queries[static_cast<size_t>(ev.query)];
    const size_t lo = static_cast<size_t>(
        std::upper_bound(ys.begin(), ys.end(), r.y_lo) - ys.begin());
    const size_t hi = static_cast<size_t>(
        std::lower_bound(ys.begin(), ys.end(), r.y_hi) - ys.begin());
    if (hi > lo) {
      Value inside = tree.Prefix(hi) - tree.Prefix(lo);
      if (ev.sign > 0) {
        result[static_cast<size_t>(ev.query)] += inside;
      } else {
        result[static_cast<size_t>(ev.query)] -= inside;
      }
    }
  }
  return result;
}

}  // namespace

std::vector<int> SortedByX(const PointSet& points) {
  return SortedIds(points, [](Point p) { return p.x; });
}

bool InGeneralPosition(const PointSet& points) {
  return FirstRepeat(points, [](Point p) { return p.x; }).first < 0 &&
         FirstRepeat(points, [](Point p) { return p.y; }).first < 0;
}

void RequireDistinctX(const PointSet& points) {
  auto rep = FirstRepeat(points, [](Point p) { return p.x; });
  if (rep.first >= 0) ThrowRepeat("x", rep, points[static_cast<size_t>(rep.first)].x);
}

void RequireGeneralPosition(const PointSet& points) {
  RequireDistinctX(points);
  auto rep = FirstRepeat(points, [](Point p) { return p.y; });
  if (rep.first >= 0) ThrowRepeat("y", rep, points[static_cast<size_t>(rep.first)].y);
}

PointSet RankTransform(const PointSet& points) {
  PointSet out(points.size());
  std::vector<int> by_x = SortedIds(points, [](Point p) { return p.x; });
  std::vector<int> by_y = SortedIds(points, [](Point p) { return p.y; });
  for (size_t i = 0; i < by_x.size(); ++i) {
    out[static_cast<size_t>(by_x[i])].x = static_cast<double>(i);
    out[static_cast<size_t>(by_y[i])].y = static_cast<double>(i);
  }
  return out;
}

Rect BoundingBox(const PointSet& points, const std::vector<int>& ids) {
  if (ids.empty()) return Rect{};
  Rect box{kInf, kInf, -kInf, -kInf};
  for (int id : ids) {
    const Point p = points[static_cast<size_t>(id)];
    box.x_lo = std::min(box.x_lo, p.x);
    box.y_lo = std::min(box.y_lo, p.y);
    box.x_hi = std::max(box.x_hi, p.x);
    box.y_hi = std::max(box.y_hi, p.y);
  }
  return box;
}

std::vector<int64_t> CountInteriorPoints(const PointSet& points,
                                         const std::vector<Rect>& queries) {
  return InteriorSums<int64_t>(
      points, [](int) { return int64_t{1}; }, queries);
}

std::vector<double> SumInteriorWeights(const PointSet& points,
                                       const std::vector<double>& weights,
                                       const std::vector<Rect>& queries) {
  return InteriorSums<double>(
      points, [&](int id) { return weights[static_cast<size_t>(id)]; },
      queries);
}

}  // namespace covering
