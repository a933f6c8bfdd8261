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

#include "covering/hitting.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "covering/error.h"
#include "covering/exact.h"
#include "covering/rng.h"

namespace covering {

HitCheck VerifyHitting(const PointSet& points, const std::vector<int>& subset,
                       const RectSet& rects) {
  for (size_t i = 0; i < rects.size(); ++i) {
    bool hit = false;
    for (int id : subset) {
      if (id < 0 || static_cast<size_t>(id) >= points.size()) {
        throw MalformedInput("point id " + std::to_string(id) + " out of range");
      }
      if (rects[i].Contains(points[static_cast<size_t>(id)])) {
        hit = true;
        break;
      }
    }
    if (!hit) return {false, static_cast<int>(i)};
  }
  return {};
}

void CheckHittingInstance(const PointSet& points, const RectSet& rects) {
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw MalformedInput("points must be finite");
    }
  }
  for (size_t i = 0; i < rects.size(); ++i) {
    const Rect& r = rects[i];
    if (!std::isfinite(r.x_lo) || !std::isfinite(r.x_hi) ||
        !std::isfinite(r.y_lo) || !std::isfinite(r.y_hi) ||
        r.x_lo > r.x_hi || r.y_lo > r.y_hi) {
      throw MalformedInput("rectangle " + std::to_string(i) +
                           " is not a finite box with lo <= hi");
    }
    const bool stabbed = std::any_of(points.begin(), points.end(),
                                     [&](Point p) { return r.Contains(p); });
    if (!stabbed) {
      throw Infeasible("rectangle " + std::to_string(i) + " contains no point",
                       0);
    }
  }
}

namespace {

// Replicated multiset in rank space. Copies of point p occupy one block of
// consecutive x ranks and one block of consecutive y ranks; blocks follow
// the (coordinate, id) order of the originals, so closed rectangles over
// the originals map to rectangles holding exactly the copies of their
// points.
struct Replicated {
  PointSet points;
  std::vector<int> owner;
};

Replicated Replicate(const PointSet& points, const std::vector<int64_t>& copies,
                     uint64_t seed) {
  const size_t n = points.size();
  std::vector<int> by_x(n), by_y(n);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::iota(by_y.begin(), by_y.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](int a, int b) {
    return std::tie(points[static_cast<size_t>(a)].x, a) <
           std::tie(points[static_cast<size_t>(b)].x, b);
  });
  std::sort(by_y.begin(), by_y.end(), [&](int a, int b) {
    return std::tie(points[static_cast<size_t>(a)].y, a) <
           std::tie(points[static_cast<size_t>(b)].y, b);
  });
  std::vector<int64_t> x_start(n), y_start(n);
  int64_t next = 0;
  for (int id : by_x) {
    x_start[static_cast<size_t>(id)] = next;
    next += copies[static_cast<size_t>(id)];
  }
  next = 0;
  for (int id : by_y) {
    y_start[static_cast<size_t>(id)] = next;
    next += copies[static_cast<size_t>(id)];
  }

  Replicated out;
  out.points.reserve(static_cast<size_t>(next));
  out.owner.reserve(static_cast<size_t>(next));
  Rng rng(seed);
  for (size_t id = 0; id < n; ++id) {
    std::vector<int64_t> y_offsets(static_cast<size_t>(copies[id]));
    std::iota(y_offsets.begin(), y_offsets.end(), 0);
    rng.Shuffle(y_offsets);
    for (int64_t c = 0; c < copies[id]; ++c) {
      out.points.push_back(
          {static_cast<double>(x_start[id] + c),
           static_cast<double>(y_start[id] + y_offsets[static_cast<size_t>(c)])});
      out.owner.push_back(static_cast<int>(id));
    }
  }
  return out;
}

}  // namespace

WeightedNetResult WeightedNet(const PointSet& points,
                              const std::vector<double>& weights, double eps,
                              const NetConfig& config) {
  if (!(eps > 0 && eps < 1)) throw MalformedInput("eps must lie in (0, 1)");
  if (weights.size() != points.size()) {
    throw MalformedInput("one weight per point required");
  }
  double total = 0;
  for (double w : weights) {
    if (!(w > 0) || !std::isfinite(w)) {
      throw MalformedInput("weights must be positive and finite");
    }
    total += w;
  }
  WeightedNetResult result;
  if (points.empty()) return result;

  const double n = static_cast<double>(points.size());
  const double denominator = std::ceil(2 * std::max(n, 2.0) / eps);
  std::vector<int64_t> copies(points.size());
  int64_t replicated = 0;
  for (size_t i = 0; i < points.size(); ++i) {
    copies[i] = std::max<int64_t>(
        1, static_cast<int64_t>(std::ceil(weights[i] / total * denominator)));
    replicated += copies[i];
  }
  result.replicated = replicated;
  NetConfig inner = config;
  // Every heavy range holds at least eps * denominator copies.
  inner.eps = eps * denominator / static_cast<double>(replicated);

  for (int attempt = 0; attempt < config.max_retries; ++attempt) {
    const uint64_t seed = MixSeed(config.seed, static_cast<uint64_t>(attempt));
    inner.seed = seed;
    result.attempts = attempt + 1;
    const Replicated rep = Replicate(points, copies, MixSeed(seed, 1));
    std::vector<int> ids;
    try {
      const EpsNetResult net = BuildEpsNet(rep.points, inner);
      ids.reserve(net.net.size());
      for (int c : net.net) ids.push_back(rep.owner[static_cast<size_t>(c)]);
    } catch (const NetSampleFailure&) {
      continue;
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (VerifyWeightedEpsNet(points, weights, eps, ids).ok) {
      result.ids = std::move(ids);
      return result;
    }
  }
  throw NetSampleFailure("weighted net failed verification " +
                         std::to_string(config.max_retries) + " times");
}

namespace {

// Drops, in decreasing id order, every point whose rectangles all stay hit
// without it.
std::vector<int> Prune(const std::vector<int>& chosen,
                       const std::vector<std::vector<int>>& members,
                       size_t num_points) {
  std::vector<int> hits(members.size(), 0);
  std::vector<char> in(num_points, 0);
  for (int id : chosen) in[static_cast<size_t>(id)] = 1;
  std::vector<std::vector<int>> rects_of(num_points);
  for (size_t r = 0; r < members.size(); ++r) {
    for (int id : members[r]) {
      rects_of[static_cast<size_t>(id)].push_back(static_cast<int>(r));
      if (in[static_cast<size_t>(id)]) ++hits[r];
    }
  }
  std::vector<int> order = chosen;
  std::sort(order.rbegin(), order.rend());
  for (int id : order) {
    const auto& mine = rects_of[static_cast<size_t>(id)];
    const bool needed = std::any_of(mine.begin(), mine.end(),
                                    [&](int r) { return hits[static_cast<size_t>(r)] <= 1; });
    if (needed) continue;
    in[static_cast<size_t>(id)] = 0;
    for (int r : mine) --hits[static_cast<size_t>(r)];
  }
  std::vector<int> kept;
  for (size_t id = 0; id < num_points; ++id) {
    if (in[id]) kept.push_back(static_cast<int>(id));
  }
  return kept;
}

}  // namespace

HittingResult SolveHitting(const PointSet& points, const RectSet& rects,
                           const NetConfig& config) {
  CheckHittingInstance(points, rects);
  HittingResult result;
  if (rects.empty()) return result;

  const int64_t n = static_cast<int64_t>(points.size());
  const std::vector<std::vector<int>> members = RectMembers(points, rects);
  int64_t max_guess = 1;
  while (max_guess < n) max_guess *= 2;

  for (int64_t k = 1; k <= max_guess; k *= 2) {
    const double eps = 1.0 / (2.0 * static_cast<double>(k));
    const int limit = static_cast<int>(std::ceil(
        4.0 * static_cast<double>(k) *
        std::max(1.0, std::log2(static_cast<double>(n) / static_cast<double>(k)))));
    std::vector<int> exponent(points.size(), 0);
    for (int round = 0; round < limit; ++round) {
      // Relative weights 2^(e - max e), floored so that none underflows.
      const int top = *std::max_element(exponent.begin(), exponent.end());
      std::vector<double> weights(points.size());
      for (size_t i = 0; i < points.size(); ++i) {
        weights[i] = std::ldexp(1.0, std::max(exponent[i] - top, -1000));
      }
      NetConfig net_config = config;
      net_config.seed = MixSeed(MixSeed(config.seed, static_cast<uint64_t>(k)),
                                static_cast<uint64_t>(round));
      const WeightedNetResult net = WeightedNet(points, weights, eps, net_config);
      result.net_calls += net.attempts;

      HittingRound entry;
      entry.guess = k;
      entry.round = round;
      entry.net_size = static_cast<int>(net.ids.size());
      entry.net_attempts = net.attempts;
      const HitCheck check = VerifyHitting(points, net.ids, rects);
      if (check.ok) {
        result.log.push_back(entry);
        result.points = Prune(net.ids, members, points.size());
        result.guess = k;
        if (!VerifyHitting(points, result.points, rects).ok) {
          throw Error("internal: pruned hitting set misses a rectangle");
        }
        return result;
      }
      entry.violated = check.unhit;
      for (int id : members[static_cast<size_t>(*check.unhit)]) {
        ++exponent[static_cast<size_t>(id)];
        ++entry.doublings;
      }
      result.log.push_back(entry);
    }
  }
  throw BgDivergence("no guess up to " + std::to_string(max_guess) +
                     " produced a hitting set within its round limit",
                     static_cast<int64_t>(result.log.size()));
}

}  // namespace covering
