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

#include "covering/epsnet.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <tuple>

#include "covering/error.h"
#include "covering/exact.h"
#include "covering/rng.h"

namespace covering {

double LogLog2(double x) {
  return std::max(1.0, std::log2(std::log2(std::max(x, 4.0))));
}

void ValidateConfig(const NetConfig& config) {
  if (!(config.eps > 0 && config.eps < 1)) {
    throw MalformedInput("eps must lie in (0, 1)");
  }
  if (!(config.c > 0) || !(config.k_hw > 0)) {
    throw MalformedInput("constants c and k_hw must be positive");
  }
  if (config.max_retries < 1) {
    throw MalformedInput("max_retries must be positive");
  }
}

int BalancedTree::levels() const {
  int deepest = 0;
  for (const BBTNode& v : nodes) deepest = std::max(deepest, v.level);
  return nodes.empty() ? 0 : deepest + 1;
}

namespace {

int CeilLog2(double r) {
  int d = 0;
  while (std::ldexp(1.0, d) < r) ++d;
  return d;
}

void Split(BalancedTree& tree, const PointSet& points, int id) {
  // Copy: push_back below may reallocate.
  const BBTNode v = tree.nodes[static_cast<size_t>(id)];
  if (v.size() <= tree.max_leaf || v.level >= tree.max_depth || v.size() < 2) {
    return;
  }
  const int mid = v.begin + v.size() / 2;
  const double left_x = points[static_cast<size_t>(tree.order[static_cast<size_t>(mid - 1)])].x;
  const double right_x = points[static_cast<size_t>(tree.order[static_cast<size_t>(mid)])].x;
  const double split = left_x + (right_x - left_x) / 2;

  BBTNode left;
  left.id = static_cast<int>(tree.nodes.size());
  left.level = v.level + 1;
  left.parent = id;
  left.strip = Strip{v.strip.lo, split};
  left.begin = v.begin;
  left.end = mid;
  left.entry_side = AnchorSide::kRight;
  tree.nodes.push_back(left);
  tree.nodes[static_cast<size_t>(id)].left = left.id;
  tree.nodes[static_cast<size_t>(id)].split = split;
  Split(tree, points, left.id);

  BBTNode right;
  right.id = static_cast<int>(tree.nodes.size());
  right.level = v.level + 1;
  right.parent = id;
  right.strip = Strip{split, v.strip.hi};
  right.begin = mid;
  right.end = v.end;
  right.entry_side = AnchorSide::kLeft;
  tree.nodes.push_back(right);
  tree.nodes[static_cast<size_t>(id)].right = right.id;
  Split(tree, points, right.id);
}

}  // namespace

BalancedTree BuildBalancedTree(const PointSet& points, double r) {
  if (!(r > 0)) throw MalformedInput("r must be positive");
  RequireDistinctX(points);
  const int n = static_cast<int>(points.size());
  BalancedTree tree;
  tree.order = SortedByX(points);
  tree.max_leaf = std::max(1, static_cast<int>(std::floor(n / r)));
  tree.max_depth = CeilLog2(r);
  BBTNode root;
  root.end = n;
  tree.nodes.push_back(root);
  Split(tree, points, 0);
  return tree;
}

std::vector<int> SampleFirstLevel(int n, double s, uint64_t seed) {
  std::vector<int> sample;
  if (n <= 0) return sample;
  const double pi = std::min(1.0, s / n);
  Rng rng(MixSeed(seed, 0));
  for (int i = 0; i < n; ++i) {
    if (rng.Bernoulli(pi)) sample.push_back(i);
  }
  return sample;
}

namespace {

struct Probe {
  double x;
  double y;
  int id;
};

struct RawRect {
  Rect rect;
  std::vector<int> defining;
};

// Maximal probe-empty rectangles of the slab (lo, hi) whose left side lies
// on x = lo. Three families: right side on a probe, top and bottom on two
// y-consecutive probes, and the two semi-unbounded ones.
std::vector<RawRect> LeftAnchored(double lo, double hi,
                                  std::vector<Probe> probes) {
  std::vector<RawRect> out;
  if (probes.empty()) {
    out.push_back({Rect{lo, -kInf, hi, kInf}, {}});
    return out;
  }
  std::sort(probes.begin(), probes.end(), [](const Probe& a, const Probe& b) {
    return std::tie(a.x, a.y, a.id) < std::tie(b.x, b.y, b.id);
  });

  // Right side supported by q: the vertical gap around q.y among probes
  // strictly left of q.
  std::set<std::pair<double, int>> seen;
  size_t i = 0;
  while (i < probes.size()) {
    size_t j = i;
    while (j < probes.size() && probes[j].x == probes[i].x) ++j;
    for (size_t k = i; k < j; ++k) {
      const Probe& q = probes[k];
      auto above = seen.lower_bound({q.y, -1});
      if (above != seen.end() && above->first == q.y) continue;  // q is hidden
      RawRect rr{Rect{lo, -kInf, q.x, kInf}, {q.id}};
      if (above != seen.end()) {
        rr.rect.y_hi = above->first;
        rr.defining.push_back(above->second);
      }
      if (above != seen.begin()) {
        auto below = std::prev(above);
        rr.rect.y_lo = below->first;
        rr.defining.push_back(below->second);
      }
      out.push_back(std::move(rr));
    }
    for (size_t k = i; k < j; ++k) seen.insert({probes[k].y, probes[k].id});
    i = j;
  }

  std::vector<Probe> by_y = probes;
  std::sort(by_y.begin(), by_y.end(), [](const Probe& a, const Probe& b) {
    return std::tie(a.y, a.x, a.id) < std::tie(b.y, b.x, b.id);
  });
  for (size_t k = 0; k + 1 < by_y.size(); ++k) {
    if (!(by_y[k].y < by_y[k + 1].y)) continue;
    out.push_back({Rect{lo, by_y[k].y, hi, by_y[k + 1].y},
                   {by_y[k].id, by_y[k + 1].id}});
  }
  out.push_back({Rect{lo, by_y.back().y, hi, kInf}, {by_y.back().id}});
  out.push_back({Rect{lo, -kInf, hi, by_y.front().y}, {by_y.front().id}});

  // Probes sharing an x can support the same rectangle.
  std::sort(out.begin(), out.end(), [](const RawRect& a, const RawRect& b) {
    return a.rect < b.rect;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RawRect& a, const RawRect& b) {
                          return a.rect == b.rect;
                        }),
            out.end());
  return out;
}

}  // namespace

std::vector<AnchoredRect> MaximalAnchoredEmpty(Strip strip, AnchorSide side,
                                               const PointSet& points,
                                               const std::vector<int>& sample) {
  const bool mirror = side == AnchorSide::kRight;
  std::vector<Probe> probes;
  probes.reserve(sample.size());
  for (int id : sample) {
    const Point p = points[static_cast<size_t>(id)];
    probes.push_back({mirror ? -p.x : p.x, p.y, id});
  }
  std::vector<RawRect> raw = mirror
                                 ? LeftAnchored(-strip.hi, -strip.lo, probes)
                                 : LeftAnchored(strip.lo, strip.hi, probes);
  std::vector<AnchoredRect> out;
  out.reserve(raw.size());
  for (RawRect& rr : raw) {
    AnchoredRect m;
    m.anchor = side;
    m.rect = rr.rect;
    if (mirror) {
      m.rect.x_lo = -rr.rect.x_hi;
      m.rect.x_hi = -rr.rect.x_lo;
    }
    m.defining = std::move(rr.defining);
    std::sort(m.defining.begin(), m.defining.end());
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const AnchoredRect& a, const AnchoredRect& b) {
              return a.rect < b.rect;
            });
  return out;
}

int64_t SecondaryNetSizeBound(double weight_factor, double k_hw) {
  if (!(weight_factor > 1)) return 1;
  const double bound =
      std::ceil(k_hw * weight_factor * std::log2(weight_factor) - 1e-9);
  return std::max<int64_t>(1, static_cast<int64_t>(bound));
}

SecondaryNet BuildSecondaryNet(const PointSet& points,
                               const std::vector<int>& local,
                               double weight_factor, const NetConfig& config,
                               uint64_t stream_seed) {
  SecondaryNet out;
  if (local.empty()) return out;
  const int64_t bound = SecondaryNetSizeBound(weight_factor, config.k_hw);
  if (!(weight_factor > 1)) {
    // Every range with >= |local| / t >= |local| points holds all of them.
    out.ids = {local.front()};
    out.attempts = 1;
    return out;
  }
  if (static_cast<int64_t>(local.size()) <= bound) {
    out.ids = local;
    std::sort(out.ids.begin(), out.ids.end());
    out.attempts = 1;
    return out;
  }
  PointSet local_points;
  local_points.reserve(local.size());
  for (int id : local) local_points.push_back(points[static_cast<size_t>(id)]);
  const double local_eps = 1.0 / weight_factor;
  for (int attempt = 0; attempt < config.max_retries; ++attempt) {
    Rng rng(MixSeed(stream_seed, static_cast<uint64_t>(attempt)));
    std::vector<int> picks = rng.SampleWithoutReplacement(
        static_cast<int>(local.size()), static_cast<int>(bound));
    out.attempts = attempt + 1;
    if (VerifyEpsNet(local_points, local_eps, picks).ok) {
      out.ids.reserve(picks.size());
      for (int k : picks) out.ids.push_back(local[static_cast<size_t>(k)]);
      std::sort(out.ids.begin(), out.ids.end());
      return out;
    }
  }
  throw NetSampleFailure("secondary net of size " + std::to_string(bound) +
                         " over " + std::to_string(local.size()) +
                         " points failed verification " +
                         std::to_string(config.max_retries) + " times");
}

namespace {

// Closed point counts of anchored rectangles within one node. Left-anchored
// rectangles cover a prefix of the node's x-order, right-anchored ones a
// suffix; both reduce to prefix queries over y-ranks.
std::vector<int64_t> CountInNode(const BalancedTree& tree,
                                 const BBTNode& node, const PointSet& points,
                                 const std::vector<AnchoredRect>& rects) {
  const size_t size = static_cast<size_t>(node.size());
  std::vector<double> xs(size), ys(size);
  for (size_t i = 0; i < size; ++i) {
    const Point p = points[static_cast<size_t>(tree.order[static_cast<size_t>(node.begin) + i])];
    xs[i] = p.x;
    ys[i] = p.y;
  }
  std::vector<double> sorted_ys = ys;
  std::sort(sorted_ys.begin(), sorted_ys.end());

  struct Query {
    size_t prefix;
    size_t y_begin;
    size_t y_end;
    int sign;
    size_t rect;
  };
  std::vector<Query> queries;
  for (size_t k = 0; k < rects.size(); ++k) {
    const Rect& r = rects[k].rect;
    const size_t y_begin = static_cast<size_t>(
        std::lower_bound(sorted_ys.begin(), sorted_ys.end(), r.y_lo) - sorted_ys.begin());
    const size_t y_end = static_cast<size_t>(
        std::upper_bound(sorted_ys.begin(), sorted_ys.end(), r.y_hi) - sorted_ys.begin());
    if (rects[k].anchor == AnchorSide::kLeft) {
      const size_t prefix = static_cast<size_t>(
          std::upper_bound(xs.begin(), xs.end(), r.x_hi) - xs.begin());
      queries.push_back({prefix, y_begin, y_end, +1, k});
    } else {
      const size_t start = static_cast<size_t>(
          std::lower_bound(xs.begin(), xs.end(), r.x_lo) - xs.begin());
      queries.push_back({size, y_begin, y_end, +1, k});
      queries.push_back({start, y_begin, y_end, -1, k});
    }
  }
  std::sort(queries.begin(), queries.end(),
            [](const Query& a, const Query& b) { return a.prefix < b.prefix; });

  std::vector<int64_t> fenwick(size + 1, 0);
  auto add = [&](size_t i) {
    for (++i; i <= size; i += i & (~i + 1)) ++fenwick[i];
  };
  auto prefix_sum = [&](size_t i) {
    int64_t s = 0;
    for (; i > 0; i -= i & (~i + 1)) s += fenwick[i];
    return s;
  };

  std::vector<int64_t> counts(rects.size(), 0);
  size_t added = 0;
  for (const Query& q : queries) {
    while (added < q.prefix) {
      add(static_cast<size_t>(
          std::lower_bound(sorted_ys.begin(), sorted_ys.end(), ys[added]) -
          sorted_ys.begin()));
      ++added;
    }
    if (q.y_end > q.y_begin) {
      counts[q.rect] += q.sign * (prefix_sum(q.y_end) - prefix_sum(q.y_begin));
    }
  }
  return counts;
}

}  // namespace

EpsNetResult BuildEpsNet(const PointSet& points, const NetConfig& config) {
  ValidateConfig(config);
  const int n = static_cast<int>(points.size());
  const double r = config.r();
  if (n < 2 * r) {
    throw MalformedInput("need n >= 2r = " + std::to_string(2 * r) +
                         " points for eps = " + std::to_string(config.eps) +
                         ", got " + std::to_string(n));
  }
  RequireGeneralPosition(points);

  EpsNetResult result;
  result.n = n;
  result.eps = config.eps;
  result.r = r;
  result.s = std::min(config.s(), static_cast<double>(n));
  result.tree = BuildBalancedTree(points, r);
  result.first_level = SampleFirstLevel(n, result.s, config.seed);

  std::vector<char> in_sample(static_cast<size_t>(n), 0);
  for (int id : result.first_level) in_sample[static_cast<size_t>(id)] = 1;
  std::vector<char> in_net = in_sample;

  const double heavy_count = n / r;
  const int num_levels = result.tree.levels();
  result.levels.resize(static_cast<size_t>(std::max(0, num_levels - 1)));
  for (int i = 1; i < num_levels; ++i) result.levels[static_cast<size_t>(i - 1)].level = i;
  std::vector<std::vector<int64_t>> floor_histogram(result.levels.size());

  uint64_t rect_serial = 0;
  for (const BBTNode& v : result.tree.nodes) {
    if (!v.entry_side) continue;
    std::vector<int> sample_v;
    for (int k = v.begin; k < v.end; ++k) {
      const int id = result.tree.order[static_cast<size_t>(k)];
      if (in_sample[static_cast<size_t>(id)]) sample_v.push_back(id);
    }
    std::vector<AnchoredRect> rects =
        MaximalAnchoredEmpty(v.strip, *v.entry_side, points, sample_v);
    std::vector<int64_t> counts = CountInNode(result.tree, v, points, rects);

    LevelStats& stats = result.levels[static_cast<size_t>(v.level - 1)];
    ++stats.nodes;
    stats.sample_points += static_cast<int64_t>(sample_v.size());
    auto& hist = floor_histogram[static_cast<size_t>(v.level - 1)];

    for (size_t k = 0; k < rects.size(); ++k) {
      AnchoredRect& m = rects[k];
      m.node = v.id;
      m.count = counts[k];
      m.weight_factor = result.s * static_cast<double>(m.count) / n;
      m.heavy = static_cast<double>(m.count) >= heavy_count - 1e-9;
      const size_t j = static_cast<size_t>(std::floor(m.weight_factor + 1e-9));
      if (hist.size() <= j) hist.resize(j + 1, 0);
      ++hist[j];

      const uint64_t stream = MixSeed(config.seed, ++rect_serial);
      if (!m.heavy) continue;
      std::vector<int> local;
      for (int q = v.begin; q < v.end; ++q) {
        const int id = result.tree.order[static_cast<size_t>(q)];
        if (m.rect.Contains(points[static_cast<size_t>(id)])) local.push_back(id);
      }
      SecondaryNet sub =
          BuildSecondaryNet(points, local, m.weight_factor, config, stream);
      m.net = std::move(sub.ids);
      m.attempts = sub.attempts;
      result.retries += std::max(0, sub.attempts - 1);
      for (int id : m.net) in_net[static_cast<size_t>(id)] = 1;
    }
    for (AnchoredRect& m : rects) result.rects.push_back(std::move(m));
  }

  for (size_t i = 0; i < result.levels.size(); ++i) {
    const auto& hist = floor_histogram[i];
    auto& at_least = result.levels[i].at_least;
    at_least.assign(hist.size(), 0);
    int64_t running = 0;
    for (size_t j = hist.size(); j-- > 0;) {
      running += hist[j];
      at_least[j] = running;
    }
  }
  for (int id = 0; id < n; ++id) {
    if (in_net[static_cast<size_t>(id)]) result.net.push_back(id);
  }
  return result;
}

std::vector<DecayRow> DecayProfile(const EpsNetResult& result) {
  std::vector<DecayRow> rows;
  for (const LevelStats& stats : result.levels) {
    for (size_t j = 0; j < stats.at_least.size(); ++j) {
      rows.push_back({stats.level, static_cast<int>(j), stats.at_least[j]});
    }
  }
  return rows;
}

}  // namespace covering
