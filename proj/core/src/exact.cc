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

#include "covering/exact.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <string>

#include "covering/error.h"
#include "covering/flowcheck.h"

namespace covering {
namespace {

class Deadline {
 public:
  explicit Deadline(double seconds)
      : seconds_(seconds), start_(std::chrono::steady_clock::now()) {}
  bool Expired() const {
    if (seconds_ <= 0) return false;
    std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start_;
    return elapsed.count() > seconds_;
  }

 private:
  double seconds_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

OptCover OptCapacitatedCover(const SetCoverInstance& inst,
                             const OracleBudget& budget) {
  CheckInstance(inst);
  const int m = inst.num_sets();
  if (m > 62 || (int64_t{1} << m) > budget.max_subsets) {
    throw BudgetExceeded("2^" + std::to_string(m) +
                         " families exceed the subset budget of " +
                         std::to_string(budget.max_subsets));
  }
  Deadline deadline(budget.timeout_seconds);
  std::optional<OptCover> best;
  const uint64_t limit = uint64_t{1} << m;
  for (uint64_t mask = 0; mask < limit; ++mask) {
    if ((mask & 0xfff) == 0 && deadline.Expired()) {
      throw BudgetExceeded("capacitated cover oracle timed out");
    }
    Cost cost;
    std::vector<SetId> family;
    for (int s = 0; s < m; ++s) {
      if (mask >> s & 1) {
        cost += inst.set(s).cost;
        family.push_back(s);
      }
    }
    if (best && cost >= best->cost) continue;
    CoverValue v = MaxCoverValue(inst, family);
    if (v.value == inst.n_elements) {
      best = OptCover{cost, family, std::move(v.witness)};
    }
  }
  if (!best) {
    std::vector<SetId> all(static_cast<size_t>(m));
    for (int s = 0; s < m; ++s) all[static_cast<size_t>(s)] = s;
    int64_t f = MaxCoverValue(inst, all).value;
    throw Infeasible("no feasible family; f(all sets) = " + std::to_string(f),
                     f);
  }
  return *best;
}

std::vector<std::vector<int>> RectMembers(const PointSet& points,
                                          const RectSet& rects) {
  std::vector<std::vector<int>> members(rects.size());
  for (size_t j = 0; j < rects.size(); ++j) {
    for (size_t i = 0; i < points.size(); ++i) {
      if (rects[j].Contains(points[i])) members[j].push_back(static_cast<int>(i));
    }
  }
  return members;
}

namespace {

std::vector<std::vector<int>> HittableMembers(const PointSet& points,
                                              const RectSet& rects) {
  auto members = RectMembers(points, rects);
  for (size_t j = 0; j < members.size(); ++j) {
    if (members[j].empty()) {
      throw Infeasible("rectangle " + std::to_string(j) + " contains no point");
    }
  }
  return members;
}

OptHitting Exhaustive(const PointSet& points,
                      const std::vector<std::vector<int>>& members,
                      const OracleBudget& budget) {
  const int n = static_cast<int>(points.size());
  std::vector<uint32_t> masks;
  masks.reserve(members.size());
  for (const auto& mem : members) {
    uint32_t mask = 0;
    for (int id : mem) mask |= uint32_t{1} << id;
    masks.push_back(mask);
  }
  Deadline deadline(budget.timeout_seconds);
  int64_t examined = 0;
  for (int k = 0; k <= n; ++k) {
    // Gosper's hack over k-subsets of n bits.
    uint64_t mask = (uint64_t{1} << k) - 1;
    const uint64_t end = uint64_t{1} << n;
    while (mask < end) {
      if (++examined > budget.max_subsets) {
        throw BudgetExceeded("hitting set oracle exceeded " +
                             std::to_string(budget.max_subsets) + " subsets");
      }
      if ((examined & 0xffff) == 0 && deadline.Expired()) {
        throw BudgetExceeded("hitting set oracle timed out");
      }
      const uint32_t chosen = static_cast<uint32_t>(mask);
      bool hits_all = std::all_of(masks.begin(), masks.end(),
                                  [&](uint32_t r) { return (r & chosen) != 0; });
      if (hits_all) {
        OptHitting out;
        out.size = k;
        for (int i = 0; i < n; ++i) {
          if (chosen >> i & 1) out.points.push_back(i);
        }
        return out;
      }
      if (k == 0) break;
      const uint64_t low = mask & (~mask + 1);
      const uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  throw Infeasible("no hitting set exists");
}

class BranchAndBound {
 public:
  BranchAndBound(int n, const std::vector<std::vector<int>>& members,
                 const OracleBudget& budget)
      : members_(members),
        rects_of_point_(static_cast<size_t>(n)),
        hit_count_(members.size(), 0),
        budget_(budget),
        deadline_(budget.timeout_seconds) {
    for (size_t j = 0; j < members.size(); ++j) {
      for (int id : members[j]) rects_of_point_[static_cast<size_t>(id)].push_back(static_cast<int>(j));
    }
  }

  OptHitting Solve() {
    best_ = GreedyUpperBound();
    Search();
    OptHitting out;
    out.points = best_;
    std::sort(out.points.begin(), out.points.end());
    out.size = static_cast<int>(out.points.size());
    return out;
  }

 private:
  std::vector<int> GreedyUpperBound() const {
    std::vector<int> hit(members_.size(), 0);
    std::vector<int> chosen;
    size_t remaining = members_.size();
    while (remaining > 0) {
      int best_point = -1;
      size_t best_gain = 0;
      for (size_t p = 0; p < rects_of_point_.size(); ++p) {
        size_t gain = 0;
        for (int r : rects_of_point_[p]) gain += hit[static_cast<size_t>(r)] == 0;
        if (gain > best_gain) {
          best_gain = gain;
          best_point = static_cast<int>(p);
        }
      }
      chosen.push_back(best_point);
      for (int r : rects_of_point_[static_cast<size_t>(best_point)]) {
        if (hit[static_cast<size_t>(r)]++ == 0) --remaining;
      }
    }
    return chosen;
  }

  // Number of pairwise point-disjoint unhit rectangles, picked greedily.
  int PackingBound() const {
    std::vector<char> used(rects_of_point_.size(), 0);
    int packed = 0;
    for (size_t j = 0; j < members_.size(); ++j) {
      if (hit_count_[j] > 0) continue;
      bool disjoint = std::none_of(members_[j].begin(), members_[j].end(),
                                   [&](int p) { return used[static_cast<size_t>(p)] != 0; });
      if (!disjoint) continue;
      ++packed;
      for (int p : members_[j]) used[static_cast<size_t>(p)] = 1;
    }
    return packed;
  }

  void Search() {
    if (++nodes_ > budget_.max_subsets) {
      throw BudgetExceeded("hitting set branch and bound exceeded " +
                           std::to_string(budget_.max_subsets) + " nodes");
    }
    if ((nodes_ & 0xfff) == 0 && deadline_.Expired()) {
      throw BudgetExceeded("hitting set branch and bound timed out");
    }
    int branch_rect = -1;
    for (size_t j = 0; j < members_.size(); ++j) {
      if (hit_count_[j] > 0) continue;
      if (branch_rect < 0 ||
          members_[j].size() < members_[static_cast<size_t>(branch_rect)].size()) {
        branch_rect = static_cast<int>(j);
      }
    }
    if (branch_rect < 0) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + static_cast<size_t>(PackingBound()) >= best_.size()) return;
    for (int p : members_[static_cast<size_t>(branch_rect)]) {
      chosen_.push_back(p);
      for (int r : rects_of_point_[static_cast<size_t>(p)]) ++hit_count_[static_cast<size_t>(r)];
      Search();
      for (int r : rects_of_point_[static_cast<size_t>(p)]) --hit_count_[static_cast<size_t>(r)];
      chosen_.pop_back();
    }
  }

  const std::vector<std::vector<int>>& members_;
  std::vector<std::vector<int>> rects_of_point_;
  std::vector<int> hit_count_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  OracleBudget budget_;
  Deadline deadline_;
  int64_t nodes_ = 0;
};

}  // namespace

OptHitting OptHittingSet(const PointSet& points, const RectSet& rects,
                         const OracleBudget& budget) {
  auto members = HittableMembers(points, rects);
  if (points.size() <= 25) return Exhaustive(points, members, budget);
  return BranchAndBound(static_cast<int>(points.size()), members, budget).Solve();
}

OptHitting OptHittingSetBranchAndBound(const PointSet& points,
                                       const RectSet& rects,
                                       const OracleBudget& budget) {
  auto members = HittableMembers(points, rects);
  return BranchAndBound(static_cast<int>(points.size()), members, budget).Solve();
}

std::vector<Rect> EnumMaximalEmptyRects(Strip strip, AnchorSide anchor,
                                        const PointSet& probes) {
  std::vector<double> free_x;
  std::vector<double> lows = {-kInf};
  std::vector<double> highs = {kInf};
  for (const Point& p : probes) {
    free_x.push_back(p.x);
    lows.push_back(p.y);
    highs.push_back(p.y);
  }
  free_x.push_back(anchor == AnchorSide::kLeft ? strip.hi : strip.lo);

  std::vector<Rect> empty;
  for (double fx : free_x) {
    for (double lo : lows) {
      for (double hi : highs) {
        if (!(lo < hi)) continue;
        Rect r = anchor == AnchorSide::kLeft ? Rect{strip.lo, lo, fx, hi}
                                             : Rect{fx, lo, strip.hi, hi};
        if (!(r.x_lo < r.x_hi)) continue;
        bool is_empty = std::none_of(probes.begin(), probes.end(),
                                     [&](Point p) { return r.InteriorContains(p); });
        if (is_empty) empty.push_back(r);
      }
    }
  }
  std::sort(empty.begin(), empty.end());
  empty.erase(std::unique(empty.begin(), empty.end()), empty.end());

  std::vector<Rect> maximal;
  for (const Rect& r : empty) {
    bool dominated = std::any_of(empty.begin(), empty.end(), [&](const Rect& o) {
      return !(o == r) && o.ContainsRect(r);
    });
    if (!dominated) maximal.push_back(r);
  }
  return maximal;
}

int64_t CountAllMaximalEmptyRects(const PointSet& probes,
                                  const OracleBudget& budget) {
  std::map<double, std::vector<double>> ys_at_x;
  for (const Point& p : probes) ys_at_x[p.x].push_back(p.y);
  std::vector<double> xs;
  for (const auto& [x, ys] : ys_at_x) xs.push_back(x);

  const double work = static_cast<double>(xs.size() + 1) *
                      static_cast<double>(xs.size() + 1) *
                      static_cast<double>(probes.size() + 1);
  if (work > static_cast<double>(budget.max_candidate_rects)) {
    throw BudgetExceeded("maximal empty rectangle count needs ~" +
                         std::to_string(static_cast<int64_t>(work)) +
                         " candidates, budget " +
                         std::to_string(budget.max_candidate_rects));
  }

  auto blocked = [&](double side, double lo, double hi) {
    if (std::isinf(side)) return true;
    const auto& ys = ys_at_x.at(side);
    return std::any_of(ys.begin(), ys.end(),
                       [&](double y) { return lo < y && y < hi; });
  };

  std::vector<double> lefts = {-kInf};
  lefts.insert(lefts.end(), xs.begin(), xs.end());
  std::vector<double> rights = xs;
  rights.push_back(kInf);

  int64_t count = 0;
  std::vector<double> inner;
  for (double l : lefts) {
    for (double r : rights) {
      if (!(l < r)) continue;
      inner.assign(1, -kInf);
      for (const Point& p : probes) {
        if (l < p.x && p.x < r) inner.push_back(p.y);
      }
      inner.push_back(kInf);
      std::sort(inner.begin(), inner.end());
      for (size_t i = 0; i + 1 < inner.size(); ++i) {
        const double lo = inner[i], hi = inner[i + 1];
        if (!(lo < hi)) continue;
        if (blocked(l, lo, hi) && blocked(r, lo, hi)) ++count;
      }
    }
  }
  return count;
}

int64_t HeavyThreshold(double eps, int64_t n) {
  const double raw = std::ceil(eps * static_cast<double>(n) - 1e-9);
  return std::max<int64_t>(1, static_cast<int64_t>(raw));
}

namespace {

void CheckNetArgs(const PointSet& points, double eps,
                  const std::vector<int>& net) {
  if (!(eps > 0 && eps < 1)) {
    throw MalformedInput("eps must lie in (0, 1)");
  }
  for (int id : net) {
    if (id < 0 || static_cast<size_t>(id) >= points.size()) {
      throw MalformedInput("net id " + std::to_string(id) +
                           " is not a point id");
    }
  }
}

// Enumerates maximal net-empty rectangles in rank space in chunks and
// returns the first whose interior measure is heavy.
template <typename Measure, typename IsHeavy>
NetCheck ScanNetEmpty(const PointSet& points, const std::vector<int>& net,
                      Measure measure, IsHeavy is_heavy) {
  const PointSet ranks = RankTransform(points);
  std::vector<int> ids = net;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  PointSet net_ranks;
  net_ranks.reserve(ids.size());
  for (int id : ids) net_ranks.push_back(ranks[static_cast<size_t>(id)]);

  constexpr size_t kChunk = 1 << 18;
  std::vector<Rect> chunk;
  NetCheck result;
  auto flush = [&]() {
    if (!result.ok || chunk.empty()) return;
    auto values = measure(ranks, chunk);
    for (size_t i = 0; i < chunk.size(); ++i) {
      if (!is_heavy(values[i])) continue;
      std::vector<int> inside;
      for (size_t p = 0; p < ranks.size(); ++p) {
        if (chunk[i].InteriorContains(ranks[p])) inside.push_back(static_cast<int>(p));
      }
      result.ok = false;
      result.witness = BoundingBox(points, inside);
      result.witness_count = static_cast<int64_t>(inside.size());
      result.witness_weight = static_cast<double>(values[i]);
      break;
    }
    chunk.clear();
  };
  ForEachMaximalEmptyRect(net_ranks, [&](const Rect& r) {
    if (!result.ok) return;
    chunk.push_back(r);
    if (chunk.size() >= kChunk) flush();
  });
  flush();
  return result;
}

}  // namespace

NetCheck VerifyEpsNet(const PointSet& points, double eps,
                      const std::vector<int>& net) {
  CheckNetArgs(points, eps, net);
  if (points.empty()) return {};
  const int64_t threshold =
      HeavyThreshold(eps, static_cast<int64_t>(points.size()));
  return ScanNetEmpty(
      points, net,
      [](const PointSet& ranks, const std::vector<Rect>& q) {
        return CountInteriorPoints(ranks, q);
      },
      [&](int64_t count) { return count >= threshold; });
}

NetCheck VerifyWeightedEpsNet(const PointSet& points,
                              const std::vector<double>& weights, double eps,
                              const std::vector<int>& net) {
  CheckNetArgs(points, eps, net);
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
  if (points.empty()) return {};
  // Near-threshold ranges count as heavy, so rounding can only make the
  // check stricter.
  const double threshold = eps * total * (1 - 1e-12);
  NetCheck check = ScanNetEmpty(
      points, net,
      [&](const PointSet& ranks, const std::vector<Rect>& q) {
        return SumInteriorWeights(ranks, weights, q);
      },
      [&](double w) { return w >= threshold; });
  return check;
}

}  // namespace covering
