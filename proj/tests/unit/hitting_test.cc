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

#include <gtest/gtest.h>

#include "covering/error.h"
#include "covering/exact.h"
#include "covering/rng.h"
#include "testing/oracles.h"

namespace covering {
namespace {

PointSet Uniform(int n, Rng& rng) {
  PointSet points;
  for (int i = 0; i < n; ++i) points.push_back({rng.Uniform(), rng.Uniform()});
  return points;
}

RectSet StabbedRects(const PointSet& points, int m, Rng& rng) {
  RectSet rects;
  for (int j = 0; j < m; ++j) {
    const Point p = points[rng.Below(points.size())];
    const double w = rng.Uniform(0, 0.3), h = rng.Uniform(0, 0.3);
    rects.push_back({p.x - w / 2, p.y - h / 2, p.x + w / 2, p.y + h / 2});
  }
  return rects;
}

TEST(VerifyHittingTest, FullAndEmptySubsets) {
  const PointSet points = {{0, 0}, {1, 1}};
  const RectSet rects = {{-1, -1, 0.5, 0.5}, {0.5, 0.5, 2, 2}};
  EXPECT_TRUE(VerifyHitting(points, {0, 1}, rects).ok);
  const HitCheck none = VerifyHitting(points, {}, rects);
  EXPECT_FALSE(none.ok);
  EXPECT_EQ(none.unhit, 0);
  EXPECT_EQ(VerifyHitting(points, {0}, rects).unhit, 1);
  EXPECT_THROW(VerifyHitting(points, {2}, rects), MalformedInput);
}

TEST(CheckHittingInstanceTest, RejectsBadRectangles) {
  const PointSet points = {{0, 0}};
  EXPECT_THROW(CheckHittingInstance(points, {{1, 0, 0, 1}}), MalformedInput);
  EXPECT_THROW(CheckHittingInstance(points, {{0, 0, kInf, 1}}), MalformedInput);
  try {
    CheckHittingInstance(points, {{-1, -1, 1, 1}, {2, 2, 3, 3}});
    FAIL() << "expected Infeasible";
  } catch (const Infeasible& e) {
    EXPECT_NE(std::string(e.what()).find("rectangle 1"), std::string::npos);
  }
}

TEST(SolveHittingTest, OneRectangleNeedsOnePoint) {
  Rng rng(1);
  const PointSet points = Uniform(12, rng);
  const HittingResult result =
      SolveHitting(points, {{0, 0, 1, 1}}, NetConfig{});
  EXPECT_EQ(result.points.size(), 1u);
}

TEST(SolveHittingTest, DisjointSingletonRectanglesForceTheirPoints) {
  PointSet points;
  RectSet rects;
  for (int i = 0; i < 6; ++i) {
    points.push_back({double(3 * i), double(i)});
    rects.push_back({3.0 * i - 0.5, i - 0.5, 3.0 * i + 0.5, i + 0.5});
  }
  // Points outside every rectangle.
  points.push_back({100, 100});
  points.push_back({-100, 50});
  NetConfig config;
  config.seed = 3;
  const HittingResult result = SolveHitting(points, rects, config);
  EXPECT_EQ(result.points, (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

TEST(SolveHittingTest, NoRectanglesNeedNoPoints) {
  EXPECT_TRUE(SolveHitting({{0, 0}}, {}, NetConfig{}).points.empty());
}

TEST(SolveHittingTest, ThirtyPointsFortyRectangles) {
  Rng rng(5);
  const PointSet points = Uniform(30, rng);
  const RectSet rects = StabbedRects(points, 40, rng);
  NetConfig config;
  config.seed = 5;
  const HittingResult result = SolveHitting(points, rects, config);
  ASSERT_TRUE(VerifyHitting(points, result.points, rects).ok);
  const OptHitting opt = OptHittingSet(points, rects);
  // Frozen from the run that produced this fixture.
  EXPECT_EQ(opt.size, 18);
  EXPECT_EQ(result.points.size(), 18u);
  EXPECT_FALSE(result.log.empty());
  EXPECT_FALSE(result.log.back().violated.has_value());
  EXPECT_GE(result.net_calls, static_cast<int>(result.log.size()));
}

TEST(SolveHittingTest, ValidAndCloseToOptimumOnRandomInstances) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const PointSet points = Uniform(static_cast<int>(rng.Between(1, 16)), rng);
    const RectSet rects = StabbedRects(points, static_cast<int>(rng.Between(1, 20)), rng);
    NetConfig config;
    config.seed = static_cast<uint64_t>(trial);
    const HittingResult result = SolveHitting(points, rects, config);
    ASSERT_TRUE(VerifyHitting(points, result.points, rects).ok);
    const int opt = testing::BruteMinHitting(points, rects);
    ASSERT_GE(static_cast<int>(result.points.size()), opt);
    ASSERT_GE(result.guess, 1);
    for (const HittingRound& round : result.log) {
      const double n = static_cast<double>(points.size());
      const double k = static_cast<double>(round.guess);
      ASSERT_LT(round.round, std::ceil(4 * k * std::max(1.0, std::log2(n / k))));
    }
  }
}

TEST(SolveHittingTest, DeterministicPerSeed) {
  Rng rng(2);
  const PointSet points = Uniform(20, rng);
  const RectSet rects = StabbedRects(points, 25, rng);
  NetConfig config;
  config.seed = 77;
  const HittingResult a = SolveHitting(points, rects, config);
  const HittingResult b = SolveHitting(points, rects, config);
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.log.size(), b.log.size());
}

TEST(WeightedNetTest, UniformWeightsGiveAnUnweightedNet) {
  Rng rng(3);
  const PointSet points = Uniform(200, rng);
  NetConfig config;
  config.seed = 1;
  const WeightedNetResult net =
      WeightedNet(points, std::vector<double>(200, 1.0), 0.1, config);
  EXPECT_TRUE(VerifyEpsNet(points, 0.1, net.ids).ok);
  EXPECT_GE(net.replicated, 4000);
}

TEST(WeightedNetTest, DominantPointIsAlwaysInTheNet) {
  Rng rng(4);
  const PointSet points = Uniform(30, rng);
  std::vector<double> weights(30, 1e-6);
  weights[17] = 1;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    NetConfig config;
    config.seed = seed;
    const WeightedNetResult net = WeightedNet(points, weights, 0.3, config);
    EXPECT_TRUE(std::binary_search(net.ids.begin(), net.ids.end(), 17));
  }
}

TEST(WeightedNetTest, PowersOfTwoAgainstWeightedBoxOracle) {
  Rng rng(10);
  const PointSet points = Uniform(10, rng);
  std::vector<double> weights;
  double total = 0;
  for (int i = 0; i < 10; ++i) {
    weights.push_back(std::ldexp(1.0, i));
    total += weights.back();
  }
  NetConfig config;
  config.seed = 10;
  const WeightedNetResult net = WeightedNet(points, weights, 0.3, config);
  EXPECT_TRUE(VerifyWeightedEpsNet(points, weights, 0.3, net.ids).ok);
  EXPECT_FALSE(testing::BruteHasHeavyEmptyBoxWeighted(points, weights, net.ids,
                                                      0.3 * total * (1 - 1e-12)));
  // Weight 512 of 1023 alone exceeds 0.3 W.
  EXPECT_TRUE(std::binary_search(net.ids.begin(), net.ids.end(), 9));
}

TEST(WeightedNetTest, TiedCoordinatesAreHandled) {
  PointSet points;
  for (int i = 0; i < 40; ++i) points.push_back({double(i % 5), double(i % 3)});
  NetConfig config;
  const WeightedNetResult net =
      WeightedNet(points, std::vector<double>(40, 1.0), 0.2, config);
  EXPECT_TRUE(VerifyWeightedEpsNet(points, std::vector<double>(40, 1.0), 0.2, net.ids).ok);
}

TEST(WeightedNetTest, RejectsBadWeights) {
  const PointSet points = {{0, 0}, {1, 1}};
  EXPECT_THROW(WeightedNet(points, {1, 0}, 0.5, NetConfig{}), MalformedInput);
  EXPECT_THROW(WeightedNet(points, {1}, 0.5, NetConfig{}), MalformedInput);
  EXPECT_THROW(WeightedNet(points, {1, 1}, 1.0, NetConfig{}), MalformedInput);
}

}  // namespace
}  // namespace covering
