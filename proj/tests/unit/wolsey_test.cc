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

#include "covering/wolsey.h"

#include <gtest/gtest.h>

#include "covering/error.h"
#include "covering/exact.h"
#include "covering/flowcheck.h"
#include "covering/rng.h"
#include "testing/oracles.h"

namespace covering {
namespace {

using testing::RandomInstance;
using testing::WorkedExample;

TEST(SolveCapacitatedTest, WorkedExampleTrace) {
  const GreedyTrace trace = SolveCapacitated(WorkedExample());
  ASSERT_EQ(trace.steps.size(), 3u);
  EXPECT_EQ(trace.steps[0].set, 0);
  EXPECT_EQ(trace.steps[1].set, 1);
  EXPECT_EQ(trace.steps[2].set, 3);
  EXPECT_DOUBLE_EQ(trace.steps[0].ratio(), 0.5);
  EXPECT_DOUBLE_EQ(trace.steps[1].ratio(), 1.0);
  EXPECT_DOUBLE_EQ(trace.steps[2].ratio(), 1.5);
  EXPECT_EQ(trace.steps[2].covered, 6);
  EXPECT_EQ(trace.total_cost, Cost::FromDouble(6));
  EXPECT_EQ(trace.cover.chosen, (std::vector<SetId>{0, 1, 3}));
  EXPECT_TRUE(ValidateCover(WorkedExample(), trace.cover).valid());
  EXPECT_TRUE(IsComplete(WorkedExample(), trace.cover));
}

TEST(SolveCapacitatedTest, ExpensiveLastSetSwitchesChoice) {
  const GreedyTrace trace = SolveCapacitated(WorkedExample(10));
  EXPECT_EQ(trace.cover.chosen, (std::vector<SetId>{0, 1, 2}));
  EXPECT_EQ(trace.total_cost, Cost::FromDouble(8));
}

TEST(SolveCapacitatedTest, InfeasibleCarriesMaxCoverage) {
  SetCoverInstance inst = WorkedExample();
  for (SetEntry& s : inst.sets) s.capacity = 1;
  try {
    SolveCapacitated(inst);
    FAIL() << "expected Infeasible";
  } catch (const Infeasible& e) {
    EXPECT_EQ(e.max_coverage(), 4);
  }
}

TEST(SolveCapacitatedTest, ZeroCostSetsStillTerminate) {
  SetCoverInstance inst = MakeInstance(
      3, {{0, {0}, Cost(), 1}, {1, {0, 1, 2}, Cost(), 2}, {2, {2}, Cost::FromDouble(1), 1}});
  const GreedyTrace trace = SolveCapacitated(inst);
  EXPECT_TRUE(IsComplete(inst, trace.cover));
  EXPECT_EQ(trace.total_cost, Cost());
}

TEST(SolveCapacitatedTest, TiesGoToLowestId) {
  SetCoverInstance inst = MakeInstance(
      2, {{0, {0}, Cost::FromDouble(1), 1}, {1, {1}, Cost::FromDouble(1), 1}});
  const GreedyTrace trace = SolveCapacitated(inst);
  EXPECT_EQ(trace.steps[0].set, 0);
}

TEST(SolveCapacitatedTest, EmptyInstanceNeedsNoSets) {
  const GreedyTrace trace = SolveCapacitated(MakeInstance(0, {}));
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_EQ(trace.total_cost, Cost());
}

TEST(SolveCapacitatedTest, WithinHarmonicFactorOfOptimum) {
  Rng rng(3);
  int checked = 0;
  while (checked < 200) {
    const SetCoverInstance inst = RandomInstance(rng, 9, 6, 4, 0.5);
    if (!IsFeasible(inst)) continue;
    ++checked;
    const GreedyTrace trace = SolveCapacitated(inst);
    ASSERT_TRUE(ValidateCover(inst, trace.cover).valid());
    ASSERT_TRUE(IsComplete(inst, trace.cover));
    ASSERT_EQ(trace.total_cost, CoverCost(inst, trace.cover));
    const Cost opt = testing::BruteOptCost(inst);
    ASSERT_EQ(opt, OptCapacitatedCover(inst).cost);
    ASSERT_TRUE(WithinHarmonicFactor(trace.total_cost, opt, inst.n_elements));
  }
}

TEST(SolveCapacitatedTest, CoverageGrowsByEachGain) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const SetCoverInstance inst = RandomInstance(rng, 10, 6, 3, 0.5);
    if (!IsFeasible(inst)) continue;
    const GreedyTrace trace = SolveCapacitated(inst);
    int64_t covered = 0;
    for (const GreedyStep& step : trace.steps) {
      ASSERT_GT(step.gain, 0);
      covered += step.gain;
      ASSERT_EQ(step.covered, covered);
    }
    ASSERT_EQ(covered, inst.n_elements);
  }
}

TEST(SolveUncapacitatedTest, ClassicGreedyIgnoresCapacities) {
  SetCoverInstance inst = WorkedExample();
  for (SetEntry& s : inst.sets) s.capacity = 1;
  const GreedyTrace trace = SolveUncapacitated(inst);
  EXPECT_EQ(trace.cover.chosen, (std::vector<SetId>{0, 1, 3}));
  EXPECT_EQ(trace.total_cost, Cost::FromDouble(6));
  EXPECT_TRUE(ValidateCover(WithUnboundedCapacities(inst), trace.cover).valid());
  EXPECT_THROW(SolveUncapacitated(MakeInstance(1, {})), Infeasible);
}

}  // namespace
}  // namespace covering
