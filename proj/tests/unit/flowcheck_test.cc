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

#include "covering/flowcheck.h"

#include <gtest/gtest.h>

#include <numeric>

#include "covering/error.h"
#include "covering/rng.h"
#include "testing/oracles.h"

namespace covering {
namespace {

using testing::BruteMaxAssignment;
using testing::RandomInstance;
using testing::WorkedExample;

std::vector<SetId> AllSets(const SetCoverInstance& inst) {
  std::vector<SetId> all(static_cast<size_t>(inst.num_sets()));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

TEST(BuildNetworkTest, LayoutOfWorkedExample) {
  const SetCoverInstance inst = WorkedExample();
  const FlowNetwork net = BuildNetwork(inst, AllSets(inst));
  EXPECT_EQ(net.node_count, 12);
  EXPECT_EQ(net.arcs.size(), 20u);
  EXPECT_EQ(net.source, 0);
  EXPECT_EQ(net.sink, 11);
  EXPECT_EQ(net.arcs.front(), (FlowArc{0, 1, 2}));
  EXPECT_EQ(net.arcs[4], (FlowArc{1, 5, 1}));
  EXPECT_EQ(net.arcs.back(), (FlowArc{10, 11, 1}));
  EXPECT_EQ(net.set_of_node[2], 1);
  EXPECT_EQ(net.element_of_node[5], 0);
}

TEST(BuildNetworkTest, CollapsesDuplicatesAndRejectsUnknownSets) {
  const SetCoverInstance inst = WorkedExample();
  EXPECT_EQ(BuildNetwork(inst, {1, 1, 0}).node_count, 2 + 2 + 6);
  EXPECT_THROW(BuildNetwork(inst, {4}), MalformedInput);
}

TEST(MaxCoverValueTest, WorkedExample) {
  const SetCoverInstance inst = WorkedExample();
  const CoverValue all = MaxCoverValue(inst, AllSets(inst));
  EXPECT_EQ(all.value, 6);
  EXPECT_TRUE(ValidateCover(inst, all.witness).valid());
  EXPECT_TRUE(IsFeasible(inst));
  EXPECT_EQ(MarginalGain(inst, {0}, 1), 2);
  EXPECT_EQ(MarginalGain(inst, {0, 1}, 1), 0);
  EXPECT_EQ(MaxCoverValue(inst, {}).value, 0);
}

TEST(MaxCoverValueTest, UnitCapacitiesLeaveTwoUncovered) {
  SetCoverInstance inst = WorkedExample();
  for (SetEntry& s : inst.sets) s.capacity = 1;
  EXPECT_EQ(MaxCoverValue(inst, AllSets(inst)).value, 4);
  EXPECT_FALSE(IsFeasible(inst));
}

TEST(MaxCoverValueTest, EmptyInstanceIsFeasible) {
  EXPECT_TRUE(IsFeasible(MakeInstance(0, {})));
  EXPECT_FALSE(IsFeasible(MakeInstance(1, {})));
}

TEST(MaxCoverValueTest, MatchesBruteForceOnRandomInstances) {
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const SetCoverInstance inst = RandomInstance(rng, 8, 6, 3);
    std::vector<SetId> family;
    for (SetId s = 0; s < inst.num_sets(); ++s) {
      if (rng.Bernoulli(0.7)) family.push_back(s);
    }
    const CoverValue v = MaxCoverValue(inst, family);
    ASSERT_EQ(v.value, BruteMaxAssignment(inst, family)) << "trial " << trial;
    ASSERT_TRUE(ValidateCover(inst, v.witness).valid());
    ASSERT_EQ(static_cast<int64_t>(v.witness.assignment.size()), v.value);
    for (SetId s : v.witness.chosen) {
      ASSERT_TRUE(std::find(family.begin(), family.end(), s) != family.end());
    }
  }
}

TEST(SolveMaxFlowTest, FlowIsConservedAndWithinCapacity) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const SetCoverInstance inst = RandomInstance(rng, 10, 6, 4);
    const FlowNetwork net = BuildNetwork(inst, AllSets(inst));
    const MaxFlowResult flow = SolveMaxFlow(net);
    std::vector<int64_t> balance(static_cast<size_t>(net.node_count), 0);
    for (size_t i = 0; i < net.arcs.size(); ++i) {
      ASSERT_GE(flow.arc_flow[i], 0);
      ASSERT_LE(flow.arc_flow[i], net.arcs[i].capacity);
      balance[static_cast<size_t>(net.arcs[i].from)] -= flow.arc_flow[i];
      balance[static_cast<size_t>(net.arcs[i].to)] += flow.arc_flow[i];
    }
    for (int v = 0; v < net.node_count; ++v) {
      if (v == net.source || v == net.sink) continue;
      ASSERT_EQ(balance[static_cast<size_t>(v)], 0);
    }
    ASSERT_EQ(balance[static_cast<size_t>(net.sink)], flow.value);
  }
}

TEST(IncrementalCoverTest, GainsMatchRecomputationFromScratch) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const SetCoverInstance inst = RandomInstance(rng, 10, 7, 4, 0.5);
    IncrementalCover inc(inst);
    std::vector<SetId> order = AllSets(inst);
    rng.Shuffle(order);
    std::vector<SetId> family;
    for (SetId s : order) {
      for (SetId t = 0; t < inst.num_sets(); ++t) {
        if (inc.in_family(t)) continue;
        ASSERT_EQ(inc.Gain(t), MarginalGain(inst, family, t));
      }
      const int64_t expected = MarginalGain(inst, family, s);
      ASSERT_EQ(inc.Add(s), expected);
      family.push_back(s);
      ASSERT_EQ(inc.value(), MaxCoverValue(inst, family).value);
      const AssignmentCover w = inc.Witness();
      ASSERT_TRUE(ValidateCover(inst, w).valid());
      ASSERT_EQ(static_cast<int64_t>(w.assignment.size()), inc.value());
    }
  }
}

TEST(IncrementalCoverTest, GainIsBoundedByCapacity) {
  const SetCoverInstance inst =
      MakeInstance(5, {{0, {0, 1, 2, 3, 4}, Cost(), 2}});
  IncrementalCover inc(inst);
  EXPECT_EQ(inc.Gain(0), 2);
  EXPECT_EQ(inc.value(), 0);
  EXPECT_EQ(inc.Add(0), 2);
  EXPECT_EQ(inc.value(), 2);
}

}  // namespace
}  // namespace covering
