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

#include "covering/setsystem.h"

#include <cmath>

#include <gtest/gtest.h>

#include "covering/error.h"

namespace covering {
namespace {

using ::testing::Test;

SetCoverInstance ThreeSets() {
  // Elements are used by their face value inside X = {0..9}.
  return MakeInstance(10, {{0, {1, 3, 4}, Cost::FromDouble(1), 3},
                           {1, {2, 5, 6}, Cost::FromDouble(1), 3},
                           {2, {3, 5, 8, 9}, Cost::FromDouble(1), 4}});
}

bool HasViolation(const CoverReport& report, ViolationKind kind,
                  ElementId element, SetId set) {
  for (const Violation& v : report.violations) {
    if (v.kind == kind && v.element == element && v.set == set) return true;
  }
  return false;
}

TEST(CostTest, RoundsToUnitsAndRejectsNegatives) {
  EXPECT_EQ(Cost::FromDouble(2.5).units(), 2'500'000'000);
  EXPECT_TRUE(Cost::FromDouble(3).IsIntegral());
  EXPECT_FALSE(Cost::FromDouble(0.1).IsIntegral());
  EXPECT_DOUBLE_EQ(Cost::FromDouble(0.1).ToDouble(), 0.1);
  EXPECT_THROW(Cost::FromDouble(-1), MalformedInput);
  EXPECT_THROW(Cost::FromDouble(std::nan("")), MalformedInput);
  EXPECT_LT(Cost::FromDouble(1), Cost::FromDouble(1.5));
}

TEST(MakeInstanceTest, SortsAndDeduplicatesMembers) {
  SetCoverInstance inst = MakeInstance(4, {{0, {3, 1, 1, 0}, Cost(), 2}});
  EXPECT_EQ(inst.set(0).members, (std::vector<ElementId>{0, 1, 3}));
}

TEST(MakeInstanceTest, RejectsBrokenInvariants) {
  EXPECT_THROW(MakeInstance(3, {{0, {3}, Cost(), 1}}), MalformedInput);
  EXPECT_THROW(MakeInstance(3, {{0, {-1}, Cost(), 1}}), MalformedInput);
  EXPECT_THROW(MakeInstance(3, {{0, {1}, Cost(), 0}}), MalformedInput);
  EXPECT_THROW(MakeInstance(3, {{1, {1}, Cost(), 1}}), MalformedInput);
  EXPECT_THROW(MakeInstance(-1, {}), MalformedInput);
  EXPECT_NO_THROW(MakeInstance(0, {}));
}

TEST(ValidateCoverTest, ReportsMembershipAndDuplicateViolations) {
  const SetCoverInstance inst = ThreeSets();
  AssignmentCover cover{{0, 1, 2}, {{1, 0}, {8, 0}, {8, 2}}};
  const CoverReport report = ValidateCover(inst, cover);
  EXPECT_FALSE(report.valid());
  EXPECT_TRUE(HasViolation(report, ViolationKind::kNotMember, 8, 0));
  EXPECT_TRUE(HasViolation(report, ViolationKind::kDuplicateAssignment, 8, 2));
}

TEST(ValidateCoverTest, AcceptsValidPartialCover) {
  const SetCoverInstance inst = ThreeSets();
  AssignmentCover cover{{0, 1, 2}, {{1, 0}, {4, 0}, {8, 2}}};
  EXPECT_TRUE(ValidateCover(inst, cover).valid());
  EXPECT_FALSE(IsComplete(inst, cover));
}

TEST(ValidateCoverTest, ReportsCapacityAndUnchosenSets) {
  SetCoverInstance inst = MakeInstance(3, {{0, {0, 1, 2}, Cost(), 2}});
  AssignmentCover over{{0}, {{0, 0}, {1, 0}, {2, 0}}};
  EXPECT_TRUE(HasViolation(ValidateCover(inst, over),
                           ViolationKind::kOverCapacity, -1, 0));
  AssignmentCover unchosen{{}, {{0, 0}}};
  EXPECT_TRUE(HasViolation(ValidateCover(inst, unchosen),
                           ViolationKind::kNotChosen, 0, 0));
}

TEST(ValidateCoverTest, UnknownIdsThrow) {
  const SetCoverInstance inst = ThreeSets();
  EXPECT_THROW(ValidateCover(inst, {{7}, {}}), MalformedInput);
  EXPECT_THROW(ValidateCover(inst, {{0}, {{10, 0}}}), MalformedInput);
  EXPECT_THROW(ValidateCover(inst, {{0}, {{1, 5}}}), MalformedInput);
}

TEST(CostTest, CoverCostCountsChosenSetsOnce) {
  const SetCoverInstance inst = ThreeSets();
  EXPECT_EQ(CoverCost(inst, {{0, 2, 2}, {}}), Cost::FromDouble(2));
  EXPECT_EQ(FamilyCost(inst, {1}), Cost::FromDouble(1));
}

TEST(HarmonicTest, MatchesSum) {
  EXPECT_EQ(Harmonic(0), 0);
  EXPECT_DOUBLE_EQ(Harmonic(1), 1);
  EXPECT_NEAR(Harmonic(6), 2.45, 1e-12);
}

TEST(HarmonicTest, WithinFactorIsExactAtTheBoundary) {
  // H_6 = 49/20.
  const Cost opt = Cost::FromDouble(20);
  EXPECT_TRUE(WithinHarmonicFactor(Cost::FromDouble(49), opt, 6));
  EXPECT_FALSE(WithinHarmonicFactor(
      Cost::FromUnits(Cost::FromDouble(49).units() + 1), opt, 6));
  EXPECT_TRUE(WithinHarmonicFactor(Cost(), Cost(), 3));
  EXPECT_FALSE(WithinHarmonicFactor(Cost::FromDouble(1), Cost(), 3));
}

TEST(WithUnboundedCapacitiesTest, SetsCapacityToSize) {
  SetCoverInstance inst = WithUnboundedCapacities(ThreeSets());
  EXPECT_EQ(inst.set(2).capacity, 4);
}

}  // namespace
}  // namespace covering
