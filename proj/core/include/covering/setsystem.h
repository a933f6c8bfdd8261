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

#ifndef COVERING_SETSYSTEM_H_
#define COVERING_SETSYSTEM_H_

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace covering {

using ElementId = int;
using SetId = int;

// Non-negative cost in fixed-point units of 1e-9. Integer units keep the
// greedy ratio comparisons exact.
class Cost {
 public:
  static constexpr int64_t kUnitsPerOne = 1'000'000'000;

  constexpr Cost() = default;
  static constexpr Cost FromUnits(int64_t units) { return Cost(units); }
  // Rounds to the nearest unit. Throws MalformedInput on negative or
  // non-finite values.
  static Cost FromDouble(double value);

  constexpr int64_t units() const { return units_; }
  double ToDouble() const {
    return static_cast<double>(units_) / static_cast<double>(kUnitsPerOne);
  }
  bool IsIntegral() const { return units_ % kUnitsPerOne == 0; }

  constexpr Cost& operator+=(Cost other) {
    units_ += other.units_;
    return *this;
  }
  friend constexpr Cost operator+(Cost a, Cost b) { return a += b; }
  friend constexpr auto operator<=>(Cost, Cost) = default;

 private:
  constexpr explicit Cost(int64_t units) : units_(units) {}
  int64_t units_ = 0;
};

struct SetEntry {
  SetId id = 0;
  std::vector<ElementId> members;  // sorted, deduplicated
  Cost cost;
  int64_t capacity = 1;
};

// The (X, S, w, k) tuple: elements are 0..n_elements-1, sets are dense ids.
struct SetCoverInstance {
  int n_elements = 0;
  std::vector<SetEntry> sets;

  int num_sets() const { return static_cast<int>(sets.size()); }
  const SetEntry& set(SetId id) const { return sets[static_cast<size_t>(id)]; }
};

// Builds an instance, sorting and deduplicating members and checking every
// invariant. Throws MalformedInput.
SetCoverInstance MakeInstance(int n_elements, std::vector<SetEntry> sets);

// Checks the instance invariants in place. Throws MalformedInput.
void CheckInstance(const SetCoverInstance& inst);

// A family of chosen sets together with the relation C of (element, set)
// pairs. Kept as a relation rather than a map so that duplicate
// assignments are representable and reportable.
struct AssignmentCover {
  std::vector<SetId> chosen;
  std::vector<std::pair<ElementId, SetId>> assignment;

  // Normalizes chosen to sorted-unique and orders the relation by element.
  void Canonicalize();
};

enum class ViolationKind {
  kNotMember,            // (S, e) with e not in S
  kNotChosen,            // (S, e) with S outside the chosen family
  kOverCapacity,         // more than k(S) elements assigned to S
  kDuplicateAssignment,  // element assigned more than once
};

struct Violation {
  ViolationKind kind;
  ElementId element = -1;  // -1 for capacity violations
  SetId set = -1;
  std::string message;
};

struct CoverReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Reports every membership, capacity and duplicate-assignment violation.
// Unknown ids throw MalformedInput.
CoverReport ValidateCover(const SetCoverInstance& inst,
                          const AssignmentCover& cov);

// Sum of w(S) over the chosen family, whether or not S is used.
Cost CoverCost(const SetCoverInstance& inst, const AssignmentCover& cov);
Cost FamilyCost(const SetCoverInstance& inst, const std::vector<SetId>& family);

// True iff every element of X appears in the assignment.
bool IsComplete(const SetCoverInstance& inst, const AssignmentCover& cov);

// Copy of inst with k(S) := |S| for every set, so capacities never bind.
SetCoverInstance WithUnboundedCapacities(const SetCoverInstance& inst);

// H_n = 1 + 1/2 + ... + 1/n (0 for n = 0).
double Harmonic(int n);

// True iff a <= H_n * b, evaluated exactly in integer arithmetic.
bool WithinHarmonicFactor(Cost a, Cost b, int n);

}  // namespace covering

#endif  // COVERING_SETSYSTEM_H_
