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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "covering/error.h"

namespace covering {

Cost Cost::FromDouble(double value) {
  if (!std::isfinite(value) || value < 0) {
    std::ostringstream os;
    os << "cost must be finite and non-negative, got " << value;
    throw MalformedInput(os.str());
  }
  const long double scaled =
      static_cast<long double>(value) * static_cast<long double>(kUnitsPerOne);
  if (scaled > 9.0e18L) throw MalformedInput("cost too large");
  return Cost(std::llround(scaled));
}

SetCoverInstance MakeInstance(int n_elements, std::vector<SetEntry> sets) {
  SetCoverInstance inst;
  inst.n_elements = n_elements;
  inst.sets = std::move(sets);
  for (SetEntry& s : inst.sets) {
    std::sort(s.members.begin(), s.members.end());
    s.members.erase(std::unique(s.members.begin(), s.members.end()),
                    s.members.end());
  }
  CheckInstance(inst);
  return inst;
}

void CheckInstance(const SetCoverInstance& inst) {
  if (inst.n_elements < 0) throw MalformedInput("negative element count");
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    const SetEntry& s = inst.sets[i];
    if (s.id != static_cast<SetId>(i)) {
      throw MalformedInput("set ids must be dense 0..m-1; position " +
                           std::to_string(i) + " has id " +
                           std::to_string(s.id));
    }
    if (s.capacity < 1) {
      throw MalformedInput("set " + std::to_string(s.id) +
                           " has capacity < 1");
    }
    if (s.cost.units() < 0) {
      throw MalformedInput("set " + std::to_string(s.id) + " has negative cost");
    }
    for (size_t j = 0; j < s.members.size(); ++j) {
      ElementId e = s.members[j];
      if (e < 0 || e >= inst.n_elements) {
        throw MalformedInput("set " + std::to_string(s.id) +
                             " references element " + std::to_string(e) +
                             " outside [0, " +
                             std::to_string(inst.n_elements) + ")");
      }
      if (j > 0 && s.members[j - 1] >= e) {
        throw MalformedInput("set " + std::to_string(s.id) +
                             " members not sorted and unique");
      }
    }
  }
}

void AssignmentCover::Canonicalize() {
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  std::stable_sort(assignment.begin(), assignment.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
}

namespace {

void CheckSetId(const SetCoverInstance& inst, SetId s) {
  if (s < 0 || s >= inst.num_sets()) {
    throw MalformedInput("unknown set id " + std::to_string(s));
  }
}

void CheckElementId(const SetCoverInstance& inst, ElementId e) {
  if (e < 0 || e >= inst.n_elements) {
    throw MalformedInput("unknown element id " + std::to_string(e));
  }
}

bool Contains(const SetEntry& s, ElementId e) {
  return std::binary_search(s.members.begin(), s.members.end(), e);
}

}  // namespace

CoverReport ValidateCover(const SetCoverInstance& inst,
                          const AssignmentCover& cov) {
  for (SetId s : cov.chosen) CheckSetId(inst, s);
  for (const auto& [e, s] : cov.assignment) {
    CheckElementId(inst, e);
    CheckSetId(inst, s);
  }

  CoverReport report;
  std::vector<char> chosen(static_cast<size_t>(inst.num_sets()), 0);
  for (SetId s : cov.chosen) chosen[static_cast<size_t>(s)] = 1;
  std::vector<int64_t> load(static_cast<size_t>(inst.num_sets()), 0);
  std::vector<int> times_assigned(static_cast<size_t>(inst.n_elements), 0);

  for (const auto& [e, s] : cov.assignment) {
    const std::string pair =
        "(" + std::to_string(s) + "," + std::to_string(e) + ")";
    if (!Contains(inst.set(s), e)) {
      report.violations.push_back({ViolationKind::kNotMember, e, s,
                                   pair + ": element " + std::to_string(e) +
                                       " not in set " + std::to_string(s)});
    }
    if (!chosen[static_cast<size_t>(s)]) {
      report.violations.push_back({ViolationKind::kNotChosen, e, s,
                                   pair + ": set " + std::to_string(s) +
                                       " is not in the chosen family"});
    }
    ++load[static_cast<size_t>(s)];
    if (++times_assigned[static_cast<size_t>(e)] == 2) {
      report.violations.push_back(
          {ViolationKind::kDuplicateAssignment, e, s,
           "element " + std::to_string(e) + " assigned more than once"});
    }
  }
  for (SetId s = 0; s < inst.num_sets(); ++s) {
    if (load[static_cast<size_t>(s)] > inst.set(s).capacity) {
      report.violations.push_back(
          {ViolationKind::kOverCapacity, -1, s,
           "set " + std::to_string(s) + " assigned " +
               std::to_string(load[static_cast<size_t>(s)]) +
               " elements, capacity " + std::to_string(inst.set(s).capacity)});
    }
  }
  return report;
}

Cost FamilyCost(const SetCoverInstance& inst,
                const std::vector<SetId>& family) {
  Cost total;
  for (SetId s : family) {
    CheckSetId(inst, s);
    total += inst.set(s).cost;
  }
  return total;
}

Cost CoverCost(const SetCoverInstance& inst, const AssignmentCover& cov) {
  std::vector<SetId> family = cov.chosen;
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return FamilyCost(inst, family);
}

bool IsComplete(const SetCoverInstance& inst, const AssignmentCover& cov) {
  std::vector<char> seen(static_cast<size_t>(inst.n_elements), 0);
  for (const auto& [e, s] : cov.assignment) {
    if (e >= 0 && e < inst.n_elements) seen[static_cast<size_t>(e)] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

SetCoverInstance WithUnboundedCapacities(const SetCoverInstance& inst) {
  SetCoverInstance out = inst;
  for (SetEntry& s : out.sets) {
    s.capacity = std::max<int64_t>(1, static_cast<int64_t>(s.members.size()));
  }
  return out;
}

double Harmonic(int n) {
  double h = 0;
  for (int i = n; i >= 1; --i) h += 1.0 / i;
  return h;
}

bool WithinHarmonicFactor(Cost a, Cost b, int n) {
  if (n <= 0) return a.units() <= 0;
  // H_n = num / lcm(1..n); exact while the lcm fits comfortably.
  if (n <= 40) {
    __int128 lcm = 1;
    for (int i = 2; i <= n; ++i) {
      lcm = lcm / std::gcd(static_cast<int64_t>(lcm % i), static_cast<int64_t>(i)) * i;
    }
    __int128 num = 0;
    for (int i = 1; i <= n; ++i) num += lcm / i;
    return static_cast<__int128>(a.units()) * lcm <=
           static_cast<__int128>(b.units()) * num;
  }
  return static_cast<long double>(a.units()) <=
         static_cast<long double>(Harmonic(n)) * b.units() * (1 + 1e-15L);
}

}  // namespace covering
