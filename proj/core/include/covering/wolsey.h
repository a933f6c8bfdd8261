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

#ifndef COVERING_WOLSEY_H_
#define COVERING_WOLSEY_H_

#include <cstdint>
#include <vector>

#include "covering/setsystem.h"

namespace covering {

struct GreedyStep {
  SetId set = -1;
  int64_t gain = 0;        // f_P(S) at selection time
  Cost cost;               // w(S)
  int64_t covered = 0;     // f(P) after adding S

  // w(S) / f_P(S) as a double, for display only.
  double ratio() const { return cost.ToDouble() / static_cast<double>(gain); }
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  AssignmentCover cover;
  Cost total_cost;
};

// Wolsey's greedy for hard capacities: repeatedly add the set minimizing
// w(S) / f_P(S) over sets with positive marginal gain. Ties go to the lowest
// set id; ratios are compared exactly. Throws Infeasible (carrying f(all))
// when no set has positive gain before every element is covered.
GreedyTrace SolveCapacitated(const SetCoverInstance& inst);

// Classic weighted greedy: minimize w(S) / |S \ covered|, capacities
// ignored. Each element is assigned to the set that first covered it.
// Throws Infeasible if some element lies in no set.
GreedyTrace SolveUncapacitated(const SetCoverInstance& inst);

}  // namespace covering

#endif  // COVERING_WOLSEY_H_
