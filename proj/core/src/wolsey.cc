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

#include <string>

#include "covering/error.h"
#include "covering/flowcheck.h"

namespace covering {
namespace {

// a.cost / a.gain < b.cost / b.gain, by cross-multiplication.
bool BetterRatio(Cost cost_a, int64_t gain_a, Cost cost_b, int64_t gain_b) {
  return static_cast<__int128>(cost_a.units()) * gain_b <
         static_cast<__int128>(cost_b.units()) * gain_a;
}

}  // namespace

GreedyTrace SolveCapacitated(const SetCoverInstance& inst) {
  CheckInstance(inst);
  IncrementalCover state(inst);
  GreedyTrace trace;
  while (state.value() < inst.n_elements) {
    SetId best = -1;
    int64_t best_gain = 0;
    for (SetId s = 0; s < inst.num_sets(); ++s) {
      if (state.in_family(s)) continue;
      int64_t gain = state.Gain(s);
      if (gain <= 0) continue;
      if (best < 0 ||
          BetterRatio(inst.set(s).cost, gain, inst.set(best).cost, best_gain)) {
        best = s;
        best_gain = gain;
      }
    }
    if (best < 0) {
      throw Infeasible("no set has positive marginal gain; f(all sets) = " +
                           std::to_string(state.value()) + " < n = " +
                           std::to_string(inst.n_elements),
                       state.value());
    }
    int64_t realized = state.Add(best);
    trace.steps.push_back({best, realized, inst.set(best).cost, state.value()});
    trace.total_cost += inst.set(best).cost;
  }
  trace.cover = state.Witness();
  return trace;
}

GreedyTrace SolveUncapacitated(const SetCoverInstance& inst) {
  CheckInstance(inst);
  const int n = inst.n_elements;
  std::vector<char> covered(static_cast<size_t>(n), 0);
  std::vector<char> used(static_cast<size_t>(inst.num_sets()), 0);
  std::vector<SetId> owner(static_cast<size_t>(n), -1);
  int64_t num_covered = 0;
  GreedyTrace trace;
  while (num_covered < n) {
    SetId best = -1;
    int64_t best_gain = 0;
    for (SetId s = 0; s < inst.num_sets(); ++s) {
      if (used[static_cast<size_t>(s)]) continue;
      int64_t gain = 0;
      for (ElementId e : inst.set(s).members) gain += !covered[static_cast<size_t>(e)];
      if (gain == 0) continue;
      if (best < 0 ||
          BetterRatio(inst.set(s).cost, gain, inst.set(best).cost, best_gain)) {
        best = s;
        best_gain = gain;
      }
    }
    if (best < 0) {
      throw Infeasible("some element lies in no set; " +
                           std::to_string(num_covered) + " of " +
                           std::to_string(n) + " coverable",
                       num_covered);
    }
    used[static_cast<size_t>(best)] = 1;
    for (ElementId e : inst.set(best).members) {
      if (!covered[static_cast<size_t>(e)]) {
        covered[static_cast<size_t>(e)] = 1;
        owner[static_cast<size_t>(e)] = best;
      }
    }
    num_covered += best_gain;
    trace.steps.push_back({best, best_gain, inst.set(best).cost, num_covered});
    trace.total_cost += inst.set(best).cost;
    trace.cover.chosen.push_back(best);
  }
  for (ElementId e = 0; e < n; ++e) {
    trace.cover.assignment.emplace_back(e, owner[static_cast<size_t>(e)]);
  }
  trace.cover.Canonicalize();
  return trace;
}

}  // namespace covering
