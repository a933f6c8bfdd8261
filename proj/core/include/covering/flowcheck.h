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

#ifndef COVERING_FLOWCHECK_H_
#define COVERING_FLOWCHECK_H_

#include <cstdint>
#include <vector>

#include "covering/setsystem.h"

namespace covering {

struct FlowArc {
  int from = 0;
  int to = 0;
  int64_t capacity = 0;

  friend bool operator==(const FlowArc&, const FlowArc&) = default;
};

// Three-layer network source -> sets -> elements -> sink.
//
// Node layout: 0 is the source, 1..|family| are the set nodes in family
// order, the next n_elements nodes are elements 0..n-1, and the last node
// is the sink. Arcs are listed source arcs first, then set->element arcs
// (per set, by element id), then element->sink arcs.
struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowArc> arcs;
  std::vector<SetId> set_of_node;          // -1 for non-set nodes
  std::vector<ElementId> element_of_node;  // -1 for non-element nodes

  int set_node(int family_index) const { return 1 + family_index; }
};

// Throws MalformedInput on an unknown set id. Duplicate ids in the family
// are collapsed.
FlowNetwork BuildNetwork(const SetCoverInstance& inst,
                         const std::vector<SetId>& family);

struct MaxFlowResult {
  int64_t value = 0;
  std::vector<int64_t> arc_flow;  // parallel to FlowNetwork::arcs
};

// Dinic's algorithm. Deterministic given the arc order.
MaxFlowResult SolveMaxFlow(const FlowNetwork& net);

struct CoverValue {
  int64_t value = 0;  // f(family)
  AssignmentCover witness;
};

// f(family): the largest number of elements a feasible partial cover using
// only sets of the family can cover, plus one cover attaining it.
CoverValue MaxCoverValue(const SetCoverInstance& inst,
                         const std::vector<SetId>& family);

// f(family + {s}) - f(family), recomputed from scratch.
int64_t MarginalGain(const SetCoverInstance& inst,
                     const std::vector<SetId>& family, SetId s);

// True iff f(all sets) == n.
bool IsFeasible(const SetCoverInstance& inst);

// Maintains a maximum partial cover for a growing family and answers
// marginal-gain queries by augmenting paths from the candidate set only.
// Adding one set raises the maximum by at most k(S), one path at a time,
// so the state after Add() is again a maximum cover.
class IncrementalCover {
 public:
  explicit IncrementalCover(const SetCoverInstance& inst);

  int64_t value() const { return value_; }
  bool in_family(SetId s) const { return in_family_[static_cast<size_t>(s)]; }

  // f_P(s) for the current family P. Leaves the state unchanged.
  int64_t Gain(SetId s) const;

  // Adds s to the family and returns the realized gain.
  int64_t Add(SetId s);

  AssignmentCover Witness() const;

 private:
  // Runs up to k(s) augmentations from s over the given state and returns
  // how many succeeded.
  int64_t Augment(SetId s, std::vector<SetId>& owner,
                  std::vector<int64_t>& load) const;

  const SetCoverInstance* inst_;
  std::vector<char> in_family_;
  std::vector<SetId> family_order_;
  std::vector<SetId> owner_;     // element -> set, -1 if uncovered
  std::vector<int64_t> load_;    // set -> assigned count
  int64_t value_ = 0;
};

}  // namespace covering

#endif  // COVERING_FLOWCHECK_H_
