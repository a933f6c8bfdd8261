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

#include <algorithm>
#include <limits>
#include <queue>

#include "covering/error.h"

namespace covering {

FlowNetwork BuildNetwork(const SetCoverInstance& inst,
                         const std::vector<SetId>& family) {
  std::vector<SetId> fam = family;
  for (SetId s : fam) {
    if (s < 0 || s >= inst.num_sets()) {
      throw MalformedInput("unknown set id " + std::to_string(s));
    }
  }
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());

  const int m = static_cast<int>(fam.size());
  const int n = inst.n_elements;
  FlowNetwork net;
  net.node_count = 2 + m + n;
  net.source = 0;
  net.sink = net.node_count - 1;
  net.set_of_node.assign(static_cast<size_t>(net.node_count), -1);
  net.element_of_node.assign(static_cast<size_t>(net.node_count), -1);
  const int element_base = 1 + m;
  for (int i = 0; i < m; ++i) net.set_of_node[static_cast<size_t>(1 + i)] = fam[static_cast<size_t>(i)];
  for (int e = 0; e < n; ++e) {
    net.element_of_node[static_cast<size_t>(element_base + e)] = e;
  }

  for (int i = 0; i < m; ++i) {
    net.arcs.push_back({net.source, 1 + i, inst.set(fam[static_cast<size_t>(i)]).capacity});
  }
  for (int i = 0; i < m; ++i) {
    for (ElementId e : inst.set(fam[static_cast<size_t>(i)]).members) {
      net.arcs.push_back({1 + i, element_base + e, 1});
    }
  }
  for (int e = 0; e < n; ++e) {
    net.arcs.push_back({element_base + e, net.sink, 1});
  }
  return net;
}

namespace {

class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : net_(net),
        adj_(static_cast<size_t>(net.node_count)),
        level_(static_cast<size_t>(net.node_count)),
        next_(static_cast<size_t>(net.node_count)) {
    // Residual edge 2i is arc i, 2i+1 its reverse.
    residual_.reserve(2 * net.arcs.size());
    for (size_t i = 0; i < net.arcs.size(); ++i) {
      const FlowArc& a = net.arcs[i];
      adj_[static_cast<size_t>(a.from)].push_back(static_cast<int>(2 * i));
      adj_[static_cast<size_t>(a.to)].push_back(static_cast<int>(2 * i + 1));
      residual_.push_back(a.capacity);
      residual_.push_back(0);
    }
  }

  MaxFlowResult Run() {
    MaxFlowResult result;
    while (BuildLevels()) {
      std::fill(next_.begin(), next_.end(), 0);
      while (int64_t pushed = Push(net_.source,
                                   std::numeric_limits<int64_t>::max())) {
        result.value += pushed;
      }
    }
    result.arc_flow.resize(net_.arcs.size());
    for (size_t i = 0; i < net_.arcs.size(); ++i) {
      result.arc_flow[i] = residual_[2 * i + 1];
    }
    return result;
  }

 private:
  int Head(int edge) const {
    const FlowArc& a = net_.arcs[static_cast<size_t>(edge / 2)];
    return (edge % 2 == 0) ? a.to : a.from;
  }

  bool BuildLevels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[static_cast<size_t>(net_.source)] = 0;
    queue.push(net_.source);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int edge : adj_[static_cast<size_t>(u)]) {
        int v = Head(edge);
        if (residual_[static_cast<size_t>(edge)] > 0 && level_[static_cast<size_t>(v)] < 0) {
          level_[static_cast<size_t>(v)] = level_[static_cast<size_t>(u)] + 1;
          queue.push(v);
        }
      }
    }
    return level_[static_cast<size_t>(net_.sink)] >= 0;
  }

  // Blocking-flow DFS. Recursion depth is bounded by the 4-layer structure
  // plus backward detours, i.e. by the number of nodes on a level path.
  int64_t Push(int u, int64_t limit) {
    if (u == net_.sink) return limit;
    auto& edges = adj_[static_cast<size_t>(u)];
    for (size_t& i = next_[static_cast<size_t>(u)]; i < edges.size(); ++i) {
      int edge = edges[i];
      int v = Head(edge);
      int64_t& cap = residual_[static_cast<size_t>(edge)];
      if (cap <= 0 || level_[static_cast<size_t>(v)] != level_[static_cast<size_t>(u)] + 1) continue;
      int64_t pushed = Push(v, std::min(limit, cap));
      if (pushed > 0) {
        cap -= pushed;
        residual_[static_cast<size_t>(edge ^ 1)] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<std::vector<int>> adj_;
  std::vector<int64_t> residual_;
  std::vector<int> level_;
  std::vector<size_t> next_;
};

}  // namespace

MaxFlowResult SolveMaxFlow(const FlowNetwork& net) { return Dinic(net).Run(); }

CoverValue MaxCoverValue(const SetCoverInstance& inst,
                         const std::vector<SetId>& family) {
  FlowNetwork net = BuildNetwork(inst, family);
  MaxFlowResult flow = SolveMaxFlow(net);

  CoverValue out;
  out.value = flow.value;
  for (size_t i = 1; i + 1 < static_cast<size_t>(net.node_count); ++i) {
    if (net.set_of_node[i] >= 0) out.witness.chosen.push_back(net.set_of_node[i]);
  }
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    if (flow.arc_flow[i] == 0) continue;
    SetId s = net.set_of_node[static_cast<size_t>(a.from)];
    ElementId e = net.element_of_node[static_cast<size_t>(a.to)];
    if (s >= 0 && e >= 0) out.witness.assignment.emplace_back(e, s);
  }
  out.witness.Canonicalize();
  return out;
}

int64_t MarginalGain(const SetCoverInstance& inst,
                     const std::vector<SetId>& family, SetId s) {
  if (s < 0 || s >= inst.num_sets()) {
    throw MalformedInput("unknown set id " + std::to_string(s));
  }
  std::vector<SetId> grown = family;
  grown.push_back(s);
  return MaxCoverValue(inst, grown).value - MaxCoverValue(inst, family).value;
}

bool IsFeasible(const SetCoverInstance& inst) {
  std::vector<SetId> all(static_cast<size_t>(inst.num_sets()));
  for (SetId s = 0; s < inst.num_sets(); ++s) all[static_cast<size_t>(s)] = s;
  return MaxCoverValue(inst, all).value == inst.n_elements;
}

IncrementalCover::IncrementalCover(const SetCoverInstance& inst)
    : inst_(&inst),
      in_family_(static_cast<size_t>(inst.num_sets()), 0),
      owner_(static_cast<size_t>(inst.n_elements), -1),
      load_(static_cast<size_t>(inst.num_sets()), 0) {}

int64_t IncrementalCover::Augment(SetId s, std::vector<SetId>& owner,
                                  std::vector<int64_t>& load) const {
  const SetCoverInstance& inst = *inst_;
  const size_t m = static_cast<size_t>(inst.num_sets());
  int64_t gained = 0;
  // For a set reached during the search: the element it gives up and the
  // set that takes that element over.
  std::vector<ElementId> via(m);
  std::vector<SetId> parent(m);
  std::vector<char> visited(m);
  while (load[static_cast<size_t>(s)] < inst.set(s).capacity) {
    std::fill(visited.begin(), visited.end(), 0);
    std::queue<SetId> queue;
    visited[static_cast<size_t>(s)] = 1;
    queue.push(s);
    ElementId free_element = -1;
    SetId last = -1;
    while (!queue.empty() && free_element < 0) {
      SetId x = queue.front();
      queue.pop();
      for (ElementId e : inst.set(x).members) {
        SetId o = owner[static_cast<size_t>(e)];
        if (o == x) continue;
        if (o < 0) {
          free_element = e;
          last = x;
          break;
        }
        if (!visited[static_cast<size_t>(o)]) {
          visited[static_cast<size_t>(o)] = 1;
          via[static_cast<size_t>(o)] = e;
          parent[static_cast<size_t>(o)] = x;
          queue.push(o);
        }
      }
    }
    if (free_element < 0) break;
    owner[static_cast<size_t>(free_element)] = last;
    for (SetId x = last; x != s; x = parent[static_cast<size_t>(x)]) {
      owner[static_cast<size_t>(via[static_cast<size_t>(x)])] =
          parent[static_cast<size_t>(x)];
    }
    ++load[static_cast<size_t>(s)];
    ++gained;
  }
  return gained;
}

int64_t IncrementalCover::Gain(SetId s) const {
  if (s < 0 || s >= inst_->num_sets()) {
    throw MalformedInput("unknown set id " + std::to_string(s));
  }
  if (in_family(s)) return 0;
  std::vector<SetId> owner = owner_;
  std::vector<int64_t> load = load_;
  return Augment(s, owner, load);
}

int64_t IncrementalCover::Add(SetId s) {
  if (s < 0 || s >= inst_->num_sets()) {
    throw MalformedInput("unknown set id " + std::to_string(s));
  }
  if (in_family(s)) return 0;
  in_family_[static_cast<size_t>(s)] = 1;
  family_order_.push_back(s);
  int64_t gained = Augment(s, owner_, load_);
  value_ += gained;
  return gained;
}

AssignmentCover IncrementalCover::Witness() const {
  AssignmentCover cov;
  cov.chosen = family_order_;
  for (ElementId e = 0; e < inst_->n_elements; ++e) {
    if (owner_[static_cast<size_t>(e)] >= 0) {
      cov.assignment.emplace_back(e, owner_[static_cast<size_t>(e)]);
    }
  }
  cov.Canonicalize();
  return cov;
}

}  // namespace covering
