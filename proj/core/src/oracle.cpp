// Copyright 2026 The raylab Authors
//
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

#include "raylab/oracle.hpp"

#include <algorithm>
#include <set>

#include "raylab/errors.hpp"
#include "raylab/search.hpp"

namespace raylab::oracle {

namespace {

/// Choose-or-skip maximization over vertex-disjoint subfamilies of the given
/// candidate vertex sets.  Exact; `target` <= 0 means unbounded (true max).
/// Sets `exceeded` instead of recursing further once the node cap is hit.
struct DisjointFamilySearch {
  const std::vector<std::vector<VertexId>>& members;
  std::vector<char> used;
  std::size_t max_nodes;
  std::size_t nodes = 0;
  int target;  // early-exit threshold; <= 0 disables
  int best = 0;
  bool exceeded = false;

  DisjointFamilySearch(const std::vector<std::vector<VertexId>>& members,
                       std::size_t vertex_bound, std::size_t max_nodes, int target)
      : members(members), used(vertex_bound, 0), max_nodes(max_nodes), target(target) {}

  bool done() const { return exceeded || (target > 0 && best >= target); }

  void run(std::size_t idx, int chosen) {
    ++nodes;
    if (nodes > max_nodes) {
      exceeded = true;
      return;
    }
    best = std::max(best, chosen);
    if (done()) return;
    if (idx == members.size()) return;
    // Not enough candidates left to beat the best already found.
    if (chosen + static_cast<int>(members.size() - idx) <= best) return;

    const std::vector<VertexId>& cand = members[idx];
    bool free = true;
    for (VertexId v : cand)
      if (used[static_cast<std::size_t>(v)]) {
        free = false;
        break;
      }
    if (free) {
      for (VertexId v : cand) used[static_cast<std::size_t>(v)] = 1;
      run(idx + 1, chosen + 1);
      for (VertexId v : cand) used[static_cast<std::size_t>(v)] = 0;
      if (done()) return;
    }
    run(idx + 1, chosen);
  }
};

}  // namespace

CopyCount max_disjoint_copies(const Digraph& D, const RaySpec& spec, int prefix_len,
                              int target, const SearchBudget& budget) {
  if (prefix_len < 1) throw Error("max_disjoint_copies: prefix_len must be >= 1");
  if (target < 1) throw Error("max_disjoint_copies: target must be >= 1");

  const GraphView view(D);
  std::vector<std::vector<VertexId>> candidates;
  try {
    for (VertexId v : D.vertices()) {
      const std::size_t room = budget.max_results - candidates.size();
      std::vector<Embedding> found = trace_pattern(view, v, spec, prefix_len, room);
      for (const Embedding& e : found) candidates.push_back(e.vertices);
    }
  } catch (const ResultCapExceeded&) {
    return {CopyCount::Kind::BudgetExceeded, 0};
  }

  DisjointFamilySearch search(candidates,
                              static_cast<std::size_t>(D.original_vertex_count()),
                              budget.max_nodes, target);
  search.run(0, 0);
  if (search.best >= target) return {CopyCount::Kind::AtLeast, target};
  if (search.exceeded) return {CopyCount::Kind::BudgetExceeded, search.best};
  return {CopyCount::Kind::Exactly, search.best};
}

Confinement tail_confinement(const Digraph& D, const Embedding& emb, int window) {
  if (window < 1) throw Error("tail_confinement: window must be >= 1");
  if (window > static_cast<int>(emb.length()))
    throw Error("tail_confinement: window exceeds the embedding length");

  Confinement out;
  const std::size_t first = emb.length() - static_cast<std::size_t>(window);
  bool all_labelled = true;
  bool one_label = true;
  bool consecutive = true;
  std::optional<RayLabel> label;
  int prev_index = -1;
  int direction = 0;  // +1 / -1 once the walk's sense along the constituent is known
  for (std::size_t i = first; i < emb.length(); ++i) {
    const Arc& a = D.arcs()[static_cast<std::size_t>(emb.steps[i].arc)];
    if (!a.label) {
      all_labelled = false;
      continue;
    }
    bool known = false;
    for (const RayLabel& l : out.labels_seen)
      if (l == *a.label) known = true;
    if (!known) out.labels_seen.push_back(*a.label);
    if (!label) {
      label = a.label;
    } else if (!(*label == *a.label)) {
      one_label = false;
    }
    if (prev_index >= 0) {
      const int delta = a.arc_index - prev_index;
      if (delta != 1 && delta != -1) {
        consecutive = false;
      } else if (direction == 0) {
        direction = delta;
      } else if (delta != direction) {
        consecutive = false;
      }
    }
    prev_index = a.arc_index;
  }
  if (all_labelled && one_label && consecutive && label) {
    out.confined = true;
    out.label = label;
  }
  return out;
}

int brute_max_disjoint_dipaths(const Digraph& H, const std::vector<VertexId>& U,
                               const std::vector<VertexId>& W,
                               const SearchBudget& budget) {
  std::set<VertexId> u_set(U.begin(), U.end());
  std::set<VertexId> w_set(W.begin(), W.end());
  for (VertexId v : u_set)
    if (!H.is_live(v)) throw Error("brute_max_disjoint_dipaths: U vertex not live");
  for (VertexId v : w_set)
    if (!H.is_live(v)) throw Error("brute_max_disjoint_dipaths: W vertex not live");

  // Every directed simple path that starts in U and stops at its first W
  // contact.  Any disjoint family can be normalized to paths of this shape
  // without shrinking, so maximizing over them is exact.
  std::vector<std::vector<VertexId>> candidates;
  std::size_t nodes = 0;
  std::vector<VertexId> stack;
  std::vector<char> on_stack(static_cast<std::size_t>(H.original_vertex_count()), 0);

  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (++nodes > budget.max_nodes)
      throw BudgetExceeded(budget.max_nodes, 0, "brute_max_disjoint_dipaths");
    stack.push_back(v);
    on_stack[static_cast<std::size_t>(v)] = 1;
    if (w_set.count(v)) {
      if (candidates.size() >= budget.max_results)
        throw BudgetExceeded(budget.max_nodes, 0, "brute_max_disjoint_dipaths");
      candidates.push_back(stack);
    } else {
      for (const AdjEntry& e : H.adjacency(v)) {
        if (!e.out) continue;
        if (on_stack[static_cast<std::size_t>(e.other)]) continue;
        self(self, e.other);
      }
    }
    on_stack[static_cast<std::size_t>(v)] = 0;
    stack.pop_back();
  };
  for (VertexId u : u_set) dfs(dfs, u);

  DisjointFamilySearch search(candidates,
                              static_cast<std::size_t>(H.original_vertex_count()),
                              budget.max_nodes, /*target=*/0);
  search.run(0, 0);
  if (search.exceeded)
    throw BudgetExceeded(budget.max_nodes, search.best, "brute_max_disjoint_dipaths");
  return search.best;
}

PeriodicityResult periodicity_probe(const RaySpec& spec, int shift_bound, int window) {
  if (shift_bound < 1 || window < 1)
    throw Error("periodicity_probe: bounds must be >= 1");
  for (int k1 = 0; k1 < shift_bound; ++k1)
    for (int k2 = k1 + 1; k2 <= shift_bound; ++k2)
      if (prefix_isomorphic(spec, k1, k2, window)) return {true, k1, k2};
  return {false, -1, -1};
}

}  // namespace raylab::oracle
