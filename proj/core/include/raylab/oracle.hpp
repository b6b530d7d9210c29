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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "raylab/digraph.hpp"
#include "raylab/embedding.hpp"
#include "raylab/ray_spec.hpp"

namespace raylab::oracle {

/// Caps for the deliberately naive exhaustive searches.
struct SearchBudget {
  std::size_t max_nodes = 2000000;   ///< search-tree nodes
  std::size_t max_results = 200000;  ///< enumerated candidates
  double time_hint = 10.0;           ///< advisory seconds; not enforced
};

/// Result of the exact disjoint-copy count (capped at the caller's target).
struct CopyCount {
  enum class Kind { AtLeast, Exactly, BudgetExceeded };
  Kind kind = Kind::Exactly;
  int count = 0;  ///< AtLeast: the target; Exactly: the true maximum; BudgetExceeded: best found
  bool operator==(const CopyCount&) const = default;
};

/// Exact backtracking over families of pairwise vertex-disjoint embeddings of
/// the pattern's first `prefix_len` arcs, each starting anywhere in D.
CopyCount max_disjoint_copies(const Digraph& D, const RaySpec& spec, int prefix_len,
                              int target, const SearchBudget& budget = {});

/// Verdict on the final stretch of an embedded path: does it coincide with a
/// contiguous forward run of a single constituent?
struct Confinement {
  bool confined = false;
  std::optional<RayLabel> label;      ///< the constituent, when confined
  std::vector<RayLabel> labels_seen;  ///< distinct labels met, in window order
};

/// Inspects the last `window` arcs of `emb`: Confined iff they all carry one
/// constituent label and their positions along it are consecutive (ascending
/// or descending).
Confinement tail_confinement(const Digraph& D, const Embedding& emb, int window);

/// Exact maximum number of pairwise vertex-disjoint directed U->W paths,
/// found by enumerating all candidate dipaths and maximizing over disjoint
/// subfamilies.  Throws BudgetExceeded when a cap is hit.
int brute_max_disjoint_dipaths(const Digraph& H, const std::vector<VertexId>& U,
                               const std::vector<VertexId>& W,
                               const SearchBudget& budget = {});

/// First pair of shifts whose tail words agree on `window` arcs, if any.
struct PeriodicityResult {
  bool periodic = false;
  int k1 = -1;
  int k2 = -1;
  bool operator==(const PeriodicityResult&) const = default;
};

/// Compares the pattern against itself at every pair of shifts
/// 0 <= k1 < k2 <= shift_bound over a window of `window` arcs.
PeriodicityResult periodicity_probe(const RaySpec& spec, int shift_bound, int window);

}  // namespace raylab::oracle
