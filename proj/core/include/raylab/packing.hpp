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

#include <vector>

#include "raylab/digraph.hpp"
#include "raylab/embedding.hpp"
#include "raylab/tribe.hpp"

namespace raylab {

/// Working state of the recursive family extension: `level` pairwise
/// disjoint out-dipaths, each with a marker position (index into its vertex
/// walk).  The marker prefixes grow strictly from one level to the next.
struct FamilyState {
  int level = 0;
  std::vector<Embedding> rays;
  std::vector<int> markers;
};

/// Per-level report of one extension step, for regression snapshots.
struct LevelTrace {
  int level = 0;           ///< level after the step
  int layer_index = -1;    ///< input layer used (filled by the driver)
  int layer_size = 0;
  int deleted_prefix = 0;  ///< members dropped for meeting a marker prefix
  int adopted = 0;         ///< rays kept unchanged (m)
  std::vector<int> adopted_indices;
  int j_size = 0;          ///< rays rerouted through connecting paths
  int f_prime_size = 0;    ///< pool size after deletions and adoptions
  int cut_size = 0;        ///< certifying cut of the connecting-path step
};

/// Layer size demanded by the next extension step from this state:
/// |union of marker-prefix vertices| + level^2 + 1.
int extension_demand(const FamilyState& state);

/// One extension step: from `level` disjoint marked rays to level+1, drawing
/// fresh material from `layer` (pairwise disjoint out-dipaths in the host).
/// Throws LayerTooSmall, LayerTooShort or RerouteFailed.
FamilyState extend_family(const FamilyState& state, const std::vector<Embedding>& layer,
                          const GraphView& host, LevelTrace* trace = nullptr);
FamilyState extend_family(const FamilyState& state, const std::vector<Embedding>& layer,
                          const Digraph& D, LevelTrace* trace = nullptr);

/// Repeats extend_family until n disjoint out-dipaths with first vertices in
/// X are assembled, drawing each step from the first sufficiently large
/// tribe layer.  Every returned dipath has length >= min_len.
/// Throws InsufficientTribe when no layer meets a step's demand.
std::vector<Embedding> pack_out_rays(const GraphView& host, const Tribe& tribe,
                                     const std::vector<VertexId>& X, int n, int min_len,
                                     std::vector<LevelTrace>* traces = nullptr);
std::vector<Embedding> pack_out_rays(const Digraph& D, const Tribe& tribe,
                                     const std::vector<VertexId>& X, int n, int min_len,
                                     std::vector<LevelTrace>* traces = nullptr);

/// Full positive pipeline for a pattern with finitely many turns: splits
/// every member into hat (the finite phases) and tail, extracts a forked
/// subtribe, packs tails disjointly outside all hat vertices, and reattaches
/// the hats.  Returns n disjoint embeddings of the pattern prefix, each of
/// length >= min_len.  In-oriented tails are handled by reversing the host
/// and pattern, packing, and mapping back.
std::vector<Embedding> assemble_positive(const Digraph& D, const Tribe& tribe, int n,
                                         int min_len,
                                         std::vector<LevelTrace>* traces = nullptr);

}  // namespace raylab
