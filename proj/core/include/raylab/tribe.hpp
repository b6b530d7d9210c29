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
#include "raylab/ray_spec.hpp"

namespace raylab {

// A tribe: layers of pairwise vertex-disjoint embeddings of one pattern.
// hat_len counts the pattern arcs forming the designated initial part
// (the "hat") of every member; hat_len == 0 means an empty hat.
struct Tribe {
  std::vector<std::vector<Embedding>> layers;
  RaySpec pattern{{}, TailAllOut{}};
  int hat_len = 0;
};

// Vertices of a member's hat: the first hat_len arcs span vertices
// 0..hat_len of the walk; an empty hat has no vertices.
std::vector<VertexId> hat_vertices(const Embedding& member, int hat_len);

// Throws Error if a layer contains overlapping members, a member is shorter
// than hat_len, or a member fails validate_embedding against the pattern.
void validate_tribe(const GraphView& view, const Tribe& t);

// True iff for every k <= n some layer has at least k members.
bool is_thick_upto(const Tribe& t, int n);

// True iff for all distinct members R', R'' (across all layers) the hat of
// R' avoids every vertex of R''.
bool is_forked(const Tribe& t);

struct ForkOptions {
  // Candidate layers larger than 20 members make the subset pigeonhole
  // bound astronomically loose; refuse them unless explicitly allowed.
  bool allow_large_layer = false;
};

// Extracts a forked subtribe with layer sizes 0,1,...,max_layer, every
// output layer a subset of an input layer.  Deterministic: candidate layer
// is the first (by index) of sufficient size, selector values are
// lexicographically least, ties broken lexicographically.
// Throws InsufficientThickness when no layer meets the size demanded at
// some level.
Tribe forked_subtribe(const Tribe& t, int max_layer, const ForkOptions& opts = {});

}  // namespace raylab
