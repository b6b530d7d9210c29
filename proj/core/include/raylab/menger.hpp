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

#include "raylab/embedding.hpp"

namespace raylab {

/// Result of a disjoint-dipath computation: a maximum set of pairwise
/// vertex-disjoint directed U->W paths (endpoints included in disjointness)
/// together with a vertex cut of equal size meeting every U->W dipath.
struct MengerResult {
  std::vector<Embedding> paths;
  std::vector<VertexId> cut;
};

/// Maximum-cardinality pairwise vertex-disjoint directed U->W paths in the
/// view, via unit-vertex-capacity max-flow (vertex splitting).  A vertex in
/// both U and W yields a zero-length path.  Deterministic.
MengerResult vertex_disjoint_dipaths(const GraphView& view, const std::vector<VertexId>& U,
                                     const std::vector<VertexId>& W);

MengerResult vertex_disjoint_dipaths(const Digraph& g, const std::vector<VertexId>& U,
                                     const std::vector<VertexId>& W);

/// True iff removing `cut` leaves no directed U->W path in the view.
bool cut_separates(const GraphView& view, const std::vector<VertexId>& U,
                   const std::vector<VertexId>& W, const std::vector<VertexId>& cut);

}  // namespace raylab
