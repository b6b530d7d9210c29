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
#include <vector>

#include "raylab/embedding.hpp"

namespace raylab {

inline constexpr std::size_t kDefaultPathCap = 100000;

/// All simple paths between two distinct live vertices in the underlying
/// undirected multigraph, as walks with per-arc direction flags.  Paths are
/// produced in depth-first order with neighbours visited by ascending
/// (vertex id, arc id).  Throws CapExceeded when more than `cap` paths exist.
std::vector<Embedding> enumerate_paths(const GraphView& view, VertexId u, VertexId v,
                                       std::size_t cap = kDefaultPathCap);

/// All self-avoiding walks of exactly `length` arcs starting at `start`
/// whose orientation word equals the pattern's first `length` arcs.
/// Deterministic: successors are tried by ascending (vertex id, arc id).
/// Throws ResultCapExceeded when more than `max_results` walks exist.
std::vector<Embedding> trace_pattern(const GraphView& view, VertexId start,
                                     const RaySpec& pattern, int length,
                                     std::size_t max_results = kDefaultPathCap);

}  // namespace raylab
