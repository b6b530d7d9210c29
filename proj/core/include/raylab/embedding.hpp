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

#include <optional>
#include <vector>

#include "raylab/digraph.hpp"

namespace raylab {

/// One step of a walk: an arc plus the direction it is traversed in.
/// Traversing forward (tail -> head) realizes an Out arc of the pattern,
/// traversing backward realizes an In arc.
struct ArcStep {
  int arc = -1;
  bool forward = true;
  bool operator==(const ArcStep&) const = default;
};

/// A self-avoiding walk in a digraph, optionally realizing the prefix of an
/// oriented-ray pattern.  vertices.size() == steps.size() + 1.
struct Embedding {
  std::vector<VertexId> vertices;
  std::vector<ArcStep> steps;
  std::optional<RaySpec> pattern;

  int length() const { return static_cast<int>(steps.size()); }
  VertexId start() const { return vertices.front(); }
  VertexId end() const { return vertices.back(); }
  Orientation orientation_at(int i) const {
    return steps[static_cast<size_t>(i)].forward ? Orientation::Out : Orientation::In;
  }
  std::vector<Orientation> orientation_word() const;
  bool contains_vertex(VertexId v) const;
  bool meets(const Embedding& other) const;

  /// The sub-walk spanning vertex indices [from, to].
  Embedding slice(int from, int to) const;

  bool operator==(const Embedding& other) const {
    return vertices == other.vertices && steps == other.steps;
  }
};

/// Checks structural soundness: endpoints chain correctly, direction flags
/// match arc endpoints, arcs/vertices lie in the view, vertices are distinct,
/// and (when a pattern is attached) the induced orientation word equals the
/// pattern's first length() arcs.  Throws Error on violation.
void validate_embedding(const GraphView& view, const Embedding& emb);

/// Builds the all-forward walk through the given live vertices, resolving
/// each consecutive pair to the smallest arc id directed that way.
Embedding dipath_from_vertices(const Digraph& g, const std::vector<VertexId>& vertices);

/// Concatenation a + b where a.end() == b.start().
Embedding concat(const Embedding& a, const Embedding& b);

}  // namespace raylab
