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

#include "raylab/embedding.hpp"

#include <algorithm>
#include <set>

#include "raylab/errors.hpp"

namespace raylab {

std::vector<Orientation> Embedding::orientation_word() const {
  std::vector<Orientation> word;
  word.reserve(steps.size());
  for (const ArcStep& s : steps)
    word.push_back(s.forward ? Orientation::Out : Orientation::In);
  return word;
}

bool Embedding::contains_vertex(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Embedding::meets(const Embedding& other) const {
  for (VertexId v : vertices)
    if (other.contains_vertex(v)) return true;
  return false;
}

Embedding Embedding::slice(int from, int to) const {
  Embedding out;
  out.vertices.assign(vertices.begin() + from, vertices.begin() + to + 1);
  out.steps.assign(steps.begin() + from, steps.begin() + to);
  return out;
}

void validate_embedding(const GraphView& view, const Embedding& emb) {
  const Digraph& g = view.graph();
  if (emb.vertices.size() != emb.steps.size() + 1)
    throw Error("embedding: vertex/step count mismatch");
  std::set<VertexId> seen;
  for (VertexId v : emb.vertices) {
    if (!view.vertex_ok(v)) throw Error("embedding: vertex outside view");
    if (!seen.insert(v).second) throw Error("embedding: repeated vertex");
  }
  for (size_t i = 0; i < emb.steps.size(); ++i) {
    const ArcStep& s = emb.steps[i];
    if (s.arc < 0 || s.arc >= static_cast<int>(g.arcs().size()))
      throw Error("embedding: arc id out of range");
    if (!view.arc_ok(s.arc)) throw Error("embedding: arc outside view");
    const VertexId t = g.arc_tail(s.arc);
    const VertexId h = g.arc_head(s.arc);
    const VertexId from = emb.vertices[i];
    const VertexId to = emb.vertices[i + 1];
    if (s.forward ? (t != from || h != to) : (h != from || t != to))
      throw Error("embedding: step " + std::to_string(i) + " does not connect its vertices");
  }
  if (emb.pattern) {
    for (size_t i = 0; i < emb.steps.size(); ++i)
      if (emb.pattern->orientation_at(static_cast<std::int64_t>(i)) != emb.orientation_at(static_cast<int>(i)))
        throw Error("embedding: orientation word deviates from pattern at arc " +
                    std::to_string(i));
  }
}

Embedding dipath_from_vertices(const Digraph& g, const std::vector<VertexId>& vertices) {
  if (vertices.empty()) throw Error("dipath needs at least one vertex");
  Embedding out;
  out.vertices = vertices;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    int best = -1;
    for (const AdjEntry& e : g.adjacency(vertices[i])) {
      if (e.out && e.other == vertices[i + 1]) {
        best = e.arc;
        break;  // adjacency sorted by (other, arc): first hit is smallest id
      }
    }
    if (best < 0)
      throw Error("no arc " + std::to_string(vertices[i]) + " -> " +
                  std::to_string(vertices[i + 1]));
    out.steps.push_back({best, true});
  }
  return out;
}

Embedding concat(const Embedding& a, const Embedding& b) {
  if (a.vertices.back() != b.vertices.front()) throw Error("concat: endpoints disagree");
  Embedding out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

}  // namespace raylab
