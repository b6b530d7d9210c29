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

#include "raylab/search.hpp"

#include "raylab/errors.hpp"

namespace raylab {

namespace {

struct PathSearch {
  const GraphView& view;
  VertexId target;
  std::size_t cap;
  std::vector<Embedding>* out;
  Embedding walk;
  std::vector<char> used;

  void run(VertexId cur) {
    if (cur == target) {
      if (out->size() >= cap) throw CapExceeded(cap, "enumerate_paths");
      out->push_back(walk);
      return;
    }
    for (const AdjEntry& e : view.graph().adjacency(cur)) {
      if (!view.arc_ok(e.arc) || !view.vertex_ok(e.other)) continue;
      if (used[static_cast<size_t>(e.other)]) continue;
      used[static_cast<size_t>(e.other)] = 1;
      walk.vertices.push_back(e.other);
      walk.steps.push_back({e.arc, e.out});
      run(e.other);
      walk.steps.pop_back();
      walk.vertices.pop_back();
      used[static_cast<size_t>(e.other)] = 0;
    }
  }
};

struct TraceSearch {
  const GraphView& view;
  const RaySpec& pattern;
  int length;
  std::size_t cap;
  std::vector<Embedding>* out;
  Embedding walk;
  std::vector<char> used;

  void run(VertexId cur, int depth) {
    if (depth == length) {
      if (out->size() >= cap) throw ResultCapExceeded(cap);
      out->push_back(walk);
      out->back().pattern = pattern;
      return;
    }
    const bool need_out = pattern.orientation_at(depth) == Orientation::Out;
    for (const AdjEntry& e : view.graph().adjacency(cur)) {
      if (e.out != need_out) continue;  // Out arcs must leave, In arcs must enter
      if (!view.arc_ok(e.arc) || !view.vertex_ok(e.other)) continue;
      if (used[static_cast<size_t>(e.other)]) continue;
      used[static_cast<size_t>(e.other)] = 1;
      walk.vertices.push_back(e.other);
      walk.steps.push_back({e.arc, e.out});
      run(e.other, depth + 1);
      walk.steps.pop_back();
      walk.vertices.pop_back();
      used[static_cast<size_t>(e.other)] = 0;
    }
  }
};

}  // namespace

std::vector<Embedding> enumerate_paths(const GraphView& view, VertexId u, VertexId v,
                                       std::size_t cap) {
  if (u == v) throw Error("enumerate_paths: endpoints must differ");
  std::vector<Embedding> out;
  if (!view.vertex_ok(u) || !view.vertex_ok(v)) return out;
  PathSearch search{view, v, cap, &out, {}, {}};
  search.used.assign(static_cast<size_t>(view.graph().original_vertex_count()), 0);
  search.used[static_cast<size_t>(u)] = 1;
  search.walk.vertices.push_back(u);
  search.run(u);
  return out;
}

std::vector<Embedding> trace_pattern(const GraphView& view, VertexId start,
                                     const RaySpec& pattern, int length,
                                     std::size_t max_results) {
  std::vector<Embedding> out;
  if (!view.vertex_ok(start)) return out;
  TraceSearch search{view, pattern, length, max_results, &out, {}, {}};
  search.used.assign(static_cast<size_t>(view.graph().original_vertex_count()), 0);
  search.used[static_cast<size_t>(start)] = 1;
  search.walk.vertices.push_back(start);
  search.run(start, 0);
  return out;
}

}  // namespace raylab
