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

#include "raylab/menger.hpp"

#include <algorithm>
#include <deque>

#include "raylab/errors.hpp"

namespace raylab {

namespace {

constexpr int kBigCapacity = 1 << 28;

// Unit-vertex-capacity flow network: every vertex v of the view is split
// into v_in -> v_out with capacity 1; all structural arcs get effectively
// unbounded capacity so a minimum cut consists of split arcs only.
struct FlowNet {
  struct Edge {
    int to;
    int cap;
    int rev;        // index of the reverse edge in graph[to]
    int arc = -1;   // originating digraph arc, -1 for structural edges
  };
  std::vector<std::vector<Edge>> graph;

  void add_edge(int from, int to, int cap, int arc = -1) {
    graph[static_cast<size_t>(from)].push_back(
        {to, cap, static_cast<int>(graph[static_cast<size_t>(to)].size()), arc});
    graph[static_cast<size_t>(to)].push_back(
        {from, 0, static_cast<int>(graph[static_cast<size_t>(from)].size()) - 1, arc});
  }

  // One Edmonds-Karp augmentation; returns false when no augmenting path.
  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> prev(graph.size(), {-1, -1});
    std::deque<int> queue{s};
    prev[static_cast<size_t>(s)] = {s, -1};
    while (!queue.empty() && prev[static_cast<size_t>(t)].first == -1) {
      const int cur = queue.front();
      queue.pop_front();
      const auto& edges = graph[static_cast<size_t>(cur)];
      for (size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].cap <= 0 || prev[static_cast<size_t>(edges[i].to)].first != -1) continue;
        prev[static_cast<size_t>(edges[i].to)] = {cur, static_cast<int>(i)};
        queue.push_back(edges[i].to);
      }
    }
    if (prev[static_cast<size_t>(t)].first == -1) return false;
    for (int v = t; v != s;) {
      auto [u, i] = prev[static_cast<size_t>(v)];
      Edge& e = graph[static_cast<size_t>(u)][static_cast<size_t>(i)];
      e.cap -= 1;
      graph[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)].cap += 1;
      v = u;
    }
    return true;
  }
};

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

MengerResult vertex_disjoint_dipaths(const GraphView& view, const std::vector<VertexId>& U_in,
                                     const std::vector<VertexId>& W_in) {
  const Digraph& g = view.graph();
  const int n = g.original_vertex_count();
  const std::vector<VertexId> U = sorted_unique(U_in);
  const std::vector<VertexId> W = sorted_unique(W_in);
  for (VertexId v : U)
    if (!view.vertex_ok(v)) throw Error("vertex_disjoint_dipaths: U vertex outside view");
  for (VertexId v : W)
    if (!view.vertex_ok(v)) throw Error("vertex_disjoint_dipaths: W vertex outside view");

  const auto in_node = [](VertexId v) { return 2 * v; };
  const auto out_node = [](VertexId v) { return 2 * v + 1; };
  const int source = 2 * n;
  const int sink = 2 * n + 1;

  FlowNet net;
  net.graph.resize(static_cast<size_t>(2 * n + 2));
  for (VertexId v : g.vertices())
    if (view.vertex_ok(v)) net.add_edge(in_node(v), out_node(v), 1);
  for (size_t a = 0; a < g.arcs().size(); ++a) {
    if (!view.arc_ok(static_cast<int>(a))) continue;
    const VertexId t = g.arc_tail(static_cast<int>(a));
    const VertexId h = g.arc_head(static_cast<int>(a));
    net.add_edge(out_node(t), in_node(h), kBigCapacity, static_cast<int>(a));
  }
  for (VertexId u : U) net.add_edge(source, in_node(u), kBigCapacity);
  for (VertexId w : W) net.add_edge(out_node(w), sink, kBigCapacity);

  int flow = 0;
  while (net.augment(source, sink)) ++flow;

  MengerResult result;

  // Decompose the flow into vertex paths.  At most one unit passes through
  // any out-node (the split arc bounds it), so the saturated outgoing edge
  // is unique; restoring its capacity consumes the unit.
  for (VertexId u : U) {
    bool active = false;
    for (const FlowNet::Edge& e : net.graph[static_cast<size_t>(source)])
      if (e.to == in_node(u) && e.cap < kBigCapacity) active = true;
    if (!active) continue;
    Embedding path;
    path.vertices.push_back(u);
    int cur = out_node(u);
    while (cur != sink) {
      bool advanced = false;
      for (FlowNet::Edge& e : net.graph[static_cast<size_t>(cur)]) {
        if (e.cap >= kBigCapacity || (e.arc < 0 && e.to != sink)) continue;
        e.cap += 1;
        if (e.to == sink) {
          cur = sink;
        } else {
          path.steps.push_back({e.arc, true});
          path.vertices.push_back(g.arc_head(e.arc));
          cur = out_node(g.arc_head(e.arc));
        }
        advanced = true;
        break;
      }
      if (!advanced) throw Error("flow decomposition stalled");
    }
    result.paths.push_back(std::move(path));
  }
  if (static_cast<int>(result.paths.size()) != flow)
    throw Error("flow decomposition size mismatch");

  // Minimum vertex cut: split arcs crossing the residual source side.
  std::vector<char> reach(net.graph.size(), 0);
  std::deque<int> queue{source};
  reach[static_cast<size_t>(source)] = 1;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (const FlowNet::Edge& e : net.graph[static_cast<size_t>(cur)]) {
      if (e.cap <= 0 || reach[static_cast<size_t>(e.to)]) continue;
      reach[static_cast<size_t>(e.to)] = 1;
      queue.push_back(e.to);
    }
  }
  for (VertexId v : g.vertices()) {
    if (!view.vertex_ok(v)) continue;
    if (reach[static_cast<size_t>(in_node(v))] && !reach[static_cast<size_t>(out_node(v))])
      result.cut.push_back(v);
  }
  if (static_cast<int>(result.cut.size()) != flow)
    throw Error("vertex cut size disagrees with flow value");
  return result;
}

MengerResult vertex_disjoint_dipaths(const Digraph& g, const std::vector<VertexId>& U,
                                     const std::vector<VertexId>& W) {
  return vertex_disjoint_dipaths(GraphView(g), U, W);
}

bool cut_separates(const GraphView& view, const std::vector<VertexId>& U,
                   const std::vector<VertexId>& W, const std::vector<VertexId>& cut) {
  const Digraph& g = view.graph();
  std::vector<char> blocked(static_cast<size_t>(g.original_vertex_count()), 0);
  for (VertexId v : cut) blocked[static_cast<size_t>(v)] = 1;
  std::vector<char> target(static_cast<size_t>(g.original_vertex_count()), 0);
  for (VertexId w : W)
    if (view.vertex_ok(w)) target[static_cast<size_t>(w)] = 1;
  std::vector<char> seen(static_cast<size_t>(g.original_vertex_count()), 0);
  std::deque<VertexId> queue;
  for (VertexId u : sorted_unique(U)) {
    if (!view.vertex_ok(u) || blocked[static_cast<size_t>(u)]) continue;
    if (target[static_cast<size_t>(u)]) return false;  // zero-length path survives
    seen[static_cast<size_t>(u)] = 1;
    queue.push_back(u);
  }
  while (!queue.empty()) {
    const VertexId cur = queue.front();
    queue.pop_front();
    for (const AdjEntry& e : g.adjacency(cur)) {
      if (!e.out || !view.arc_ok(e.arc) || !view.vertex_ok(e.other)) continue;
      if (blocked[static_cast<size_t>(e.other)] || seen[static_cast<size_t>(e.other)]) continue;
      if (target[static_cast<size_t>(e.other)]) return false;
      seen[static_cast<size_t>(e.other)] = 1;
      queue.push_back(e.other);
    }
  }
  return true;
}

}  // namespace raylab
