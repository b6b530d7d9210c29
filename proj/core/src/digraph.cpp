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

#include "raylab/digraph.hpp"

#include <algorithm>
#include <deque>

#include "raylab/errors.hpp"

namespace raylab {

std::string to_string(const RayLabel& label) {
  return "R(" + std::to_string(label.n) + "," + std::to_string(label.m) + ")";
}

GraphView::GraphView(const Digraph& g)
    : g_(&g),
      vertex_ok_(static_cast<size_t>(g.original_vertex_count()), 0),
      arc_ok_(g.arcs().size(), 1) {
  for (VertexId v : g.vertices()) vertex_ok_[static_cast<size_t>(v)] = 1;
}

GraphView::GraphView(const Digraph& g, std::vector<char> vertex_ok, std::vector<char> arc_ok)
    : g_(&g), vertex_ok_(std::move(vertex_ok)), arc_ok_(std::move(arc_ok)) {}

GraphView GraphView::minus_vertices(const std::vector<VertexId>& removed) const {
  std::vector<char> v_ok = vertex_ok_;
  for (VertexId v : removed) v_ok[static_cast<size_t>(v)] = 0;
  std::vector<char> a_ok = arc_ok_;
  for (size_t a = 0; a < a_ok.size(); ++a) {
    if (!a_ok[a]) continue;
    const VertexId t = g_->arc_tail(static_cast<int>(a));
    const VertexId h = g_->arc_head(static_cast<int>(a));
    if (!v_ok[static_cast<size_t>(t)] || !v_ok[static_cast<size_t>(h)]) a_ok[a] = 0;
  }
  return GraphView(*g_, std::move(v_ok), std::move(a_ok));
}

void Digraph::rebuild_tables() {
  find_.resize(static_cast<size_t>(original_count_));
  for (int v = 0; v < original_count_; ++v) find_[static_cast<size_t>(v)] = v;
  for (const Identification& id : identifications_) {
    // a and b are live ids at the time of the step; resolve defensively.
    VertexId ra = find_[static_cast<size_t>(id.a)];
    VertexId rb = find_[static_cast<size_t>(id.b)];
    if (ra == rb) throw Error("identification step merges an already merged pair");
    const VertexId keep = std::min(ra, rb);
    const VertexId drop = std::max(ra, rb);
    for (VertexId v = 0; v < original_count_; ++v)
      if (find_[static_cast<size_t>(v)] == drop) find_[static_cast<size_t>(v)] = keep;
    if (id.merged != keep) throw Error("identification record disagrees with replay");
  }
  alias_.assign(static_cast<size_t>(original_count_), {});
  for (VertexId v = 0; v < original_count_; ++v)
    alias_[static_cast<size_t>(find_[static_cast<size_t>(v)])].push_back(v);
  live_.clear();
  for (VertexId v = 0; v < original_count_; ++v)
    if (!alias_[static_cast<size_t>(v)].empty()) live_.push_back(v);

  adj_.assign(static_cast<size_t>(original_count_), {});
  for (size_t a = 0; a < arcs_.size(); ++a) {
    const VertexId t = find_[static_cast<size_t>(arcs_[a].tail)];
    const VertexId h = find_[static_cast<size_t>(arcs_[a].head)];
    adj_[static_cast<size_t>(t)].push_back({static_cast<int>(a), h, true});
    adj_[static_cast<size_t>(h)].push_back({static_cast<int>(a), t, false});
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(), [](const AdjEntry& x, const AdjEntry& y) {
      if (x.other != y.other) return x.other < y.other;
      if (x.arc != y.arc) return x.arc < y.arc;
      return x.out < y.out;
    });
}

const std::vector<VertexId>& Digraph::aliases(VertexId live) const {
  return alias_[static_cast<size_t>(live)];
}

const std::vector<AdjEntry>& Digraph::adjacency(VertexId live) const {
  return adj_[static_cast<size_t>(live)];
}

std::optional<std::pair<int, int>> Digraph::constituent_of(VertexId original) const {
  for (size_t c = 0; c < constituents_.size(); ++c) {
    const Constituent& k = constituents_[c];
    if (original >= k.first_vertex && original <= k.first_vertex + k.length)
      return std::make_pair(static_cast<int>(c), original - k.first_vertex);
  }
  return std::nullopt;
}

const Constituent& Digraph::constituent(const RayLabel& label) const {
  for (const Constituent& k : constituents_)
    if (k.label == label) return k;
  throw Error("no constituent labeled " + to_string(label));
}

VertexId Digraph::ray_original(const RayLabel& label, int pos) const {
  const Constituent& k = constituent(label);
  if (pos < 0 || pos > k.length)
    throw Error("position " + std::to_string(pos) + " outside " + to_string(label));
  return k.first_vertex + pos;
}

VertexId Digraph::ray_vertex(const RayLabel& label, int pos) const {
  return find(ray_original(label, pos));
}

int Digraph::ray_arc(const RayLabel& label, int k) const {
  // Constituent arcs were created consecutively right after their vertices;
  // locate by label + arc_index (arcs are never reordered).
  for (size_t a = 0; a < arcs_.size(); ++a)
    if (arcs_[a].label && *arcs_[a].label == label && arcs_[a].arc_index == k)
      return static_cast<int>(a);
  throw Error("no arc " + std::to_string(k) + " on " + to_string(label));
}

Digraph Digraph::at_step(int upto) const {
  std::vector<Identification> ids;
  for (const Identification& id : identifications_)
    if (id.step <= upto) ids.push_back(id);
  return make_digraph(original_count_, arcs_, constituents_, std::move(ids), pattern_);
}

bool Digraph::operator==(const Digraph& other) const {
  auto arc_eq = [](const Arc& x, const Arc& y) {
    return x.tail == y.tail && x.head == y.head && x.label == y.label &&
           x.arc_index == y.arc_index;
  };
  if (original_count_ != other.original_count_ || arcs_.size() != other.arcs_.size())
    return false;
  for (size_t a = 0; a < arcs_.size(); ++a)
    if (!arc_eq(arcs_[a], other.arcs_[a])) return false;
  return constituents_ == other.constituents_ &&
         identifications_ == other.identifications_ && pattern_ == other.pattern_;
}

Digraph make_digraph(int original_count, std::vector<Arc> arcs,
                     std::vector<Constituent> constituents,
                     std::vector<Identification> identifications,
                     std::optional<RaySpec> pattern) {
  if (original_count < 0) throw Error("negative vertex count");
  Digraph g;
  g.original_count_ = original_count;
  g.arcs_ = std::move(arcs);
  g.constituents_ = std::move(constituents);
  g.identifications_ = std::move(identifications);
  g.pattern_ = std::move(pattern);
  for (const Arc& a : g.arcs_)
    if (a.tail < 0 || a.tail >= original_count || a.head < 0 || a.head >= original_count)
      throw Error("arc endpoint outside vertex range");
  for (const Identification& id : g.identifications_)
    if (id.a < 0 || id.a >= original_count || id.b < 0 || id.b >= original_count)
      throw Error("identification endpoint outside vertex range");
  for (const Constituent& k : g.constituents_)
    if (k.length < 0 || k.first_vertex < 0 || k.first_vertex + k.length >= original_count)
      throw Error("constituent outside vertex range");
  g.rebuild_tables();
  return g;
}

VertexId DigraphBuilder::add_vertex() {
  parent_.push_back(next_vertex_);
  return next_vertex_++;
}

std::vector<VertexId> DigraphBuilder::add_vertices(int count) {
  std::vector<VertexId> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(add_vertex());
  return out;
}

VertexId DigraphBuilder::live(VertexId v) const {
  while (parent_[static_cast<size_t>(v)] != v) v = parent_[static_cast<size_t>(v)];
  return v;
}

int DigraphBuilder::add_arc(VertexId tail, VertexId head) {
  if (tail < 0 || tail >= next_vertex_ || head < 0 || head >= next_vertex_)
    throw Error("arc endpoint outside vertex range");
  arcs_.push_back({tail, head, std::nullopt, 0});
  return static_cast<int>(arcs_.size()) - 1;
}

void DigraphBuilder::add_ray_prefix(const RayLabel& label, const RaySpec& spec, int length) {
  if (label.n > label.m) throw Error("ray label needs n <= m");
  for (const Constituent& k : constituents_)
    if (k.label == label) throw Error("duplicate constituent label " + to_string(label));
  const VertexId first = next_vertex_;
  add_vertices(length + 1);
  for (int k = 0; k < length; ++k) {
    const bool out = spec.orientation_at(k) == Orientation::Out;
    Arc a;
    a.tail = out ? first + k : first + k + 1;
    a.head = out ? first + k + 1 : first + k;
    a.label = label;
    a.arc_index = k;
    arcs_.push_back(a);
  }
  constituents_.push_back({label, first, length});
}

VertexId DigraphBuilder::identify(VertexId u, VertexId v) {
  if (u < 0 || u >= next_vertex_ || v < 0 || v >= next_vertex_)
    throw Error("identify: vertex outside range");
  if (live(u) != u || live(v) != v) throw Error("identify: vertex already merged away");
  if (u == v) throw Error("identify: need two distinct vertices");
  const VertexId keep = std::min(u, v);
  const VertexId drop = std::max(u, v);
  parent_[static_cast<size_t>(drop)] = keep;
  identifications_.push_back(
      {static_cast<int>(identifications_.size()), keep, u, v});
  return keep;
}

Digraph DigraphBuilder::snapshot() const {
  return make_digraph(next_vertex_, arcs_, constituents_, identifications_, pattern_);
}

std::optional<int> underlying_distance(const GraphView& view, VertexId u, VertexId v) {
  const Digraph& g = view.graph();
  if (!view.vertex_ok(u) || !view.vertex_ok(v)) return std::nullopt;
  if (u == v) return 0;
  std::vector<int> dist(static_cast<size_t>(g.original_vertex_count()), -1);
  std::deque<VertexId> queue{u};
  dist[static_cast<size_t>(u)] = 0;
  while (!queue.empty()) {
    const VertexId cur = queue.front();
    queue.pop_front();
    for (const AdjEntry& e : g.adjacency(cur)) {
      if (!view.arc_ok(e.arc) || !view.vertex_ok(e.other)) continue;
      if (dist[static_cast<size_t>(e.other)] != -1) continue;
      dist[static_cast<size_t>(e.other)] = dist[static_cast<size_t>(cur)] + 1;
      if (e.other == v) return dist[static_cast<size_t>(e.other)];
      queue.push_back(e.other);
    }
  }
  return std::nullopt;
}

Digraph reversed(const Digraph& g) {
  std::vector<Arc> arcs = g.arcs();
  for (Arc& a : arcs) std::swap(a.tail, a.head);
  std::optional<RaySpec> pattern;
  if (g.pattern()) pattern = reverse(*g.pattern());
  return make_digraph(g.original_vertex_count(), std::move(arcs), g.constituents(),
                      g.identifications(), std::move(pattern));
}

}  // namespace raylab
