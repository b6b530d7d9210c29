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
#include <string>
#include <vector>

#include "raylab/ray_spec.hpp"

namespace raylab {

using VertexId = int;

/// Names the constituent path a labeled arc belongs to.
struct RayLabel {
  int n = 0;
  int m = 0;
  bool operator==(const RayLabel&) const = default;
  auto operator<=>(const RayLabel&) const = default;
};

std::string to_string(const RayLabel& label);

/// One arc of the host multigraph.  Endpoints are stored as the vertex ids
/// current when the arc was created; identifications never rewrite them, the
/// live endpoints are resolved through the alias mapping instead.  Arcs are
/// never merged or deleted.
struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  std::optional<RayLabel> label;
  int arc_index = 0;  ///< position along the constituent (0 for free arcs)
};

/// Record of one vertex identification: at `step`, live vertices `a` and `b`
/// were merged into `merged` (= min(a, b)).
struct Identification {
  int step = 0;
  VertexId merged = 0;
  VertexId a = 0;
  VertexId b = 0;
  bool operator==(const Identification&) const = default;
};

/// A constituent path added via add_ray_prefix: its vertices received the
/// consecutive original ids [first_vertex, first_vertex + length].
struct Constituent {
  RayLabel label;
  VertexId first_vertex = 0;
  int length = 0;
  bool operator==(const Constituent&) const = default;
};

/// Adjacency entry of a live vertex.
struct AdjEntry {
  int arc = 0;         ///< arc id
  VertexId other = 0;  ///< live id of the far endpoint
  bool out = false;    ///< true iff the arc leaves this vertex
};

class Digraph;

/// Restriction of a digraph to a subset of vertices and arcs.  Holds a
/// reference; the digraph must outlive the view.
class GraphView {
 public:
  explicit GraphView(const Digraph& g);  // full view
  GraphView(const Digraph& g, std::vector<char> vertex_ok, std::vector<char> arc_ok);

  const Digraph& graph() const { return *g_; }
  bool vertex_ok(VertexId v) const { return vertex_ok_[static_cast<size_t>(v)] != 0; }
  bool arc_ok(int arc) const { return arc_ok_[static_cast<size_t>(arc)] != 0; }

  /// View of the same digraph with the given live vertices (and their
  /// incident arcs) removed.
  GraphView minus_vertices(const std::vector<VertexId>& removed) const;

 private:
  const Digraph* g_;
  std::vector<char> vertex_ok_;  // indexed by live vertex id
  std::vector<char> arc_ok_;     // indexed by arc id
};

/// Immutable host multigraph built from constituent paths, free-form arcs
/// and a sequence of vertex identifications.
class Digraph {
 public:
  int original_vertex_count() const { return original_count_; }
  /// Live vertex ids in ascending order.
  const std::vector<VertexId>& vertices() const { return live_; }
  int vertex_count() const { return static_cast<int>(live_.size()); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  VertexId arc_tail(int arc) const { return find(arcs_[static_cast<size_t>(arc)].tail); }
  VertexId arc_head(int arc) const { return find(arcs_[static_cast<size_t>(arc)].head); }

  const std::vector<Identification>& identifications() const { return identifications_; }
  const std::vector<Constituent>& constituents() const { return constituents_; }
  const std::optional<RaySpec>& pattern() const { return pattern_; }

  /// Live id an original vertex id maps to under all identifications.
  VertexId find(VertexId original) const { return find_[static_cast<size_t>(original)]; }
  bool is_live(VertexId v) const { return find(v) == v; }
  /// Original ids merged into the given live vertex (ascending, >= 1 entry).
  const std::vector<VertexId>& aliases(VertexId live) const;
  bool is_identification_vertex(VertexId live) const { return aliases(live).size() > 1; }

  /// Adjacency of a live vertex, sorted by (far endpoint, arc id).
  const std::vector<AdjEntry>& adjacency(VertexId live) const;

  /// Constituent lookup: which constituent an original id belongs to, and the
  /// position along it; nullopt for free vertices.
  std::optional<std::pair<int, int>> constituent_of(VertexId original) const;
  /// Live id of the vertex at `pos` along the labeled constituent.
  VertexId ray_vertex(const RayLabel& label, int pos) const;
  /// Original id of the vertex at `pos` along the labeled constituent.
  VertexId ray_original(const RayLabel& label, int pos) const;
  const Constituent& constituent(const RayLabel& label) const;
  /// Arc id of the k-th arc of the labeled constituent.
  int ray_arc(const RayLabel& label, int k) const;

  /// The digraph as it looked after identification steps 0..upto (inclusive);
  /// upto == -1 gives the un-identified digraph.
  Digraph at_step(int upto) const;

  /// Structural equality (creation data, not derived tables).
  bool operator==(const Digraph& other) const;

 private:
  friend class DigraphBuilder;
  friend Digraph make_digraph(int, std::vector<Arc>, std::vector<Constituent>,
                              std::vector<Identification>, std::optional<RaySpec>);
  void rebuild_tables();

  int original_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Constituent> constituents_;
  std::vector<Identification> identifications_;
  std::optional<RaySpec> pattern_;

  // Derived:
  std::vector<VertexId> find_;               // original id -> live id
  std::vector<VertexId> live_;               // ascending live ids
  std::vector<std::vector<VertexId>> alias_;  // live id -> original ids
  std::vector<std::vector<AdjEntry>> adj_;   // live id -> adjacency
};

/// Assembles and validates a digraph from creation data (used by the builder,
/// by at_step and by deserialization).
Digraph make_digraph(int original_count, std::vector<Arc> arcs,
                     std::vector<Constituent> constituents,
                     std::vector<Identification> identifications,
                     std::optional<RaySpec> pattern);

/// Mutable construction front-end; freeze() yields the immutable digraph.
class DigraphBuilder {
 public:
  VertexId add_vertex();
  std::vector<VertexId> add_vertices(int count);
  /// Free arc between two live vertices (unlabeled, arc_index 0).
  int add_arc(VertexId tail, VertexId head);

  /// Adds a fresh path of `length` arcs realizing the first `length` arcs of
  /// `spec`; its vertices get consecutive new ids.  Out arcs point away from
  /// the first vertex, In arcs towards it.
  void add_ray_prefix(const RayLabel& label, const RaySpec& spec, int length);

  /// Merges two distinct live vertices; the smaller id survives.  Returns the
  /// merged id and records the step.
  VertexId identify(VertexId u, VertexId v);

  void set_pattern(const RaySpec& spec) { pattern_ = spec; }

  int vertex_count() const { return next_vertex_; }
  VertexId live(VertexId v) const;
  /// Current graph state as an immutable digraph (cheap enough at desk scale;
  /// used to query intermediate construction stages).
  Digraph snapshot() const;
  Digraph freeze() const { return snapshot(); }

 private:
  int next_vertex_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Constituent> constituents_;
  std::vector<Identification> identifications_;
  std::optional<RaySpec> pattern_;
  std::vector<VertexId> parent_;  // union-find over original ids
};

/// Number of arcs on a shortest path between two live vertices in the
/// underlying undirected (multi)graph of the view, or nullopt if unreachable.
std::optional<int> underlying_distance(const GraphView& view, VertexId u, VertexId v);

/// The same digraph with every arc direction flipped (labels, arc ids,
/// constituents and identification history preserved; the pattern, if any,
/// is reversed to match).
Digraph reversed(const Digraph& g);

}  // namespace raylab
