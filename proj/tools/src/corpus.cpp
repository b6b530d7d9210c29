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

#include "raylab/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace raylab::corpus {

namespace {

/// A freshly built path remembered as vertex and arc ids.
struct PathHandle {
  std::vector<VertexId> vertices;
  std::vector<int> arcs;
};

Embedding to_embedding(const PathHandle& h) {
  Embedding e;
  e.vertices = h.vertices;
  for (int a : h.arcs) e.steps.push_back(ArcStep{a, true});
  return e;
}

/// Fresh out-dipath of `length` arcs.
PathHandle add_dipath(DigraphBuilder& b, int length) {
  PathHandle h;
  h.vertices.push_back(b.add_vertex());
  for (int i = 0; i < length; ++i) {
    const VertexId next = b.add_vertex();
    h.arcs.push_back(b.add_arc(h.vertices.back(), next));
    h.vertices.push_back(next);
  }
  return h;
}

/// Out-dipath of `length` arcs whose vertex at each pinned position is the
/// given pre-existing vertex; all other vertices are fresh.
PathHandle thread_dipath(DigraphBuilder& b, int length,
                         const std::map<int, VertexId>& pins) {
  PathHandle h;
  auto vertex_at = [&](int pos) -> VertexId {
    auto it = pins.find(pos);
    return it != pins.end() ? it->second : b.add_vertex();
  };
  h.vertices.push_back(vertex_at(0));
  for (int i = 1; i <= length; ++i) {
    h.vertices.push_back(vertex_at(i));
    h.arcs.push_back(b.add_arc(h.vertices[static_cast<std::size_t>(i) - 1],
                               h.vertices[static_cast<std::size_t>(i)]));
  }
  return h;
}

/// Path of `length` arcs oriented according to `spec`, with optional pins.
/// The returned embedding walks it from the root end, so its orientation
/// word equals the first `length` arcs of `spec`.
PathHandle thread_pattern_path(DigraphBuilder& b, const RaySpec& spec, int length,
                               const std::map<int, VertexId>& pins) {
  PathHandle h;
  auto vertex_at = [&](int pos) -> VertexId {
    auto it = pins.find(pos);
    return it != pins.end() ? it->second : b.add_vertex();
  };
  h.vertices.push_back(vertex_at(0));
  for (int i = 1; i <= length; ++i) {
    h.vertices.push_back(vertex_at(i));
    const VertexId prev = h.vertices[static_cast<std::size_t>(i) - 1];
    const VertexId cur = h.vertices[static_cast<std::size_t>(i)];
    if (spec.orientation_at(i - 1) == Orientation::Out)
      h.arcs.push_back(b.add_arc(prev, cur));
    else
      h.arcs.push_back(b.add_arc(cur, prev));
  }
  return h;
}

Embedding to_pattern_embedding(const PathHandle& h, const RaySpec& spec) {
  Embedding e;
  e.vertices = h.vertices;
  for (std::size_t i = 0; i < h.arcs.size(); ++i)
    e.steps.push_back(ArcStep{h.arcs[i], spec.orientation_at(static_cast<std::int64_t>(i)) ==
                                             Orientation::Out});
  return e;
}

/// K disjoint rails, one layer holding all of them.  Every extension level
/// reselects this layer; previously adopted rails are pruned against the
/// marker prefixes and the rest pass untouched.
PackingInstance make_disjoint(const std::string& name, int n, int rails, int len,
                              int min_len) {
  DigraphBuilder b;
  PackingInstance inst;
  inst.name = name;
  inst.n = n;
  inst.min_len = min_len;
  std::vector<Embedding> layer;
  for (int r = 0; r < rails; ++r) {
    const PathHandle h = add_dipath(b, len);
    layer.push_back(to_embedding(h));
    inst.X.push_back(h.vertices.front());
  }
  inst.tribe.layers.push_back(std::move(layer));
  inst.tribe.hat_len = 0;
  inst.host = b.freeze();
  return inst;
}

/// Rails sliced at increasing offsets: layer l holds suffixes starting at
/// position l, sized so that level l selects exactly layer l.  Each family
/// ray then meets precisely its own rail-mate, which gets adopted away.
PackingInstance make_chained(const std::string& name, int n, int len, int min_len) {
  std::vector<int> sizes(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l)
    sizes[static_cast<std::size_t>(l)] = l * (l + 1) / 2 + l * l + 1;
  const int rails = *std::max_element(sizes.begin(), sizes.end());

  DigraphBuilder b;
  PackingInstance inst;
  inst.name = name;
  inst.n = n;
  inst.min_len = min_len;
  std::vector<PathHandle> rail;
  for (int r = 0; r < rails; ++r) rail.push_back(add_dipath(b, len));

  std::set<VertexId> starts;
  for (int l = 0; l < n; ++l) {
    std::vector<Embedding> layer;
    for (int r = 0; r < sizes[static_cast<std::size_t>(l)]; ++r) {
      Embedding e = to_embedding(rail[static_cast<std::size_t>(r)]).slice(l, len);
      starts.insert(e.start());
      layer.push_back(std::move(e));
    }
    inst.tribe.layers.push_back(std::move(layer));
  }
  inst.tribe.hat_len = 0;
  inst.X.assign(starts.begin(), starts.end());
  inst.host = b.freeze();
  return inst;
}

/// One trunk plus `spokes` dipaths crossing it at distinct positions: the
/// trunk meets too many second-layer members to be adopted, so its start
/// must be rerouted through the crossing structure (n = 2).
PackingInstance make_star(const std::string& name, int spokes, int spoke_len,
                          int min_len) {
  const int trunk_len = 2 * spokes + 4;
  DigraphBuilder b;
  PackingInstance inst;
  inst.name = name;
  inst.n = 2;
  inst.min_len = min_len;

  const PathHandle trunk = add_dipath(b, trunk_len);
  inst.tribe.layers.push_back({to_embedding(trunk)});
  inst.X.push_back(trunk.vertices.front());

  std::vector<Embedding> layer;
  for (int k = 1; k <= spokes; ++k) {
    // Spoke k passes through trunk position 2k at its own position 2.
    const PathHandle s = thread_dipath(
        b, spoke_len, {{2, trunk.vertices[static_cast<std::size_t>(2 * k)]}});
    inst.X.push_back(s.vertices.front());
    layer.push_back(to_embedding(s));
  }
  const PathHandle clean = add_dipath(b, spoke_len);
  inst.X.push_back(clean.vertices.front());
  layer.push_back(to_embedding(clean));
  inst.tribe.layers.push_back(std::move(layer));
  inst.tribe.hat_len = 0;
  inst.host = b.freeze();
  return inst;
}

/// Tribe of pattern copies; when `share_hats` is set, member 0 of every layer
/// j >= 1 hooks its hat through a beyond-the-hat vertex of member 0 of layer
/// 0, so refinement must prune the tainted members and reselect.
ForkInstance make_fork(const std::string& name, const RaySpec& pattern, int hat_len,
                       int max_layer, int layers, int layer_size, bool share_hats) {
  const int member_len = hat_len + 7;
  DigraphBuilder b;
  ForkInstance inst;
  inst.name = name;
  inst.max_layer = max_layer;
  inst.tribe.pattern = pattern;
  inst.tribe.hat_len = hat_len;

  std::vector<PathHandle> first_layer;
  for (int j = 0; j < layers; ++j) {
    std::vector<Embedding> layer;
    for (int i = 0; i < layer_size; ++i) {
      std::map<int, VertexId> pins;
      if (share_hats && j >= 1 && i == 0 && hat_len >= 1) {
        // The member's own position 1 (inside its hat) reuses a vertex of
        // layer 0's member 0 that lies beyond that member's hat.
        const PathHandle& anchor = first_layer.front();
        pins[1] = anchor.vertices[static_cast<std::size_t>(hat_len + 2)];
      }
      const PathHandle h = thread_pattern_path(b, pattern, member_len, pins);
      if (j == 0) first_layer.push_back(h);
      layer.push_back(to_pattern_embedding(h, pattern));
    }
    inst.tribe.layers.push_back(std::move(layer));
  }
  inst.host = b.freeze();
  return inst;
}

}  // namespace

std::vector<MengerInstance> seeded_menger_corpus(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<MengerInstance> out;
  for (int i = 0; i < count; ++i) {
    const int n = 4 + static_cast<int>(rng() % 9);  // 4..12 vertices
    DigraphBuilder b;
    b.add_vertices(n);
    const int arcs = n + static_cast<int>(rng() % static_cast<unsigned>(2 * n + 1));
    for (int a = 0; a < arcs; ++a) {
      const VertexId t = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
      VertexId h = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
      if (h == t) h = (h + 1) % n;
      b.add_arc(t, h);
    }
    MengerInstance inst{b.freeze(), {}, {}};
    std::set<VertexId> us;
    std::set<VertexId> ws;
    const int nu = 1 + static_cast<int>(rng() % 3);
    const int nw = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < nu; ++k) us.insert(static_cast<VertexId>(rng() % static_cast<unsigned>(n)));
    for (int k = 0; k < nw; ++k) ws.insert(static_cast<VertexId>(rng() % static_cast<unsigned>(n)));
    inst.U.assign(us.begin(), us.end());
    inst.W.assign(ws.begin(), ws.end());
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<SpecCase> classifier_corpus(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<SpecCase> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Orientation> prefix;
    const int plen = static_cast<int>(rng() % 5);
    for (int k = 0; k < plen; ++k)
      prefix.push_back((rng() % 2) ? Orientation::In : Orientation::Out);

    SpecCase c;
    switch (i % 4) {
      case 0:
        c.spec = RaySpec(prefix, TailAllOut{});
        c.expected = {Verdict::Kind::Ubiquitous, Verdict::Reason::FinitelyManyTurns, 0};
        break;
      case 1:
        c.spec = RaySpec(prefix, TailAllIn{});
        c.expected = {Verdict::Kind::Ubiquitous, Verdict::Reason::FinitelyManyTurns, 0};
        break;
      case 2: {
        TailPeriodic per;
        per.first = (rng() % 2) ? Orientation::In : Orientation::Out;
        const int phases = 2 * (1 + static_cast<int>(rng() % 3));  // even count
        int cmax = 0;
        for (int k = 0; k < phases; ++k) {
          const int len = 1 + static_cast<int>(rng() % 4);
          per.lengths.push_back(len);
          cmax = std::max(cmax, len);
        }
        c.spec = RaySpec(prefix, per);
        c.expected = {Verdict::Kind::NonUbiquitous, Verdict::Reason::BoundedRepSeq, cmax};
        break;
      }
      default: {
        TailGrowing g;
        g.start = 1 + static_cast<int>(rng() % 3);
        g.step = 1 + static_cast<int>(rng() % 2);
        g.first = (rng() % 2) ? Orientation::In : Orientation::Out;
        c.spec = RaySpec(prefix, g);
        c.expected = {Verdict::Kind::NonUbiquitous, Verdict::Reason::UnboundedRepSeq, 0};
        break;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<PackingInstance> packing_corpus() {
  std::vector<PackingInstance> out;
  for (int n = 1; n <= 5; ++n)
    out.push_back(make_disjoint("disjoint-n" + std::to_string(n), n, 30, 25, 12));
  for (int n = 1; n <= 5; ++n)
    out.push_back(make_disjoint("disjoint-long-n" + std::to_string(n), n, 30, 40, 30));
  for (int n = 1; n <= 5; ++n)
    out.push_back(make_chained("chained-n" + std::to_string(n), n, 30, 15));
  for (int n = 1; n <= 5; ++n)
    out.push_back(make_chained("chained-deep-n" + std::to_string(n), n, 36, 20));
  for (int s = 2; s <= 6; ++s)
    out.push_back(make_star("star-s" + std::to_string(s), s, 12, 9));
  return out;
}

std::vector<ForkInstance> fork_corpus() {
  const RaySpec all_out({}, TailAllOut{});
  const RaySpec hat1({Orientation::Out}, TailAllOut{});
  const RaySpec hat2({Orientation::Out, Orientation::In}, TailAllOut{});
  const RaySpec hat3({Orientation::Out, Orientation::In, Orientation::In}, TailAllOut{});

  std::vector<ForkInstance> out;
  int idx = 0;
  const auto add = [&](const RaySpec& p, int hat, int max_layer, bool share) {
    out.push_back(make_fork("fork-" + std::to_string(idx++) + (share ? "-shared" : "-plain"),
                            p, hat, max_layer, max_layer + 2, 12, share));
  };
  for (int max_layer : {2, 3}) {
    add(all_out, 0, max_layer, false);
    add(hat1, 1, max_layer, false);
    add(hat2, 2, max_layer, false);
    add(hat3, 3, max_layer, false);
    add(hat1, 1, max_layer, true);
    add(hat2, 2, max_layer, true);
    add(hat3, 3, max_layer, true);
  }
  add(all_out, 0, 4, false);
  add(hat1, 1, 4, true);
  add(hat2, 2, 4, true);
  add(hat3, 3, 4, false);
  add(hat2, 2, 4, false);
  add(hat1, 1, 4, false);
  return out;
}

}  // namespace raylab::corpus
