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

#include "raylab/packing.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "raylab/errors.hpp"
#include "raylab/menger.hpp"

namespace raylab {

namespace {

void insert_prefix(std::unordered_set<VertexId>& into, const Embedding& ray, int marker) {
  for (int p = 0; p <= marker; ++p) into.insert(ray.vertices[static_cast<size_t>(p)]);
}

void require_out_dipath(const Embedding& e) {
  for (const ArcStep& s : e.steps)
    if (!s.forward) throw Error("expected an out-dipath");
}

}  // namespace

int extension_demand(const FamilyState& state) {
  std::unordered_set<VertexId> prefix_union;
  for (size_t k = 0; k < state.rays.size(); ++k)
    insert_prefix(prefix_union, state.rays[k], state.markers[k]);
  return static_cast<int>(prefix_union.size()) + state.level * state.level + 1;
}

FamilyState extend_family(const FamilyState& state, const std::vector<Embedding>& layer,
                          const GraphView& host, LevelTrace* trace) {
  const int l = state.level;
  if (static_cast<int>(state.rays.size()) != l ||
      static_cast<int>(state.markers.size()) != l)
    throw Error("family state is inconsistent");
  for (const Embedding& m : layer) require_out_dipath(m);

  LevelTrace tr;
  tr.level = l + 1;
  tr.layer_size = static_cast<int>(layer.size());

  if (l == 0) {
    if (layer.empty()) throw LayerTooSmall(0, 1, 0);
    tr.f_prime_size = static_cast<int>(layer.size());
    if (trace) *trace = tr;
    return FamilyState{1, {layer.front()}, {0}};
  }

  const int demand = extension_demand(state);
  if (static_cast<int>(layer.size()) < demand)
    throw LayerTooSmall(l, demand, static_cast<int>(layer.size()));

  std::unordered_set<VertexId> prefix_union;
  for (size_t k = 0; k < state.rays.size(); ++k)
    insert_prefix(prefix_union, state.rays[k], state.markers[k]);

  // Drop the members that meet a marker prefix.
  std::vector<const Embedding*> pool;
  for (const Embedding& m : layer) {
    bool meets = false;
    for (VertexId v : m.vertices)
      if (prefix_union.count(v)) {
        meets = true;
        break;
      }
    if (!meets) pool.push_back(&m);
  }
  tr.deleted_prefix = static_cast<int>(layer.size()) - static_cast<int>(pool.size());
  if (static_cast<int>(pool.size()) < l * l + 1)
    throw Error("survivor count fell below l^2+1; layer members must be disjoint");

  // Members are pairwise disjoint, so each vertex has a unique owner.
  std::unordered_map<VertexId, int> owner;
  for (size_t i = 0; i < pool.size(); ++i)
    for (VertexId v : pool[i]->vertices)
      if (!owner.emplace(v, static_cast<int>(i)).second)
        throw Error("layer members overlap each other");
  std::vector<char> alive(pool.size(), 1);

  const auto met_owners = [&](const Embedding& ray) {
    std::vector<int> got;
    std::unordered_set<int> seen;
    for (VertexId v : ray.vertices) {
      const auto it = owner.find(v);
      if (it == owner.end() || !alive[static_cast<size_t>(it->second)]) continue;
      if (seen.insert(it->second).second) got.push_back(it->second);
    }
    return got;
  };

  // Adoption: keep any ray that meets at most l survivors, discard what it
  // meets, and rescan from the lowest index.
  std::vector<Embedding> rays(static_cast<size_t>(l) + 1);
  std::vector<int> markers(static_cast<size_t>(l) + 1, -1);
  std::vector<char> defined(static_cast<size_t>(l), 0);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < l && !progress; ++i) {
      if (defined[static_cast<size_t>(i)]) continue;
      const std::vector<int> met = met_owners(state.rays[static_cast<size_t>(i)]);
      if (static_cast<int>(met.size()) > l) continue;
      const Embedding& r = state.rays[static_cast<size_t>(i)];
      const int newmark = state.markers[static_cast<size_t>(i)] + 1;
      if (newmark >= static_cast<int>(r.vertices.size())) throw LayerTooShort(l, newmark);
      rays[static_cast<size_t>(i)] = r;
      markers[static_cast<size_t>(i)] = newmark;
      defined[static_cast<size_t>(i)] = 1;
      for (int o : met) alive[static_cast<size_t>(o)] = 0;
      tr.adopted_indices.push_back(i);
      progress = true;
    }
  }
  tr.adopted = static_cast<int>(tr.adopted_indices.size());
  const int m = tr.adopted;

  std::vector<int> J;
  for (int i = 0; i < l; ++i)
    if (!defined[static_cast<size_t>(i)]) J.push_back(i);
  tr.j_size = static_cast<int>(J.size());
  const int alive_count =
      static_cast<int>(std::count(alive.begin(), alive.end(), char(1)));
  tr.f_prime_size = alive_count;
  if (alive_count < (l - m) * l + 1)
    throw Error("pool size fell below (l-m)*l+1 after adoptions");

  // Junction vertex per pending ray: where its l-th distinct survivor is
  // first met.  Always beyond the marker, because prefix-meeting members
  // were dropped.
  std::vector<int> c_pos(static_cast<size_t>(l), -1);
  for (int j : J) {
    const Embedding& r = state.rays[static_cast<size_t>(j)];
    std::unordered_set<int> seen;
    for (size_t p = 0; p < r.vertices.size(); ++p) {
      const auto it = owner.find(r.vertices[p]);
      if (it == owner.end() || !alive[static_cast<size_t>(it->second)]) continue;
      if (seen.insert(it->second).second && static_cast<int>(seen.size()) == l) {
        c_pos[static_cast<size_t>(j)] = static_cast<int>(p);
        break;
      }
    }
    if (c_pos[static_cast<size_t>(j)] < 0)
      throw Error("a pending ray meets fewer than l survivors");
    if (c_pos[static_cast<size_t>(j)] <= state.markers[static_cast<size_t>(j)])
      throw Error("junction vertex fell inside the marker prefix");
  }

  // The fresh ray: first survivor avoiding every initial segment up to the
  // junctions.
  std::unordered_set<VertexId> junction_union;
  for (int j : J)
    for (int p = 0; p <= c_pos[static_cast<size_t>(j)]; ++p)
      junction_union.insert(state.rays[static_cast<size_t>(j)].vertices[static_cast<size_t>(p)]);
  int fresh = -1;
  for (size_t i = 0; i < pool.size() && fresh < 0; ++i) {
    if (!alive[i]) continue;
    bool meets = false;
    for (VertexId v : pool[i]->vertices)
      if (junction_union.count(v)) {
        meets = true;
        break;
      }
    if (!meets) fresh = static_cast<int>(i);
  }
  if (fresh < 0) throw Error("no survivor avoids the junction segments");
  rays[static_cast<size_t>(l)] = *pool[static_cast<size_t>(fresh)];
  markers[static_cast<size_t>(l)] = 0;
  alive[static_cast<size_t>(fresh)] = 0;

  if (!J.empty()) {
    // Z: the marker-to-junction segments.
    std::unordered_set<VertexId> Z;
    for (int j : J)
      for (int p = state.markers[static_cast<size_t>(j)]; p <= c_pos[static_cast<size_t>(j)];
           ++p)
        Z.insert(state.rays[static_cast<size_t>(j)].vertices[static_cast<size_t>(p)]);

    // Target vertex per survivor: first position past its last Z-contact.
    std::vector<std::pair<int, int>> ws;  // (pool index, w position)
    for (size_t i = 0; i < pool.size(); ++i) {
      if (!alive[i]) continue;
      const Embedding& s = *pool[i];
      int last = -1;
      for (size_t p = 0; p < s.vertices.size(); ++p)
        if (Z.count(s.vertices[p])) last = static_cast<int>(p);
      const int wpos = last + 1;
      if (wpos >= static_cast<int>(s.vertices.size())) throw LayerTooShort(l, wpos);
      ws.push_back({static_cast<int>(i), wpos});
    }

    // Connecting paths live in the union of segments and survivor prefixes.
    const Digraph& g = host.graph();
    std::vector<char> vok(static_cast<size_t>(g.original_vertex_count()), 0);
    std::vector<char> aok(g.arcs().size(), 0);
    const auto admit = [&](const Embedding& e, int from, int to) {
      for (int p = from; p <= to; ++p) vok[static_cast<size_t>(e.vertices[static_cast<size_t>(p)])] = 1;
      for (int p = from; p < to; ++p) aok[static_cast<size_t>(e.steps[static_cast<size_t>(p)].arc)] = 1;
    };
    for (int j : J)
      admit(state.rays[static_cast<size_t>(j)], state.markers[static_cast<size_t>(j)],
            c_pos[static_cast<size_t>(j)]);
    for (const auto& [i, wpos] : ws) admit(*pool[static_cast<size_t>(i)], 0, wpos);
    const GraphView H(g, std::move(vok), std::move(aok));

    std::vector<VertexId> U, W;
    for (int j : J)
      U.push_back(state.rays[static_cast<size_t>(j)]
                      .vertices[static_cast<size_t>(state.markers[static_cast<size_t>(j)])]);
    std::unordered_map<VertexId, std::pair<int, int>> w_info;  // w -> (pool idx, pos)
    for (const auto& [i, wpos] : ws) {
      const VertexId w = pool[static_cast<size_t>(i)]->vertices[static_cast<size_t>(wpos)];
      W.push_back(w);
      w_info[w] = {i, wpos};
    }

    const MengerResult res = vertex_disjoint_dipaths(H, U, W);
    tr.cut_size = static_cast<int>(res.cut.size());
    if (static_cast<int>(res.paths.size()) < static_cast<int>(J.size()))
      throw RerouteFailed(l, res.cut);

    for (const Embedding& P : res.paths) {
      int j = -1;
      for (int cand : J)
        if (state.rays[static_cast<size_t>(cand)]
                .vertices[static_cast<size_t>(state.markers[static_cast<size_t>(cand)])] ==
            P.start())
          j = cand;
      if (j < 0) throw Error("connecting path does not start at a marker");
      const auto it = w_info.find(P.end());
      if (it == w_info.end()) throw Error("connecting path does not end at a target");
      const auto [si, wpos] = it->second;
      const Embedding& S = *pool[static_cast<size_t>(si)];
      const Embedding prefix =
          state.rays[static_cast<size_t>(j)].slice(0, state.markers[static_cast<size_t>(j)]);
      const Embedding suffix = S.slice(wpos, static_cast<int>(S.vertices.size()) - 1);
      rays[static_cast<size_t>(j)] = concat(concat(prefix, P), suffix);
      markers[static_cast<size_t>(j)] = state.markers[static_cast<size_t>(j)] + P.length();
    }
    for (int j : J)
      if (markers[static_cast<size_t>(j)] < 0) throw Error("a pending ray was not rerouted");
  }

  FamilyState next{l + 1, std::move(rays), std::move(markers)};

  // The proof's invariants, checked structurally on the result.
  std::unordered_set<VertexId> all;
  for (int k = 0; k <= l; ++k) {
    const Embedding& r = next.rays[static_cast<size_t>(k)];
    require_out_dipath(r);
    validate_embedding(host, r);
    for (VertexId v : r.vertices)
      if (!all.insert(v).second) throw Error("extended family is not disjoint");
    if (k < l) {
      if (next.markers[static_cast<size_t>(k)] <= state.markers[static_cast<size_t>(k)])
        throw Error("marker failed to advance");
      const Embedding& old = state.rays[static_cast<size_t>(k)];
      for (int p = 0; p <= state.markers[static_cast<size_t>(k)]; ++p) {
        if (old.vertices[static_cast<size_t>(p)] != r.vertices[static_cast<size_t>(p)])
          throw Error("marker prefix changed");
        if (p < state.markers[static_cast<size_t>(k)] &&
            !(old.steps[static_cast<size_t>(p)] == r.steps[static_cast<size_t>(p)]))
          throw Error("marker prefix changed");
      }
    }
  }

  if (trace) *trace = tr;
  return next;
}

FamilyState extend_family(const FamilyState& state, const std::vector<Embedding>& layer,
                          const Digraph& D, LevelTrace* trace) {
  return extend_family(state, layer, GraphView(D), trace);
}

std::vector<Embedding> pack_out_rays(const GraphView& host, const Tribe& tribe,
                                     const std::vector<VertexId>& X, int n, int min_len,
                                     std::vector<LevelTrace>* traces) {
  if (n < 1) throw Error("n must be >= 1");
  if (min_len < 0) throw Error("min_len must be >= 0");
  const std::unordered_set<VertexId> xset(X.begin(), X.end());
  for (const auto& layer : tribe.layers)
    for (const Embedding& m : layer) {
      require_out_dipath(m);
      if (!xset.count(m.start())) throw Error("tribe member starts outside X");
    }

  FamilyState state;
  while (state.level < n) {
    const int demand = extension_demand(state);
    int pick = -1;
    int best = 0;
    for (size_t i = 0; i < tribe.layers.size(); ++i) {
      const int size = static_cast<int>(tribe.layers[i].size());
      best = std::max(best, size);
      if (size >= demand && pick < 0) pick = static_cast<int>(i);
    }
    if (pick < 0) throw InsufficientTribe(state.level, demand, best);
    LevelTrace tr;
    state = extend_family(state, tribe.layers[static_cast<size_t>(pick)], host, &tr);
    tr.layer_index = pick;
    if (traces) traces->push_back(std::move(tr));
  }

  for (const Embedding& r : state.rays) {
    if (r.length() < min_len)
      throw Error("packed dipath has length " + std::to_string(r.length()) +
                  " < requested minimum " + std::to_string(min_len) +
                  "; supply longer members");
    if (!xset.count(r.start())) throw Error("packed dipath starts outside X");
  }
  return std::move(state.rays);
}

std::vector<Embedding> pack_out_rays(const Digraph& D, const Tribe& tribe,
                                     const std::vector<VertexId>& X, int n, int min_len,
                                     std::vector<LevelTrace>* traces) {
  return pack_out_rays(GraphView(D), tribe, X, n, min_len, traces);
}

namespace {

std::vector<Embedding> assemble_out(const Digraph& D, const Tribe& tribe, int n, int min_len,
                                    std::vector<LevelTrace>* traces) {
  const RaySpec& pat = tribe.pattern;
  const int hat_arcs = static_cast<int>(pat.prefix().size());
  // The tail of a member starts just past the hat and its connecting arc.
  const int tail_from = hat_arcs == 0 ? 0 : hat_arcs + 1;
  const int tail_min = std::max(0, min_len - tail_from);

  std::exception_ptr pack_error;
  for (int max_layer = std::max(n, 2);; max_layer *= 2) {
    const Tribe base{tribe.layers, pat, hat_arcs};
    Tribe forked;
    try {
      forked = forked_subtribe(base, max_layer);
    } catch (const InsufficientThickness&) {
      if (pack_error) std::rethrow_exception(pack_error);
      throw;
    }

    std::vector<VertexId> Y;
    std::vector<std::vector<Embedding>> tail_layers;
    std::vector<VertexId> X;
    for (const auto& layer : forked.layers) {
      std::vector<Embedding> tails;
      for (const Embedding& mem : layer) {
        if (mem.length() < tail_from)
          throw Error("forked member too short to expose a tail");
        for (VertexId v : hat_vertices(mem, hat_arcs)) Y.push_back(v);
        Embedding t = mem.slice(tail_from, static_cast<int>(mem.vertices.size()) - 1);
        X.push_back(t.start());
        tails.push_back(std::move(t));
      }
      tail_layers.push_back(std::move(tails));
    }
    const Tribe tail_tribe{std::move(tail_layers), RaySpec({}, TailAllOut{}), 0};
    const GraphView host = GraphView(D).minus_vertices(Y);

    std::vector<LevelTrace> local;
    std::vector<Embedding> packed;
    try {
      packed = pack_out_rays(host, tail_tribe, X, n, tail_min, traces ? &local : nullptr);
    } catch (const InsufficientTribe&) {
      pack_error = std::current_exception();
      continue;
    }

    // Reattach: the packed dipath starting at a member's tail head inherits
    // that member's hat and connecting arc.
    std::unordered_map<VertexId, const Embedding*> by_tail_head;
    for (const auto& layer : forked.layers)
      for (const Embedding& mem : layer)
        by_tail_head.emplace(mem.vertices[static_cast<size_t>(tail_from)], &mem);

    std::vector<Embedding> out;
    const GraphView full(D);
    std::unordered_set<VertexId> used;
    for (const Embedding& t : packed) {
      const auto it = by_tail_head.find(t.start());
      if (it == by_tail_head.end()) throw Error("packed dipath starts at no member tail");
      Embedding e = hat_arcs == 0 ? t : concat(it->second->slice(0, tail_from), t);
      e.pattern = pat;
      if (e.length() < min_len) throw Error("assembled embedding shorter than min_len");
      validate_embedding(full, e);
      for (VertexId v : e.vertices)
        if (!used.insert(v).second) throw Error("assembled embeddings overlap");
      out.push_back(std::move(e));
    }
    if (traces) *traces = std::move(local);
    return out;
  }
}

}  // namespace

std::vector<Embedding> assemble_positive(const Digraph& D, const Tribe& tribe, int n,
                                         int min_len, std::vector<LevelTrace>* traces) {
  const Verdict v = classify(tribe.pattern);
  if (v.kind != Verdict::Kind::Ubiquitous)
    throw SpecKindError("Ubiquitous", to_string(v));

  if (std::holds_alternative<TailAllIn>(tribe.pattern.tail())) {
    // Duality: flip the host and the pattern, pack, flip back.
    const Digraph rd = reversed(D);
    Tribe rt{tribe.layers, reverse(tribe.pattern), tribe.hat_len};
    for (auto& layer : rt.layers)
      for (Embedding& mem : layer) {
        for (ArcStep& s : mem.steps) s.forward = !s.forward;
        if (mem.pattern) mem.pattern = reverse(*mem.pattern);
      }
    std::vector<Embedding> packed = assemble_out(rd, rt, n, min_len, traces);
    for (Embedding& e : packed) {
      for (ArcStep& s : e.steps) s.forward = !s.forward;
      e.pattern = tribe.pattern;
    }
    return packed;
  }
  return assemble_out(D, tribe, n, min_len, traces);
}

}  // namespace raylab
