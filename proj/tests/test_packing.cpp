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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "raylab/corpus.hpp"
#include "raylab/errors.hpp"
#include "raylab/packing.hpp"

using namespace raylab;

namespace {

/// n disjoint out-dipaths of `len` arcs in one host.
std::pair<Digraph, std::vector<Embedding>> rails(int count, int len) {
  DigraphBuilder b;
  std::vector<Embedding> members;
  for (int r = 0; r < count; ++r) {
    const auto vs = b.add_vertices(len + 1);
    Embedding e;
    e.vertices = vs;
    for (int k = 0; k < len; ++k) e.steps.push_back({b.add_arc(vs[k], vs[k + 1]), true});
    members.push_back(std::move(e));
  }
  return {b.freeze(), std::move(members)};
}

void check_packing(const Digraph& host, const std::vector<Embedding>& packed,
                   const std::vector<VertexId>& X, int n, int min_len) {
  REQUIRE(static_cast<int>(packed.size()) == n);
  const std::set<VertexId> xs(X.begin(), X.end());
  std::unordered_set<VertexId> used;
  for (const Embedding& r : packed) {
    CHECK(r.length() >= min_len);
    CHECK(xs.count(r.start()));
    for (const ArcStep& s : r.steps) CHECK(s.forward);
    validate_embedding(GraphView(host), r);
    for (VertexId v : r.vertices) CHECK(used.insert(v).second);
  }
}

void check_guards(const std::vector<LevelTrace>& traces, int n) {
  REQUIRE(static_cast<int>(traces.size()) == n);
  for (const LevelTrace& tr : traces) {
    const int l = tr.level - 1;  // level before the step
    CHECK(tr.layer_size - tr.deleted_prefix >= l * l + 1);
    CHECK(tr.f_prime_size >= (l - tr.adopted) * l + 1);
    CHECK(tr.adopted + tr.j_size == l);
  }
}

}  // namespace

TEST_CASE("extension_demand counts marker prefixes plus level squared plus one") {
  CHECK(extension_demand(FamilyState{}) == 1);
  auto [g, members] = rails(2, 5);
  FamilyState st{2, {members[0], members[1]}, {1, 0}};
  // Prefix union {m0[0], m0[1], m1[0]} has 3 vertices; 3 + 4 + 1.
  CHECK(extension_demand(st) == 8);
}

TEST_CASE("one extension step: seed, adopt, and draw a fresh dipath") {
  auto [g, members] = rails(3, 6);
  const std::vector<VertexId> X{members[0].start(), members[1].start(),
                                members[2].start()};
  const RaySpec out = parse_ray_spec("prefix=;tail=out");
  const Tribe t{{members}, out, 0};
  std::vector<LevelTrace> traces;
  const auto packed = pack_out_rays(g, t, X, 2, 4, &traces);
  check_packing(g, packed, X, 2, 4);
  check_guards(traces, 2);
  // Level 1 -> 2: the seeded ray is itself a layer member, so it is dropped
  // from the pool; the other two members survive; the ray meets none of them
  // and is adopted with an advanced marker.
  CHECK(traces[1].layer_size == 3);
  CHECK(traces[1].deleted_prefix == 1);
  CHECK(traces[1].adopted == 1);
  CHECK(traces[1].adopted_indices == std::vector<int>{0});
  CHECK(traces[1].j_size == 0);
  CHECK(traces[1].f_prime_size == 2);
}

TEST_CASE("packing fails loudly when no layer meets the demand") {
  auto [g, members] = rails(2, 6);
  const std::vector<VertexId> X{members[0].start(), members[1].start()};
  const RaySpec out = parse_ray_spec("prefix=;tail=out");
  const Tribe t{{members}, out, 0};
  CHECK_THROWS_AS(pack_out_rays(g, t, X, 2, 4), InsufficientTribe);
}

TEST_CASE("packed dipaths respect the minimum length") {
  auto [g, members] = rails(3, 6);
  const std::vector<VertexId> X{members[0].start(), members[1].start(),
                                members[2].start()};
  const RaySpec out = parse_ray_spec("prefix=;tail=out");
  const Tribe t{{members}, out, 0};
  CHECK_THROWS_AS(pack_out_rays(g, t, X, 2, 7), Error);  // members have 6 arcs
}

TEST_CASE("engineered corpus: fully disjoint layers") {
  const auto all = corpus::packing_corpus();
  for (const auto& inst : all) {
    if (inst.name.rfind("disjoint-", 0) != 0) continue;
    CAPTURE(inst.name);
    std::vector<LevelTrace> traces;
    const auto packed =
        pack_out_rays(inst.host, inst.tribe, inst.X, inst.n, inst.min_len, &traces);
    check_packing(inst.host, packed, inst.X, inst.n, inst.min_len);
    check_guards(traces, inst.n);
    for (const LevelTrace& tr : traces) CHECK(tr.j_size == 0);  // never rerouted
  }
}

TEST_CASE("engineered corpus: chained layers adopt every ray") {
  const auto all = corpus::packing_corpus();
  for (const auto& inst : all) {
    if (inst.name.rfind("chained-", 0) != 0) continue;
    CAPTURE(inst.name);
    std::vector<LevelTrace> traces;
    const auto packed =
        pack_out_rays(inst.host, inst.tribe, inst.X, inst.n, inst.min_len, &traces);
    check_packing(inst.host, packed, inst.X, inst.n, inst.min_len);
    check_guards(traces, inst.n);
    for (const LevelTrace& tr : traces) {
      const int l = tr.level - 1;
      // Layer sizes are engineered to match the demand exactly, so the step
      // at level l draws from layer l and adopts every existing ray.
      CHECK(tr.layer_index == l);
      CHECK(tr.adopted == l);
      CHECK(tr.j_size == 0);
      CHECK(tr.deleted_prefix == 0);
    }
  }
}

TEST_CASE("engineered corpus: star overlap forces one reroute") {
  const auto all = corpus::packing_corpus();
  int stars = 0;
  for (const auto& inst : all) {
    if (inst.name.rfind("star-", 0) != 0) continue;
    ++stars;
    CAPTURE(inst.name);
    std::vector<LevelTrace> traces;
    const auto packed =
        pack_out_rays(inst.host, inst.tribe, inst.X, inst.n, inst.min_len, &traces);
    check_packing(inst.host, packed, inst.X, inst.n, inst.min_len);
    check_guards(traces, inst.n);
    REQUIRE(inst.n == 2);
    CHECK(traces[1].adopted == 0);
    CHECK(traces[1].j_size == 1);
    CHECK(traces[1].cut_size == 1);
  }
  CHECK(stars == 5);
}

TEST_CASE("assemble_positive reattaches hats onto packed tails") {
  const auto instances = corpus::fork_corpus();
  const auto it = std::find_if(instances.begin(), instances.end(), [](const auto& i) {
    return i.tribe.hat_len == 2 && i.name.find("shared") != std::string::npos;
  });
  REQUIRE(it != instances.end());
  const int n = 2;
  const int min_len = it->tribe.hat_len + 3;
  std::vector<LevelTrace> traces;
  const auto packed = assemble_positive(it->host, it->tribe, n, min_len, &traces);
  REQUIRE(static_cast<int>(packed.size()) == n);
  CHECK_FALSE(traces.empty());
  std::unordered_set<VertexId> used;
  for (const Embedding& e : packed) {
    CHECK(e.length() >= min_len);
    validate_embedding(GraphView(it->host), e);
    for (int i = 0; i < e.length(); ++i)
      CHECK(e.orientation_at(i) == it->tribe.pattern.orientation_at(i));
    for (VertexId v : e.vertices) CHECK(used.insert(v).second);
  }
}

TEST_CASE("assemble_positive handles in-oriented tails by reversal") {
  // Rails built against the arc direction: vertex walks go 0,1,2,... but
  // every arc points backwards, realizing the all-In pattern.
  DigraphBuilder b;
  std::vector<Embedding> members;
  for (int r = 0; r < 16; ++r) {
    const auto vs = b.add_vertices(9);
    Embedding e;
    e.vertices = vs;
    for (int k = 0; k < 8; ++k) e.steps.push_back({b.add_arc(vs[k + 1], vs[k]), false});
    members.push_back(std::move(e));
  }
  const Digraph g = b.freeze();
  const RaySpec in_spec = parse_ray_spec("prefix=;tail=in");
  std::vector<std::vector<Embedding>> layers(4);
  for (size_t i = 0; i < members.size(); ++i) layers[i / 4].push_back(members[i]);
  const Tribe t{layers, in_spec, 0};
  const auto packed = assemble_positive(g, t, 2, 5);
  REQUIRE(packed.size() == 2);
  std::unordered_set<VertexId> used;
  for (const Embedding& e : packed) {
    CHECK(e.length() >= 5);
    validate_embedding(GraphView(g), e);
    for (const ArcStep& s : e.steps) CHECK_FALSE(s.forward);
    for (VertexId v : e.vertices) CHECK(used.insert(v).second);
  }
}

TEST_CASE("assemble_positive refuses non-ubiquitous patterns") {
  auto [g, members] = rails(3, 6);
  const Tribe t{{members}, parse_ray_spec("prefix=;tail=period:+-"), 0};
  CHECK_THROWS_AS(assemble_positive(g, t, 1, 1), SpecKindError);
}
