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

#include "raylab/digraph.hpp"
#include "raylab/embedding.hpp"
#include "raylab/errors.hpp"
#include "raylab/oracle.hpp"
#include "raylab/ray_spec.hpp"

using namespace raylab;
using oracle::Confinement;
using oracle::CopyCount;
using oracle::PeriodicityResult;
using oracle::SearchBudget;

namespace {

Digraph disjoint_alternating_rays(int count, int length) {
  const RaySpec alt = parse_ray_spec("prefix=;tail=period:+-");
  DigraphBuilder b;
  for (int i = 0; i < count; ++i) b.add_ray_prefix({i, 2}, alt, length);
  b.set_pattern(alt);
  return b.freeze();
}

}  // namespace

TEST_CASE("max_disjoint_copies finds one copy per disjoint host ray") {
  const Digraph g = disjoint_alternating_rays(3, 20);
  const RaySpec alt = parse_ray_spec("prefix=;tail=period:+-");
  const CopyCount r = oracle::max_disjoint_copies(g, alt, 10, 3);
  CHECK(r == CopyCount{CopyCount::Kind::AtLeast, 3});
}

TEST_CASE("max_disjoint_copies: a single dipath holds exactly one full copy") {
  const RaySpec out = parse_ray_spec("prefix=;tail=out");
  DigraphBuilder b;
  b.add_ray_prefix({0, 0}, out, 6);
  const Digraph g = b.freeze();
  CHECK(oracle::max_disjoint_copies(g, out, 6, 2) ==
        CopyCount{CopyCount::Kind::Exactly, 1});
}

TEST_CASE("max_disjoint_copies: candidates through a shared vertex collapse") {
  // Four length-2 out-dipaths, all through the middle vertex.
  DigraphBuilder b;
  b.add_vertices(5);
  b.add_arc(0, 1);
  b.add_arc(1, 2);
  b.add_arc(3, 1);
  b.add_arc(1, 4);
  const Digraph g = b.freeze();
  const RaySpec out = parse_ray_spec("prefix=;tail=out");
  CHECK(oracle::max_disjoint_copies(g, out, 2, 2) ==
        CopyCount{CopyCount::Kind::Exactly, 1});
}

TEST_CASE("max_disjoint_copies reports an exhausted budget instead of guessing") {
  const Digraph g = disjoint_alternating_rays(3, 20);
  const RaySpec alt = parse_ray_spec("prefix=;tail=period:+-");
  SearchBudget tiny;
  tiny.max_nodes = 1;
  const CopyCount r = oracle::max_disjoint_copies(g, alt, 10, 3, tiny);
  CHECK(r.kind == CopyCount::Kind::BudgetExceeded);
}

TEST_CASE("max_disjoint_copies is antitone in the prefix length") {
  const Digraph g = disjoint_alternating_rays(3, 8);
  const RaySpec alt = parse_ray_spec("prefix=;tail=period:+-");
  // No self-avoiding walk of length 10 fits in a 9-vertex component.
  CHECK(oracle::max_disjoint_copies(g, alt, 10, 3) ==
        CopyCount{CopyCount::Kind::Exactly, 0});
  CHECK(oracle::max_disjoint_copies(g, alt, 8, 3) ==
        CopyCount{CopyCount::Kind::AtLeast, 3});
  CHECK(oracle::max_disjoint_copies(g, alt, 4, 3) ==
        CopyCount{CopyCount::Kind::AtLeast, 3});
}

TEST_CASE("tail_confinement distinguishes single-constituent tails") {
  const RaySpec out = parse_ray_spec("prefix=;tail=out");
  DigraphBuilder b;
  b.add_ray_prefix({0, 0}, out, 6);  // originals 0..6, arcs 0..5
  b.add_ray_prefix({0, 1}, out, 6);  // originals 7..13, arcs 6..11
  b.identify(b.live(3), b.live(9));  // (0,0) position 3 == (0,1) position 2
  const Digraph g = b.freeze();

  Embedding walk;
  walk.vertices = {0, 1, 2, 3, 10, 11};
  walk.steps = {{0, true}, {1, true}, {2, true}, {8, true}, {9, true}};
  validate_embedding(GraphView(g), walk);

  SUBCASE("window inside the second constituent") {
    const Confinement c = oracle::tail_confinement(g, walk, 2);
    CHECK(c.confined);
    REQUIRE(c.label.has_value());
    CHECK(*c.label == RayLabel{0, 1});
    CHECK(c.labels_seen == std::vector<RayLabel>{{0, 1}});
  }
  SUBCASE("window spanning the crossing") {
    const Confinement c = oracle::tail_confinement(g, walk, 4);
    CHECK_FALSE(c.confined);
    CHECK(c.labels_seen == std::vector<RayLabel>{{0, 0}, {0, 1}});
  }
  SUBCASE("window bounds are enforced") {
    CHECK_THROWS_AS(oracle::tail_confinement(g, walk, 0), Error);
    CHECK_THROWS_AS(oracle::tail_confinement(g, walk, 6), Error);
  }
}

TEST_CASE("tail_confinement accepts descending runs along a constituent") {
  const RaySpec out = parse_ray_spec("prefix=;tail=out");
  DigraphBuilder b;
  b.add_ray_prefix({0, 0}, out, 6);
  const Digraph g = b.freeze();

  Embedding down;
  down.vertices = {6, 5, 4, 3};
  down.steps = {{5, false}, {4, false}, {3, false}};
  validate_embedding(GraphView(g), down);
  const Confinement c = oracle::tail_confinement(g, down, 3);
  CHECK(c.confined);
  REQUIRE(c.label.has_value());
  CHECK(*c.label == RayLabel{0, 0});
}

TEST_CASE("tail_confinement rejects unlabeled arcs and position jumps") {
  const RaySpec out = parse_ray_spec("prefix=;tail=out");
  DigraphBuilder b;
  b.add_ray_prefix({0, 0}, out, 6);
  const VertexId extra = b.add_vertex();  // original 7
  const int free_arc = b.add_arc(b.live(6), extra);
  const Digraph g = b.freeze();

  SUBCASE("a free arc in the window blocks confinement") {
    Embedding walk;
    walk.vertices = {5, 6, extra};
    walk.steps = {{5, true}, {free_arc, true}};
    validate_embedding(GraphView(g), walk);
    CHECK_FALSE(oracle::tail_confinement(g, walk, 2).confined);
  }
  SUBCASE("a skip within one constituent blocks confinement") {
    // Shortcut arc from position 1 to position 4 of the constituent.
    DigraphBuilder b2;
    b2.add_ray_prefix({0, 0}, out, 6);
    const int shortcut = b2.add_arc(b2.live(1), b2.live(4));
    const Digraph g2 = b2.freeze();
    Embedding walk;
    walk.vertices = {0, 1, 4, 5};
    walk.steps = {{0, true}, {shortcut, true}, {4, true}};
    validate_embedding(GraphView(g2), walk);
    CHECK_FALSE(oracle::tail_confinement(g2, walk, 3).confined);
  }
  SUBCASE("a direction reversal inside the window blocks confinement") {
    Embedding bounce;
    bounce.vertices = {4, 5, 6, 5};
    // Not self-avoiding, so skip validation; the confinement scan only
    // inspects the step sequence.
    bounce.steps = {{4, true}, {5, true}, {5, false}};
    CHECK_FALSE(oracle::tail_confinement(g, bounce, 3).confined);
  }
}

TEST_CASE("brute_max_disjoint_dipaths on hand-checkable gadgets") {
  SUBCASE("two parallel dipaths") {
    DigraphBuilder b;
    b.add_vertices(6);
    b.add_arc(0, 1);
    b.add_arc(1, 2);
    b.add_arc(3, 4);
    b.add_arc(4, 5);
    const Digraph g = b.freeze();
    CHECK(oracle::brute_max_disjoint_dipaths(g, {0, 3}, {2, 5}) == 2);
  }
  SUBCASE("a shared middle vertex caps the family at one") {
    DigraphBuilder b;
    b.add_vertices(5);
    b.add_arc(0, 2);
    b.add_arc(1, 2);
    b.add_arc(2, 3);
    b.add_arc(2, 4);
    const Digraph g = b.freeze();
    CHECK(oracle::brute_max_disjoint_dipaths(g, {0, 1}, {3, 4}) == 1);
  }
  SUBCASE("arcs pointing the wrong way do not count") {
    DigraphBuilder b;
    b.add_vertices(3);
    b.add_arc(1, 0);
    b.add_arc(1, 2);
    const Digraph g = b.freeze();
    CHECK(oracle::brute_max_disjoint_dipaths(g, {0}, {2}) == 0);
  }
  SUBCASE("a vertex in both sides yields a zero-length path") {
    DigraphBuilder b;
    b.add_vertices(2);
    b.add_arc(0, 1);
    const Digraph g = b.freeze();
    CHECK(oracle::brute_max_disjoint_dipaths(g, {0}, {0, 1}) == 1);
  }
}

TEST_CASE("brute_max_disjoint_dipaths throws when its budget is exhausted") {
  DigraphBuilder b;
  b.add_vertices(6);
  b.add_arc(0, 1);
  b.add_arc(1, 2);
  b.add_arc(3, 4);
  b.add_arc(4, 5);
  const Digraph g = b.freeze();
  SearchBudget tiny;
  tiny.max_nodes = 1;
  try {
    oracle::brute_max_disjoint_dipaths(g, {0, 3}, {2, 5}, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.max_nodes == 1);
    CHECK(e.best >= 0);
    CHECK(e.best <= 2);
  }
}

TEST_CASE("periodicity_probe: frozen witnesses and an aperiodic word") {
  const PeriodicityResult alt =
      oracle::periodicity_probe(parse_ray_spec("prefix=;tail=period:+-"), 4, 100);
  CHECK(alt == PeriodicityResult{true, 0, 2});

  const PeriodicityResult allout =
      oracle::periodicity_probe(parse_ray_spec("prefix=;tail=out"), 2, 10);
  CHECK(allout == PeriodicityResult{true, 0, 1});

  const PeriodicityResult p21 =
      oracle::periodicity_probe(parse_ray_spec("prefix=;tail=period:++-"), 4, 100);
  CHECK(p21 == PeriodicityResult{true, 0, 3});

  const PeriodicityResult grow =
      oracle::periodicity_probe(parse_ray_spec("prefix=;tail=grow:1,1,+"), 30, 100);
  CHECK_FALSE(grow.periodic);
  CHECK(grow.k1 == -1);
  CHECK(grow.k2 == -1);
}

TEST_CASE("periodicity_probe windows too short to discriminate still witness") {
  // Over a window of 1 arc, the word ++- looks periodic already at shift 1
  // only if arc 0 and arc 1 agree; they do (both Out).
  const PeriodicityResult r =
      oracle::periodicity_probe(parse_ray_spec("prefix=;tail=period:++-"), 4, 1);
  CHECK(r == PeriodicityResult{true, 0, 1});
}
