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

#include <string>
#include <vector>

#include "raylab/digraph.hpp"
#include "raylab/ray_spec.hpp"
#include "raylab/tribe.hpp"

namespace raylab::corpus {

/// A random digraph with designated source and target sets, for comparing
/// the flow-based disjoint-dipath search against brute force.
struct MengerInstance {
  Digraph g;
  std::vector<VertexId> U;
  std::vector<VertexId> W;
};

/// Seeded random digraphs, <= 12 vertices, loop-free but with parallel arcs.
std::vector<MengerInstance> seeded_menger_corpus(int count, unsigned seed);

/// A generated spec together with the verdict its construction guarantees.
struct SpecCase {
  RaySpec spec{{}, TailAllOut{}};
  Verdict expected;
};

/// Seeded specs covering every tail kind, with random finite prefixes.
std::vector<SpecCase> classifier_corpus(int count, unsigned seed);

/// A host digraph, an out-dipath tribe inside it, allowed start vertices,
/// and the packing request the instance is engineered to satisfy.
struct PackingInstance {
  std::string name;
  Digraph host;
  Tribe tribe;
  std::vector<VertexId> X;
  int n = 0;
  int min_len = 0;
};

/// The engineered packing corpus: fully disjoint families, chained-overlap
/// families (each level's members continue the previous level's), and
/// star-overlap families that force a connecting-path reroute.
std::vector<PackingInstance> packing_corpus();

/// A host digraph with a tribe whose members follow a patterned pilot part.
struct ForkInstance {
  std::string name;
  Digraph host;
  Tribe tribe;
  int max_layer = 0;
};

/// Refinement corpus: disjoint and hat-sharing tribes, <= 12 members per
/// layer so tests can cross-check exhaustively.
std::vector<ForkInstance> fork_corpus();

}  // namespace raylab::corpus
