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

#include <array>
#include <string>
#include <vector>

#include "raylab/digraph.hpp"
#include "raylab/ray_spec.hpp"

namespace raylab {

/// One element of the pair sequence driving the identifications: two
/// constituent labels with strictly increasing second coordinate.
struct JEntry {
  RayLabel first;   // (n0, m0)
  RayLabel second;  // (n1, m1), m0 < m1
  bool operator==(const JEntry&) const = default;
};

/// Deterministic enumeration: round r emits, in lexicographic order of
/// (n0, m0, n1, m1), every valid pair with all coordinates <= r.  Each pair
/// therefore recurs in every round from max-coordinate on.
struct JEnumeration {
  int rounds = 0;
  std::vector<JEntry> emitted;
};

JEnumeration enumerate_J(int rounds);

/// One executed identification step with every witness the checker needs.
struct PlanEntry {
  int step = 0;
  RayLabel g0_label;
  int g0_pos = -1;  ///< arc-count position of g0 along its constituent
  RayLabel g1_label;
  int g1_pos = -1;

  // Witnesses of the bounded construction: the first arcs of the length-c
  // out-runs ending at g0 / starting at g1.
  int g0_phase_first = -1;
  int g1_phase_first = -1;

  // Witnesses of the unbounded construction.
  int x0 = -1, z0 = -1;          ///< scout and safety positions on the g0 side
  int x1 = -1, z1 = -1;          ///< same on the g1 side
  int m0_first = -1, m0_len = -1;  ///< host phase of g0 (first arc, length)
  int m1_first = -1, m1_len = -1;  ///< host phase of g1
  std::array<int, 4> distances{{-1, -1, -1, -1}};  ///< g to phase endvertices

  bool operator==(const PlanEntry&) const = default;
};

/// Replayable record of a counterexample construction.
struct IdentificationPlan {
  std::string kind;       ///< "bounded" | "unbounded"
  std::string spec_text;  ///< the input spec, before any reversal
  bool reversed = false;  ///< true iff the host realizes the reversed spec
  int c = 0;              ///< bounded: the critical phase length
  int max_m = 0;
  int length = 0;  ///< per-constituent arc truncation
  int requested_steps = 0;
  int completed_steps = 0;
  std::string stop_reason;  ///< empty when all requested steps completed
  std::vector<PlanEntry> entries;

  bool operator==(const IdentificationPlan&) const = default;
};

struct BuildResult {
  Digraph digraph;
  IdentificationPlan plan;
};

/// Hosts for patterns with a bounded phase-length sequence: constituents
/// R(n,m) for n <= m <= max_m, truncated to `length` arcs, identified at
/// turn pairs chosen per the two boundary rules (incoming side starts a
/// length-c out-run, outgoing side ends one strictly deeper).  Stops early
/// (never emitting a partial entry) when the truncation runs out of
/// admissible turns.
BuildResult build_bounded(const RaySpec& spec, int max_m, int length, int steps);

/// Hosts for patterns with an unbounded phase-length sequence: each step
/// scouts past every path-reachable prefix (x), pushes past all misleading
/// path lengths (z), and glues a non-turn interior vertex of a long phase to
/// one of an even longer phase so the four endvertex distances are pairwise
/// distinct.
BuildResult build_unbounded(const RaySpec& spec, int max_m, int length, int steps);

struct CheckMode {
  enum class Kind { Bounded, Unbounded };
  Kind kind = Kind::Bounded;
  int c = 0;  ///< bounded only
};

struct CheckReport {
  int entries_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Independent re-verification of a plan against its digraph: recomputes
/// every positional condition from the stored pattern and constituent
/// tables, and (unbounded) exhaustively re-enumerates the pattern-matching
/// paths to each identification vertex in the appropriate construction
/// stage.
CheckReport check_plan(const Digraph& D, const IdentificationPlan& plan,
                       const CheckMode& mode);

}  // namespace raylab
