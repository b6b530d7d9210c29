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

#include "raylab/counterexample.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "raylab/errors.hpp"
#include "raylab/search.hpp"

namespace raylab {

namespace {

std::pair<int, int> key(const RayLabel& l) { return {l.n, l.m}; }

/// Earliest position > last at which a maximal out-run of exactly c arcs
/// begins, with the closing in-arc still inside the truncation; -1 if none.
int find_incoming_turn(const RaySpec& s, int length, int last, int c) {
  for (int p = std::max(last + 1, 1); p + c <= length - 1; ++p) {
    if (s.orientation_at(p - 1) != Orientation::In) continue;
    bool run = true;
    for (int a = p; a < p + c; ++a)
      if (s.orientation_at(a) != Orientation::Out) {
        run = false;
        break;
      }
    if (!run) continue;
    if (s.orientation_at(p + c) != Orientation::In) continue;
    return p;
  }
  return -1;
}

/// Earliest position > last at which a maximal out-run of exactly c arcs
/// ends (the in-arc at the position itself included); -1 if none.
int find_outgoing_turn(const RaySpec& s, int length, int last, int c) {
  for (int p = std::max(last + 1, c); p <= length - 1; ++p) {
    if (s.orientation_at(p) != Orientation::In) continue;
    bool run = true;
    for (int a = p - c; a < p; ++a)
      if (s.orientation_at(a) != Orientation::Out) {
        run = false;
        break;
      }
    if (!run) continue;
    if (p - c > 0 && s.orientation_at(p - c - 1) != Orientation::In) continue;
    return p;
  }
  return -1;
}

/// The valid pairs, in emission order, filtered to the available constituents
/// and cut to the requested number of steps.
std::vector<JEntry> plan_sequence(int max_m, int steps) {
  std::vector<JEntry> seq;
  if (steps <= 0 || max_m < 1) return seq;
  const JEnumeration all = enumerate_J(max_m + steps);
  for (const JEntry& e : all.emitted) {
    if (e.second.m > max_m) continue;
    seq.push_back(e);
    if (static_cast<int>(seq.size()) == steps) break;
  }
  return seq;
}

/// Lays down one truncated constituent per label, n <= m <= max_m, in
/// ascending (m, n) order so original vertex ids enumerate creation order.
std::map<std::pair<int, int>, VertexId> lay_constituents(DigraphBuilder& b,
                                                         const RaySpec& used,
                                                         int max_m, int length) {
  std::map<std::pair<int, int>, VertexId> base;
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= m; ++n) {
      base[{n, m}] = b.vertex_count();
      b.add_ray_prefix({n, m}, used, length);
    }
  b.set_pattern(used);
  return base;
}

std::vector<PhaseView> complete_phases(const RaySpec& s, int upto) {
  std::vector<PhaseView> out = phases(s, upto);
  while (!out.empty() && out.back().truncated) out.pop_back();
  return out;
}

struct SideScout {
  int x = 0;
  int z = 0;
};

/// Scouts one side of an unbounded step: x is the first position past every
/// complete phase holding a marked vertex of this constituent; z pushes x far
/// enough that any pattern-matching path arriving at x with the wrong length
/// is forced off the pattern before z.
std::optional<SideScout> scout_side(const Digraph& cur, const RaySpec& used,
                                    const std::vector<PhaseView>& ph, int length,
                                    VertexId label_base,
                                    const std::set<VertexId>& marked,
                                    int source_count, std::string* reason) {
  const int complete_arcs = ph.empty() ? 0 : ph.back().last_arc + 1;
  const bool has_fragment = complete_arcs < length;

  int x = 0;
  for (VertexId o : marked) {
    if (o < label_base || o > label_base + length) continue;
    const int p = o - label_base;
    if (has_fragment && p >= complete_arcs) {
      *reason = "a marked vertex reaches the truncated tail of its constituent";
      return std::nullopt;
    }
    for (const PhaseView& f : ph)
      if (f.first_arc <= p && p <= f.last_arc + 1) x = std::max(x, f.last_arc + 2);
  }
  if (x > length) {
    *reason = "scout position beyond the truncation";
    return std::nullopt;
  }

  const VertexId xv = cur.find(label_base + x);
  std::set<VertexId> sources;
  for (VertexId k = 0; k < source_count; ++k) sources.insert(cur.find(k));

  std::set<int> arrival_lengths;
  const GraphView view(cur);
  for (VertexId u : sources) {
    if (u == xv) {
      arrival_lengths.insert(0);
      continue;
    }
    for (const Embedding& q : enumerate_paths(view, u, xv)) {
      if (!matches_window(used, 0, q.orientation_word())) continue;
      arrival_lengths.insert(static_cast<int>(q.length()));
    }
  }

  int z = x;
  for (int ql : arrival_lengths) {
    if (ql == x) continue;
    int t = 0;
    while (used.orientation_at(ql + t) == used.orientation_at(x + t)) {
      ++t;
      if (x + t + 1 > length) break;  // exceeds the truncation either way
    }
    z = std::max(z, x + t + 1);
  }
  if (z > length) {
    *reason = "safety position beyond the truncation";
    return std::nullopt;
  }
  return SideScout{x, z};
}

const PhaseView* pick_phase(const std::vector<PhaseView>& ph, int min_first,
                            int min_len) {
  for (const PhaseView& f : ph)
    if (f.first_arc >= min_first && f.length >= min_len) return &f;
  return nullptr;
}

}  // namespace

JEnumeration enumerate_J(int rounds) {
  JEnumeration out;
  out.rounds = rounds;
  for (int r = 1; r <= rounds; ++r)
    for (int n0 = 0; n0 <= r; ++n0)
      for (int m0 = n0; m0 <= r; ++m0)
        for (int n1 = 0; n1 <= r; ++n1)
          for (int m1 = std::max(n1, m0 + 1); m1 <= r; ++m1)
            out.emitted.push_back({{n0, m0}, {n1, m1}});
  return out;
}

BuildResult build_bounded(const RaySpec& spec, int max_m, int length, int steps) {
  if (max_m < 0 || length < 1 || steps < 0)
    throw Error("build_bounded: max_m, length and steps must be non-negative (length positive)");
  const Verdict v = classify(spec);
  if (v.kind != Verdict::Kind::NonUbiquitous ||
      v.reason != Verdict::Reason::BoundedRepSeq)
    throw SpecKindError("NonUbiquitous (bounded)", to_string(v));
  const int c = v.c;

  // Work with the reverse when the critical length c never occurs on an
  // out-run of the tail; the finished host then witnesses the reverse, which
  // is equivalent for our purposes.
  RaySpec used = spec;
  bool reversed_flag = false;
  {
    const auto& per = std::get<TailPeriodic>(spec.tail());
    bool has_out_c = false;
    for (std::size_t k = 0; k < per.lengths.size(); ++k) {
      const Orientation o = (k % 2 == 0) ? per.first : flip(per.first);
      if (per.lengths[k] == c && o == Orientation::Out) {
        has_out_c = true;
        break;
      }
    }
    if (!has_out_c) {
      used = reverse(spec);
      reversed_flag = true;
    }
  }

  DigraphBuilder b;
  std::map<std::pair<int, int>, VertexId> base = lay_constituents(b, used, max_m, length);

  IdentificationPlan plan;
  plan.kind = "bounded";
  plan.spec_text = to_string(spec);
  plan.reversed = reversed_flag;
  plan.c = c;
  plan.max_m = max_m;
  plan.length = length;
  plan.requested_steps = steps;

  const std::vector<JEntry> seq = plan_sequence(max_m, steps);
  std::map<std::pair<int, int>, int> deepest;  // label -> deepest position used

  for (int i = 0; i < steps; ++i) {
    if (i >= static_cast<int>(seq.size())) {
      plan.stop_reason = "no constituent pair available within max_m";
      break;
    }
    const JEntry& e = seq[static_cast<std::size_t>(i)];
    const auto k0 = key(e.first);
    const auto k1 = key(e.second);
    const int last0 = deepest.count(k0) ? deepest.at(k0) : 0;
    const int last1 = deepest.count(k1) ? deepest.at(k1) : 0;

    const int p1 = find_incoming_turn(used, length, last1, c);
    if (p1 < 0) {
      plan.stop_reason = "no admissible incoming-side turn within the truncation";
      break;
    }
    const int p0 = find_outgoing_turn(used, length, std::max(last0, p1), c);
    if (p0 < 0) {
      plan.stop_reason = "no admissible outgoing-side turn within the truncation";
      break;
    }

    b.identify(b.live(base.at(k0) + p0), b.live(base.at(k1) + p1));

    PlanEntry entry;
    entry.step = i;
    entry.g0_label = e.first;
    entry.g0_pos = p0;
    entry.g1_label = e.second;
    entry.g1_pos = p1;
    entry.g0_phase_first = p0 - c;
    entry.g1_phase_first = p1;
    plan.entries.push_back(entry);
    plan.completed_steps = i + 1;
    deepest[k0] = p0;
    deepest[k1] = std::max(last1, p1);
  }

  return {b.freeze(), std::move(plan)};
}

BuildResult build_unbounded(const RaySpec& spec, int max_m, int length, int steps) {
  if (max_m < 0 || length < 1 || steps < 0)
    throw Error("build_unbounded: max_m, length and steps must be non-negative (length positive)");
  const Verdict v = classify(spec);
  if (v.kind != Verdict::Kind::NonUbiquitous ||
      v.reason != Verdict::Reason::UnboundedRepSeq)
    throw SpecKindError("NonUbiquitous (unbounded)", to_string(v));
  const RaySpec& used = spec;

  DigraphBuilder b;
  std::map<std::pair<int, int>, VertexId> base = lay_constituents(b, used, max_m, length);

  IdentificationPlan plan;
  plan.kind = "unbounded";
  plan.spec_text = to_string(spec);
  plan.max_m = max_m;
  plan.length = length;
  plan.requested_steps = steps;

  const std::vector<JEntry> seq = plan_sequence(max_m, steps);
  const std::vector<PhaseView> ph = complete_phases(used, length);
  std::vector<VertexId> g_originals;

  for (int i = 0; i < steps; ++i) {
    if (i >= static_cast<int>(seq.size())) {
      plan.stop_reason = "no constituent pair available within max_m";
      break;
    }
    const JEntry& e = seq[static_cast<std::size_t>(i)];
    const Digraph cur = b.snapshot();

    std::set<VertexId> marked(g_originals.begin(), g_originals.end());
    for (VertexId j = 0; j <= i; ++j) marked.insert(j);

    std::string reason;
    const auto s0 = scout_side(cur, used, ph, length, base.at(key(e.first)), marked,
                               i + 1, &reason);
    if (!s0) {
      plan.stop_reason = reason + " (outgoing side)";
      break;
    }
    const auto s1 = scout_side(cur, used, ph, length, base.at(key(e.second)), marked,
                               i + 1, &reason);
    if (!s1) {
      plan.stop_reason = reason + " (incoming side)";
      break;
    }

    const PhaseView* M0 = pick_phase(ph, s0->z, 3);
    if (M0 == nullptr) {
      plan.stop_reason = "no phase of length >= 3 beyond the outgoing safety position";
      break;
    }
    const PhaseView* M1 = pick_phase(ph, s1->z, 2 * M0->length + 1);
    if (M1 == nullptr) {
      plan.stop_reason = "no phase of length >= 2*|M0|+1 beyond the incoming safety position";
      break;
    }

    const int p0 = M0->first_arc + 1;
    const int p1 = M1->first_arc + M0->length;
    const VertexId o0 = base.at(key(e.first)) + p0;
    const VertexId o1 = base.at(key(e.second)) + p1;
    b.identify(b.live(o0), b.live(o1));
    g_originals.push_back(o0);
    g_originals.push_back(o1);

    PlanEntry entry;
    entry.step = i;
    entry.g0_label = e.first;
    entry.g0_pos = p0;
    entry.g1_label = e.second;
    entry.g1_pos = p1;
    entry.x0 = s0->x;
    entry.z0 = s0->z;
    entry.x1 = s1->x;
    entry.z1 = s1->z;
    entry.m0_first = M0->first_arc;
    entry.m0_len = M0->length;
    entry.m1_first = M1->first_arc;
    entry.m1_len = M1->length;
    entry.distances = {1, M0->length - 1, M0->length, M1->length - M0->length};
    plan.entries.push_back(entry);
    plan.completed_steps = i + 1;
  }

  return {b.freeze(), std::move(plan)};
}

namespace {

void check_bounded_entry(const RaySpec& pat, int length, int c, const PlanEntry& e,
                         std::vector<std::string>* out) {
  auto fail = [&](const std::string& msg) {
    out->push_back("entry " + std::to_string(e.step) + ": " + msg);
  };
  const int p0 = e.g0_pos;
  const int p1 = e.g1_pos;
  if (p1 < 1 || p1 + c > length - 1) {
    fail("incoming-side position out of range");
    return;
  }
  if (p0 < c || p0 > length - 1) {
    fail("outgoing-side position out of range");
    return;
  }
  if (pat.orientation_at(p1 - 1) != Orientation::In)
    fail("incoming-side vertex is not a turn (preceding arc points away)");
  for (int a = p1; a < p1 + c; ++a)
    if (pat.orientation_at(a) != Orientation::Out) {
      fail("incoming-side vertex does not start an out-run of the critical length");
      break;
    }
  if (pat.orientation_at(p1 + c) != Orientation::In)
    fail("incoming-side out-run is longer than the critical length");
  if (pat.orientation_at(p0) != Orientation::In)
    fail("outgoing-side vertex is not a turn (following arc points away)");
  for (int a = p0 - c; a < p0; ++a)
    if (pat.orientation_at(a) != Orientation::Out) {
      fail("outgoing-side vertex does not end an out-run of the critical length");
      break;
    }
  if (p0 - c > 0 && pat.orientation_at(p0 - c - 1) != Orientation::In)
    fail("outgoing-side out-run is longer than the critical length");
  if (p0 <= p1) fail("outgoing-side initial segment is not strictly longer");
  if (e.g0_phase_first != p0 - c) fail("outgoing-side run witness disagrees");
  if (e.g1_phase_first != p1) fail("incoming-side run witness disagrees");
  if (!(e.g0_label.m < e.g1_label.m))
    fail("pair does not increase the second coordinate");
  if (e.g0_label.n > e.g0_label.m || e.g1_label.n > e.g1_label.m)
    fail("constituent label out of range");
}

void check_unbounded_entry(const Digraph& D, const RaySpec& pat,
                           const std::vector<PhaseView>& ph,
                           const IdentificationPlan& plan, std::size_t idx,
                           std::vector<std::string>* out) {
  const PlanEntry& e = plan.entries[idx];
  auto fail = [&](const std::string& msg) {
    out->push_back("entry " + std::to_string(e.step) + ": " + msg);
  };

  // Host phases, recomputed: each identified vertex must be strictly interior.
  const PhaseView* f0 = nullptr;
  const PhaseView* f1 = nullptr;
  for (const PhaseView& f : ph) {
    if (f.first_arc < e.g0_pos && e.g0_pos < f.last_arc + 1) f0 = &f;
    if (f.first_arc < e.g1_pos && e.g1_pos < f.last_arc + 1) f1 = &f;
  }
  if (f0 == nullptr || f1 == nullptr) {
    fail("identified vertex sits on a phase boundary (it is a turn)");
    return;
  }
  if (f0->first_arc != e.m0_first || f0->length != e.m0_len)
    fail("outgoing-side host phase witness disagrees");
  if (f1->first_arc != e.m1_first || f1->length != e.m1_len)
    fail("incoming-side host phase witness disagrees");

  // Four endvertex distances, recomputed, pairwise distinct.
  const std::array<int, 4> d = {e.g0_pos - f0->first_arc, f0->last_arc + 1 - e.g0_pos,
                                e.g1_pos - f1->first_arc, f1->last_arc + 1 - e.g1_pos};
  for (int a = 0; a < 4; ++a)
    for (int bq = a + 1; bq < 4; ++bq)
      if (d[static_cast<std::size_t>(a)] == d[static_cast<std::size_t>(bq)])
        fail("two of the four endvertex distances coincide");
  if (d != e.distances) fail("distance witnesses disagree");

  // No other identified vertex may lie inside either host phase.
  for (std::size_t j = 0; j < plan.entries.size(); ++j) {
    if (j == idx) continue;
    const PlanEntry& o = plan.entries[j];
    const auto inside = [&](const RayLabel& l, int pos, const RayLabel& host,
                            const PhaseView& f) {
      return l == host && f.first_arc <= pos && pos <= f.last_arc + 1;
    };
    if (inside(o.g0_label, o.g0_pos, e.g0_label, *f0) ||
        inside(o.g1_label, o.g1_pos, e.g0_label, *f0))
      fail("another identified vertex lies inside the outgoing-side host phase");
    if (inside(o.g0_label, o.g0_pos, e.g1_label, *f1) ||
        inside(o.g1_label, o.g1_pos, e.g1_label, *f1))
      fail("another identified vertex lies inside the incoming-side host phase");
  }

  // Exhaustive arrival-length check in the stage-i host: every pattern-matching
  // path from a low-numbered vertex to the identified vertex has one of the two
  // designated lengths.
  const Digraph Di = D.at_step(e.step);
  const VertexId o0 = D.ray_original(e.g0_label, e.g0_pos);
  const VertexId target = Di.find(o0);
  const GraphView view(Di);
  std::set<VertexId> sources;
  for (VertexId k = 0; k <= e.step; ++k) sources.insert(Di.find(k));
  for (VertexId u : sources) {
    if (u == target) {
      fail("a low-numbered vertex coincides with the identified vertex");
      continue;
    }
    for (const Embedding& q : enumerate_paths(view, u, target)) {
      if (!matches_window(pat, 0, q.orientation_word())) continue;
      const int len = static_cast<int>(q.length());
      if (len != e.g0_pos && len != e.g1_pos)
        fail("a pattern-matching path arrives with length " + std::to_string(len) +
             ", expected " + std::to_string(e.g0_pos) + " or " +
             std::to_string(e.g1_pos));
    }
  }
}

}  // namespace

CheckReport check_plan(const Digraph& D, const IdentificationPlan& plan,
                       const CheckMode& mode) {
  CheckReport rep;
  if (!D.pattern()) {
    rep.violations.push_back("digraph carries no pattern");
    return rep;
  }
  const RaySpec& pat = *D.pattern();

  if (mode.kind == CheckMode::Kind::Bounded && mode.c != plan.c)
    rep.violations.push_back("critical length disagrees with the plan");
  if ((mode.kind == CheckMode::Kind::Bounded) != (plan.kind == "bounded"))
    rep.violations.push_back("mode disagrees with the plan kind");
  if (plan.completed_steps != static_cast<int>(plan.entries.size()))
    rep.violations.push_back("completed step count disagrees with the entry list");
  if (plan.completed_steps < plan.requested_steps && plan.stop_reason.empty())
    rep.violations.push_back("plan stopped early without a recorded reason");

  const auto& ids = D.identifications();
  if (ids.size() != plan.entries.size())
    rep.violations.push_back("identification count disagrees with the plan");

  // Identified originals must match the plan pairwise, be globally distinct,
  // and never merge two vertices of the same second coordinate.
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    const PlanEntry& e = plan.entries[i];
    VertexId o0 = -1;
    VertexId o1 = -1;
    try {
      o0 = D.ray_original(e.g0_label, e.g0_pos);
      o1 = D.ray_original(e.g1_label, e.g1_pos);
    } catch (const Error&) {
      rep.violations.push_back("entry " + std::to_string(e.step) +
                               ": position outside its constituent");
      continue;
    }
    if (!seen.insert(o0).second || !seen.insert(o1).second)
      rep.violations.push_back("entry " + std::to_string(e.step) +
                               ": identified vertex reused across entries");
    if (D.find(o0) != D.find(o1))
      rep.violations.push_back("entry " + std::to_string(e.step) +
                               ": the pair is not identified in the digraph");
    if (i < ids.size()) {
      const Identification& id = ids[i];
      const bool match = (id.a == o0 && id.b == o1) || (id.a == o1 && id.b == o0);
      if (!match)
        rep.violations.push_back("entry " + std::to_string(e.step) +
                                 ": digraph identification differs from the plan");
    }
    if (e.g0_label.m == e.g1_label.m)
      rep.violations.push_back("entry " + std::to_string(e.step) +
                               ": merges two vertices of equal second coordinate");
  }

  if (mode.kind == CheckMode::Kind::Bounded) {
    // Strict per-constituent progress in step order.
    std::map<std::pair<int, int>, int> deepest;
    for (const PlanEntry& e : plan.entries) {
      check_bounded_entry(pat, plan.length, plan.c, e, &rep.violations);
      for (const auto& [lab, pos] :
           {std::make_pair(e.g0_label, e.g0_pos), std::make_pair(e.g1_label, e.g1_pos)}) {
        auto k = key(lab);
        if (deepest.count(k) && pos <= deepest.at(k))
          rep.violations.push_back("entry " + std::to_string(e.step) +
                                   ": not beyond earlier identified vertices on its constituent");
        deepest[k] = std::max(deepest.count(k) ? deepest.at(k) : 0, pos);
      }
      ++rep.entries_checked;
    }
  } else {
    const std::vector<PhaseView> ph = complete_phases(pat, plan.length);
    for (std::size_t i = 0; i < plan.entries.size(); ++i) {
      check_unbounded_entry(D, pat, ph, plan, i, &rep.violations);
      ++rep.entries_checked;
    }
  }
  return rep;
}

}  // namespace raylab
