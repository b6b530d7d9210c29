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
//
// Acceptance gate: seven independent property checks, each printed as one
// pass/fail line.  The process exit code is the number of failed checks.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "raylab/corpus.hpp"
#include "raylab/counterexample.hpp"
#include "raylab/digraph.hpp"
#include "raylab/embedding.hpp"
#include "raylab/errors.hpp"
#include "raylab/menger.hpp"
#include "raylab/oracle.hpp"
#include "raylab/packing.hpp"
#include "raylab/ray_spec.hpp"
#include "raylab/search.hpp"
#include "raylab/serialize.hpp"
#include "raylab/tribe.hpp"

namespace {

using namespace raylab;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(const std::string& detail) { return {false, detail}; }

// ---------------------------------------------------------------------------
// 1. Classifier totality and duality over a generated corpus.
// ---------------------------------------------------------------------------
Outcome criterion1() {
  const auto cases = corpus::classifier_corpus(200, 424242);
  if (cases.size() < 200)
    return fail("corpus produced only " + std::to_string(cases.size()) + " cases");
  for (const auto& c : cases) {
    const Verdict got = classify(c.spec);
    if (!(got == c.expected))
      return fail("classification of " + to_string(c.spec) +
                  " disagrees with its construction: got " + to_string(got));
    const Verdict rev = classify(reverse(c.spec));
    if (rev.kind != got.kind || rev.reason != got.reason || rev.c != got.c)
      return fail("reversal changes the verdict of " + to_string(c.spec));
  }
  return {};
}

// ---------------------------------------------------------------------------
// 2. Flow-based disjoint dipaths agree with brute force on seeded digraphs.
// ---------------------------------------------------------------------------
Outcome criterion2() {
  const auto instances = corpus::seeded_menger_corpus(100, 987654);
  if (instances.size() != 100)
    return fail("corpus produced " + std::to_string(instances.size()) + " instances");
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    if (inst.g.vertex_count() > 12)
      return fail("instance " + std::to_string(i) + " exceeds 12 vertices");
    const MengerResult res = vertex_disjoint_dipaths(inst.g, inst.U, inst.W);
    const int brute = oracle::brute_max_disjoint_dipaths(inst.g, inst.U, inst.W);
    if (static_cast<int>(res.paths.size()) != brute)
      return fail("instance " + std::to_string(i) + ": flow found " +
                  std::to_string(res.paths.size()) + " paths, brute force " +
                  std::to_string(brute));
    if (res.cut.size() != res.paths.size())
      return fail("instance " + std::to_string(i) + ": cut size " +
                  std::to_string(res.cut.size()) + " != path count " +
                  std::to_string(res.paths.size()));
    if (!cut_separates(GraphView(inst.g), inst.U, inst.W, res.cut))
      return fail("instance " + std::to_string(i) + ": returned cut does not separate");
  }
  return {};
}

// ---------------------------------------------------------------------------
// 3. Packing: n disjoint out-dipaths from X with the per-level guards.
// ---------------------------------------------------------------------------
Outcome criterion3() {
  const auto instances = corpus::packing_corpus();
  if (instances.size() != 25)
    return fail("corpus produced " + std::to_string(instances.size()) + " instances");
  std::set<int> demanded_n;
  for (const auto& inst : instances) {
    demanded_n.insert(inst.n);
    std::vector<LevelTrace> traces;
    std::vector<Embedding> rays;
    try {
      rays = pack_out_rays(inst.host, inst.tribe, inst.X, inst.n, inst.min_len, &traces);
    } catch (const Error& e) {
      return fail(inst.name + ": packing threw: " + e.what());
    }
    if (static_cast<int>(rays.size()) != inst.n)
      return fail(inst.name + ": expected " + std::to_string(inst.n) + " rays, got " +
                  std::to_string(rays.size()));
    const std::set<VertexId> starts(inst.X.begin(), inst.X.end());
    for (const Embedding& ray : rays) {
      try {
        validate_embedding(GraphView(inst.host), ray);
      } catch (const Error& e) {
        return fail(inst.name + ": packed ray fails validation: " + e.what());
      }
      if (ray.length() < inst.min_len)
        return fail(inst.name + ": packed ray shorter than min_len");
      if (starts.find(ray.start()) == starts.end())
        return fail(inst.name + ": packed ray starts outside X");
      for (const ArcStep& s : ray.steps)
        if (!s.forward) return fail(inst.name + ": packed ray is not an out-dipath");
    }
    for (std::size_t a = 0; a < rays.size(); ++a)
      for (std::size_t b = a + 1; b < rays.size(); ++b)
        if (rays[a].meets(rays[b]))
          return fail(inst.name + ": packed rays " + std::to_string(a) + " and " +
                      std::to_string(b) + " intersect");
    if (static_cast<int>(traces.size()) != inst.n)
      return fail(inst.name + ": expected one trace per level");
    for (const LevelTrace& tr : traces) {
      const int l = tr.level - 1;  // level before the step
      if (tr.layer_size - tr.deleted_prefix < l * l + 1)
        return fail(inst.name + " level " + std::to_string(tr.level) +
                    ": survivor guard violated (" +
                    std::to_string(tr.layer_size - tr.deleted_prefix) + " < " +
                    std::to_string(l * l + 1) + ")");
      if (tr.f_prime_size < (l - tr.adopted) * l + 1)
        return fail(inst.name + " level " + std::to_string(tr.level) +
                    ": pool guard violated (" + std::to_string(tr.f_prime_size) +
                    " < " + std::to_string((l - tr.adopted) * l + 1) + ")");
      if (tr.adopted + tr.j_size != l)
        return fail(inst.name + " level " + std::to_string(tr.level) +
                    ": adopted + rerouted != previous level");
    }
  }
  for (int n = 1; n <= 5; ++n)
    if (demanded_n.find(n) == demanded_n.end())
      return fail("corpus exercises no instance with n = " + std::to_string(n));
  return {};
}

// ---------------------------------------------------------------------------
// 4. Forked subtribes: structure, subset origin, and exhaustive confirmation.
// ---------------------------------------------------------------------------

// Independent re-statement of the fork property: every member's designated
// initial part avoids every vertex of every other member.  A zero-length
// initial part has no vertices at all.
bool naive_forked(const std::vector<const Embedding*>& members, int hat_len) {
  if (hat_len == 0) return true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      for (int p = 0; p <= hat_len && p < static_cast<int>(members[i]->vertices.size());
           ++p)
        if (members[j]->contains_vertex(members[i]->vertices[static_cast<size_t>(p)]))
          return false;
    }
  }
  return true;
}

Outcome criterion4() {
  const auto instances = corpus::fork_corpus();
  if (instances.size() != 20)
    return fail("corpus produced " + std::to_string(instances.size()) + " instances");
  for (const auto& inst : instances) {
    Tribe refined;
    try {
      refined = forked_subtribe(inst.tribe, inst.max_layer);
    } catch (const Error& e) {
      return fail(inst.name + ": refinement threw: " + e.what());
    }
    if (!is_forked(refined)) return fail(inst.name + ": output fails is_forked");
    if (static_cast<int>(refined.layers.size()) != inst.max_layer + 1)
      return fail(inst.name + ": expected layers 0.." + std::to_string(inst.max_layer));
    for (int k = 0; k <= inst.max_layer; ++k)
      if (static_cast<int>(refined.layers[static_cast<size_t>(k)].size()) != k)
        return fail(inst.name + ": layer " + std::to_string(k) + " has size " +
                    std::to_string(refined.layers[static_cast<size_t>(k)].size()));

    // Cross-check the fork property independently over all output members.
    std::vector<const Embedding*> all;
    for (const auto& layer : refined.layers)
      for (const Embedding& m : layer) all.push_back(&m);
    if (!naive_forked(all, refined.hat_len))
      return fail(inst.name + ": output fails the independent fork re-check");

    for (int k = 1; k <= inst.max_layer; ++k) {
      const auto& out_layer = refined.layers[static_cast<size_t>(k)];
      // Locate the input layer this output layer was drawn from.
      const std::vector<Embedding>* source = nullptr;
      for (const auto& in_layer : inst.tribe.layers) {
        bool contains_all = true;
        for (const Embedding& m : out_layer)
          if (std::find(in_layer.begin(), in_layer.end(), m) == in_layer.end()) {
            contains_all = false;
            break;
          }
        if (contains_all) {
          source = &in_layer;
          break;
        }
      }
      if (source == nullptr)
        return fail(inst.name + ": layer " + std::to_string(k) +
                    " is not a subset of any input layer");
      if (source->size() > 12)
        return fail(inst.name + ": input layer exceeds 12 members");

      // Exhaustive confirmation: enumerate every size-k subset of the source
      // layer, keep the internally forked ones, and require the output layer
      // to be among them.
      const int sz = static_cast<int>(source->size());
      std::vector<int> chosen;
      bool found = false;
      std::size_t valid_count = 0;
      std::vector<int> out_ids;
      for (const Embedding& m : out_layer) {
        const auto it = std::find(source->begin(), source->end(), m);
        out_ids.push_back(static_cast<int>(it - source->begin()));
      }
      std::sort(out_ids.begin(), out_ids.end());
      std::function<void(int)> recurse = [&](int next) {
        if (static_cast<int>(chosen.size()) == k) {
          std::vector<const Embedding*> subset;
          for (int id : chosen) subset.push_back(&(*source)[static_cast<size_t>(id)]);
          if (naive_forked(subset, inst.tribe.hat_len)) {
            ++valid_count;
            if (chosen == out_ids) found = true;
          }
          return;
        }
        for (int id = next; id < sz; ++id) {
          chosen.push_back(id);
          recurse(id + 1);
          chosen.pop_back();
        }
      };
      recurse(0);
      if (valid_count == 0)
        return fail(inst.name + ": no valid forked selection of size " +
                    std::to_string(k) + " exists in the source layer");
      if (!found)
        return fail(inst.name + ": layer " + std::to_string(k) +
                    " is not among the valid forked selections");
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// 5. Bounded hosts: plan re-verification, copy count, and the walk census.
// ---------------------------------------------------------------------------
Outcome bounded_suite(const std::string& spec_text, int c, int expected_deepest) {
  const RaySpec spec = parse_ray_spec(spec_text);
  const BuildResult r = build_bounded(spec, 3, 150, 6);
  const Digraph& D = r.digraph;

  CheckMode mode;
  mode.kind = CheckMode::Kind::Bounded;
  mode.c = c;
  const CheckReport rep = check_plan(D, r.plan, mode);
  if (!rep.ok())
    return fail(spec_text + ": check_plan reported: " + rep.violations.front());

  if (!D.pattern()) return fail(spec_text + ": host carries no pattern");
  const RaySpec& pat = *D.pattern();
  const oracle::CopyCount copies = oracle::max_disjoint_copies(D, pat, 10, 4);
  if (copies.kind != oracle::CopyCount::Kind::AtLeast)
    return fail(spec_text + ": fewer than 4 disjoint prefix copies (got " +
                std::to_string(copies.count) + ")");

  int deepest = 0;
  for (const PlanEntry& e : r.plan.entries)
    deepest = std::max({deepest, e.g0_pos, e.g1_pos});
  if (deepest != expected_deepest)
    return fail(spec_text + ": deepest identification at " + std::to_string(deepest) +
                ", expected " + std::to_string(expected_deepest));
  const int T = 2 * deepest;

  // Live identification vertex -> plan entry.
  std::map<VertexId, const PlanEntry*> gmap;
  for (const PlanEntry& e : r.plan.entries)
    gmap[D.find(D.ray_original(e.g0_label, e.g0_pos))] = &e;

  const GraphView view(D);
  std::size_t walks_total = 0;
  std::size_t crossings = 0;
  for (VertexId v : D.vertices()) {
    std::vector<Embedding> walks;
    try {
      walks = trace_pattern(view, v, pat, T, 500000);
    } catch (const ResultCapExceeded&) {
      return fail(spec_text + ": walk census from vertex " + std::to_string(v) +
                  " exceeded its result cap");
    }
    for (const Embedding& walk : walks) {
      ++walks_total;
      int last_g = -1;
      for (int p = 0; p <= walk.length(); ++p)
        if (gmap.count(walk.vertices[static_cast<size_t>(p)]) != 0) last_g = p;
      const int window = walk.length() - std::max(last_g, 0);
      if (window >= 1) {
        const oracle::Confinement conf = oracle::tail_confinement(D, walk, window);
        if (!conf.confined)
          return fail(spec_text + ": walk from " + std::to_string(v) +
                      " has an unconfined tail after its last identification vertex");
      }
      for (int p = 1; p < walk.length(); ++p) {
        const auto it = gmap.find(walk.vertices[static_cast<size_t>(p)]);
        if (it == gmap.end()) continue;
        ++crossings;
        const PlanEntry& e = *it->second;
        const auto step_key = [&](const ArcStep& s) {
          const Arc& a = D.arcs()[static_cast<size_t>(s.arc)];
          return std::make_pair(*a.label, a.arc_index);
        };
        using Key = std::pair<RayLabel, int>;
        std::set<Key> got{step_key(walk.steps[static_cast<size_t>(p - 1)]),
                          step_key(walk.steps[static_cast<size_t>(p)])};
        const Key into_a{e.g0_label, e.g0_pos - 1};
        const Key into_b{e.g0_label, e.g0_pos};
        const Key from_a{e.g1_label, e.g1_pos - 1};
        const Key from_b{e.g1_label, e.g1_pos};
        const std::vector<std::set<Key>> allowed = {
            {into_a, into_b},  // straight through the first constituent
            {from_a, from_b},  // straight through the second constituent
            {from_a, into_b},  // the one admissible switch between them
        };
        int matches = 0;
        for (const auto& pair : allowed)
          if (got == pair) ++matches;
        if (matches != 1)
          return fail(spec_text + ": walk from " + std::to_string(v) +
                      " crosses an identification vertex outside the three cases");
      }
    }
  }
  if (walks_total == 0) return fail(spec_text + ": walk census found no embeddings");
  if (crossings == 0)
    return fail(spec_text + ": walk census never traversed an identification vertex");
  return {};
}

Outcome criterion5() {
  const Outcome alt = bounded_suite("prefix=;tail=period:+-", 1, 13);
  if (!alt.pass) return alt;
  return bounded_suite("prefix=;tail=period:++-", 2, 20);
}

// ---------------------------------------------------------------------------
// 6. Unbounded host: plan re-verification plus aperiodicity of the pattern.
// ---------------------------------------------------------------------------
Outcome criterion6() {
  const RaySpec spec = parse_ray_spec("prefix=;tail=grow:1,1,+");
  const BuildResult r = build_unbounded(spec, 2, 400, 3);
  if (r.plan.completed_steps != 3)
    return fail("construction stopped after " +
                std::to_string(r.plan.completed_steps) + " steps: " +
                r.plan.stop_reason);

  CheckMode mode;
  mode.kind = CheckMode::Kind::Unbounded;
  const CheckReport rep = check_plan(r.digraph, r.plan, mode);
  if (!rep.ok()) return fail("check_plan reported: " + rep.violations.front());

  const oracle::PeriodicityResult probe = oracle::periodicity_probe(spec, 30, 100);
  if (probe.periodic)
    return fail("pattern tails repeat at shifts " + std::to_string(probe.k1) + "," +
                std::to_string(probe.k2));
  return {};
}

// ---------------------------------------------------------------------------
// 7. End-to-end determinism of build + verify + export.
// ---------------------------------------------------------------------------
std::string slurp_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion7() {
  const fs::path base =
      fs::temp_directory_path() / ("raylab_accept_" + std::to_string(::getpid()));
  const auto cli_ok = [](const std::string& args) {
    const std::string cmd =
        std::string(RAYLAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
  };
  const auto run_round = [&](const fs::path& dir, std::string* err) {
    fs::create_directories(dir);
    const std::string bounded = (dir / "bounded.json").string();
    const std::string unbounded = (dir / "unbounded.json").string();
    const struct {
      std::string args;
      const char* what;
    } steps[] = {
        {"build --kind bounded --spec \"prefix=;tail=period:+-\" --max-m 3 "
         "--len 150 --steps 6 --out " + bounded,
         "bounded build"},
        {"verify --digraph " + bounded + " --plan " + bounded + ".plan --mode bounded",
         "bounded verify"},
        {"export --digraph " + bounded + " --format dot --out " + bounded + ".dot",
         "bounded dot export"},
        {"export --digraph " + bounded + " --format native --out " + bounded + ".native",
         "bounded native export"},
        {"build --kind unbounded --spec \"prefix=;tail=grow:1,1,+\" --max-m 2 "
         "--len 400 --steps 3 --out " + unbounded,
         "unbounded build"},
        {"verify --digraph " + unbounded + " --plan " + unbounded +
             ".plan --mode unbounded",
         "unbounded verify"},
        {"export --digraph " + unbounded + " --format dot --out " + unbounded + ".dot",
         "unbounded dot export"},
        {"export --digraph " + unbounded + " --format native --out " + unbounded +
             ".native",
         "unbounded native export"},
    };
    for (const auto& step : steps) {
      if (!cli_ok(step.args)) {
        *err = step.what;
        return false;
      }
    }
    return true;
  };

  std::string err;
  if (!run_round(base / "first", &err)) return fail("first round failed at " + err);
  if (!run_round(base / "second", &err)) return fail("second round failed at " + err);

  const char* artifacts[] = {"bounded.json",        "bounded.json.plan",
                             "bounded.json.dot",    "bounded.json.native",
                             "unbounded.json",      "unbounded.json.plan",
                             "unbounded.json.dot",  "unbounded.json.native"};
  for (const char* name : artifacts) {
    const std::string a = slurp_file(base / "first" / name);
    const std::string b = slurp_file(base / "second" / name);
    if (a.empty()) return fail(std::string(name) + " is empty");
    if (a != b) return fail(std::string(name) + " differs between runs");
  }
  return {};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double tolerance_seconds;  // pinned per-criterion runtime bound
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {1, "classifier totality and duality", 1.0, criterion1},
      {2, "disjoint-dipath agreement with brute force", 10.0, criterion2},
      {3, "packing with per-level counting guards", 30.0, criterion3},
      {4, "forked-subtribe refinement, exhaustively confirmed", 30.0, criterion4},
      {5, "bounded host suite (plans, copies, walk census)", 120.0, criterion5},
      {6, "unbounded host suite (plan, aperiodicity)", 120.0, criterion6},
      {7, "end-to-end determinism of build/verify/export", 600.0, criterion7},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.fn();
    } catch (const std::exception& e) {
      outcome = fail(std::string("unexpected exception: ") + e.what());
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (outcome.pass && dt > c.tolerance_seconds)
      outcome = fail("exceeded the " + std::to_string(c.tolerance_seconds) +
                     " s tolerance");
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n",
                outcome.pass ? "PASS" : "FAIL", c.id, c.label, dt,
                outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
  }
  return failures;
}
