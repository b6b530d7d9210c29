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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "raylab/corpus.hpp"
#include "raylab/counterexample.hpp"
#include "raylab/errors.hpp"
#include "raylab/menger.hpp"
#include "raylab/oracle.hpp"
#include "raylab/packing.hpp"
#include "raylab/serialize.hpp"

namespace {

using nlohmann::json;
using namespace raylab;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

oracle::SearchBudget budget_from_env() {
  oracle::SearchBudget budget;
  if (const char* env = std::getenv("RAYLAB_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) {
        budget.max_nodes = static_cast<std::size_t>(v);
        budget.max_results = std::max<std::size_t>(budget.max_nodes / 10, 1000);
      }
    } catch (const std::exception&) {
      throw Error("RAYLAB_BUDGET must be a positive integer");
    }
  }
  return budget;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

int cmd_classify(const std::string& spec_text, const std::string& format) {
  const RaySpec spec = parse_ray_spec(spec_text);
  const Verdict v = classify(spec);
  if (format == "machine") {
    json j;
    j["spec"] = to_string(spec);
    j["verdict"] = to_string(v);
    j["c"] = v.c;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(v) << "\n";
  }
  return kExitOk;
}

int cmd_build(const std::string& kind, const std::string& spec_text, int max_m,
              int len, int steps, const std::string& out_path,
              const std::string& format) {
  const RaySpec spec = parse_ray_spec(spec_text);
  const BuildResult result = kind == "bounded"
                                 ? build_bounded(spec, max_m, len, steps)
                                 : build_unbounded(spec, max_m, len, steps);
  spill(out_path, write_digraph(result.digraph));
  spill(out_path + ".plan", write_plan(result.plan));
  if (format == "machine") {
    json j;
    j["arcs"] = result.digraph.arcs().size();
    j["completed_steps"] = result.plan.completed_steps;
    j["digraph"] = out_path;
    j["plan"] = out_path + ".plan";
    j["requested_steps"] = result.plan.requested_steps;
    j["stop_reason"] = result.plan.stop_reason;
    j["vertices"] = result.digraph.vertex_count();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "built " << kind << " host: " << result.digraph.vertex_count()
              << " vertices, " << result.digraph.arcs().size() << " arcs, "
              << result.plan.completed_steps << "/" << result.plan.requested_steps
              << " steps\n";
    if (!result.plan.stop_reason.empty())
      std::cout << "stopped early: " << result.plan.stop_reason << "\n";
    std::cout << "wrote " << out_path << " and " << out_path << ".plan\n";
  }
  return kExitOk;
}

int cmd_pack(const std::string& digraph_path, const std::string& tribe_path, int n,
             int min_len, const std::string& format) {
  const Digraph D = read_digraph(slurp(digraph_path));
  const Tribe tribe = read_tribe(slurp(tribe_path));
  std::vector<LevelTrace> traces;
  std::vector<Embedding> packed;
  try {
    packed = assemble_positive(D, tribe, n, min_len, &traces);
  } catch (const Error& e) {
    std::cerr << "pack failed: " << e.what() << "\n";
    return kExitViolation;
  }
  if (format == "machine") {
    json j;
    json rays = json::array();
    for (const Embedding& e : packed) rays.push_back(e.vertices);
    j["rays"] = std::move(rays);
    json tr = json::array();
    for (const LevelTrace& t : traces)
      tr.push_back(json{{"adopted", t.adopted},
                        {"cut_size", t.cut_size},
                        {"deleted_prefix", t.deleted_prefix},
                        {"final_pool", t.f_prime_size},
                        {"layer_index", t.layer_index},
                        {"layer_size", t.layer_size},
                        {"level", t.level},
                        {"rerouted", t.j_size}});
    j["trace"] = std::move(tr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "packed " << packed.size() << " disjoint rays\n";
    for (std::size_t i = 0; i < packed.size(); ++i) {
      std::cout << "ray " << i << " (" << packed[i].length() << " arcs):";
      for (VertexId v : packed[i].vertices) std::cout << " " << v;
      std::cout << "\n";
    }
    for (const LevelTrace& t : traces)
      std::cout << "level " << t.level << ": layer " << t.layer_index << " (size "
                << t.layer_size << "), " << t.deleted_prefix
                << " pruned at markers, " << t.adopted << " adopted, " << t.j_size
                << " rerouted (cut " << t.cut_size << "), pool " << t.f_prime_size
                << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& digraph_path, const std::string& plan_path,
               const std::string& mode, const std::string& format) {
  const Digraph D = read_digraph(slurp(digraph_path));
  const IdentificationPlan plan = read_plan(slurp(plan_path));
  const oracle::SearchBudget budget = budget_from_env();

  CheckMode check_mode;
  check_mode.kind =
      mode == "bounded" ? CheckMode::Kind::Bounded : CheckMode::Kind::Unbounded;
  check_mode.c = plan.c;
  CheckReport report = check_plan(D, plan, check_mode);

  // Oracle cross-checks on top of the positional re-verification.
  json oracle_out;
  if (D.pattern()) {
    const RaySpec& pat = *D.pattern();
    const int prefix_len = std::min(10, plan.length);
    const int target = std::min(plan.max_m + 1, 4);
    if (prefix_len >= 1 && target >= 1) {
      const oracle::CopyCount copies =
          oracle::max_disjoint_copies(D, pat, prefix_len, target, budget);
      oracle_out["disjoint_copies_target"] = target;
      oracle_out["disjoint_copies_ok"] = copies.kind == oracle::CopyCount::Kind::AtLeast;
      if (copies.kind != oracle::CopyCount::Kind::AtLeast)
        report.violations.push_back(
            "oracle found fewer than " + std::to_string(target) +
            " disjoint pattern copies (got " + std::to_string(copies.count) + ")");
    }
    const oracle::PeriodicityResult probe = oracle::periodicity_probe(pat, 30, 100);
    oracle_out["periodic"] = probe.periodic;
    if (mode == "unbounded" && probe.periodic)
      report.violations.push_back(
          "pattern tails repeat (shifts " + std::to_string(probe.k1) + "," +
          std::to_string(probe.k2) + "), impossible for an unbounded spec");
    if (mode == "bounded" && !probe.periodic)
      report.violations.push_back(
          "pattern tails never repeat within the probe bound, impossible for a "
          "bounded spec");
  } else {
    report.violations.push_back("digraph carries no pattern");
  }

  if (format == "machine") {
    json j;
    j["entries_checked"] = report.entries_checked;
    j["oracle"] = std::move(oracle_out);
    j["violations"] = report.violations;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const std::string& v : report.violations) std::cout << "violation: " << v << "\n";
    std::cout << (report.ok() ? "ok" : "FAILED") << ": " << report.entries_checked
              << " entries checked, " << report.violations.size() << " violations\n";
  }
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_export(const std::string& digraph_path, const std::string& format,
               const std::string& out_path) {
  const Digraph D = read_digraph(slurp(digraph_path));
  const std::string text = format == "dot" ? write_dot(D) : write_digraph(D);
  if (out_path.empty())
    std::cout << text;
  else
    spill(out_path, text);
  return kExitOk;
}

int cmd_selftest(const std::string& format) {
  const oracle::SearchBudget budget = budget_from_env();
  int failures = 0;

  const auto menger = corpus::seeded_menger_corpus(100, 12345);
  int menger_checked = 0;
  for (const auto& inst : menger) {
    const MengerResult res = vertex_disjoint_dipaths(inst.g, inst.U, inst.W);
    const int brute = oracle::brute_max_disjoint_dipaths(inst.g, inst.U, inst.W, budget);
    const GraphView view(inst.g);
    const bool ok = static_cast<int>(res.paths.size()) == brute &&
                    res.cut.size() == res.paths.size() &&
                    cut_separates(view, inst.U, inst.W, res.cut);
    if (!ok) {
      ++failures;
      std::cerr << "selftest: disjoint-dipath mismatch on seeded instance "
                << menger_checked << " (flow " << res.paths.size() << ", brute "
                << brute << ", cut " << res.cut.size() << ")\n";
    }
    ++menger_checked;
  }

  const auto specs = corpus::classifier_corpus(200, 777);
  int spec_checked = 0;
  for (const auto& c : specs) {
    const Verdict got = classify(c.spec);
    const Verdict rev = classify(reverse(c.spec));
    const bool ok = got == c.expected && rev.kind == got.kind &&
                    rev.reason == got.reason && rev.c == got.c;
    if (!ok) {
      ++failures;
      std::cerr << "selftest: classifier mismatch on " << to_string(c.spec) << "\n";
    }
    ++spec_checked;
  }

  if (format == "machine") {
    json j;
    j["classifier_cases"] = spec_checked;
    j["disjoint_dipath_cases"] = menger_checked;
    j["failures"] = failures;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "selftest: " << menger_checked << " disjoint-dipath cases, "
              << spec_checked << " classifier cases, " << failures << " failures\n";
  }
  return failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"raylab: ray-ubiquity constructions at desk scale"};
  app.require_subcommand(1);

  std::string spec_text;
  std::string format = "human";
  std::string kind;
  std::string digraph_path;
  std::string tribe_path;
  std::string plan_path;
  std::string mode;
  std::string out_path;
  std::string export_format = "native";
  int max_m = 2;
  int len = 100;
  int steps = 1;
  int n = 1;
  int min_len = 1;

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a ray spec");
  classify_cmd->add_option("--spec", spec_text, "ray spec string")->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));

  CLI::App* build_cmd = app.add_subcommand("build", "build a counterexample host");
  build_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"bounded", "unbounded"}));
  build_cmd->add_option("--spec", spec_text, "ray spec string")->required();
  build_cmd->add_option("--max-m", max_m)->check(CLI::NonNegativeNumber);
  build_cmd->add_option("--len", len)->check(CLI::PositiveNumber);
  build_cmd->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  build_cmd->add_option("--out", out_path)->required();
  build_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));

  CLI::App* pack_cmd = app.add_subcommand("pack", "pack disjoint copies from a tribe");
  pack_cmd->add_option("--digraph", digraph_path)->required();
  pack_cmd->add_option("--tribe", tribe_path)->required();
  pack_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  pack_cmd->add_option("--min-len", min_len)->check(CLI::PositiveNumber);
  pack_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "re-verify a built host against its plan");
  verify_cmd->add_option("--digraph", digraph_path)->required();
  verify_cmd->add_option("--plan", plan_path)->required();
  verify_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember({"bounded", "unbounded"}));
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));

  CLI::App* export_cmd = app.add_subcommand("export", "export a digraph file");
  export_cmd->add_option("--digraph", digraph_path)->required();
  export_cmd->add_option("--format", export_format)->check(CLI::IsMember({"dot", "native"}));
  export_cmd->add_option("--out", out_path, "write here instead of stdout");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the seeded oracle corpus");
  selftest_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(spec_text, format);
    if (build_cmd->parsed()) return cmd_build(kind, spec_text, max_m, len, steps, out_path, format);
    if (pack_cmd->parsed()) return cmd_pack(digraph_path, tribe_path, n, min_len, format);
    if (verify_cmd->parsed()) return cmd_verify(digraph_path, plan_path, mode, format);
    if (export_cmd->parsed()) return cmd_export(digraph_path, export_format, out_path);
    if (selftest_cmd->parsed()) return cmd_selftest(format);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
