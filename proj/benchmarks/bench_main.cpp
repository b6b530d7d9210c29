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

#include <benchmark/benchmark.h>

#include "raylab/corpus.hpp"
#include "raylab/counterexample.hpp"
#include "raylab/menger.hpp"
#include "raylab/ray_spec.hpp"
#include "raylab/search.hpp"

namespace {

using namespace raylab;

void BM_ClassifyCorpus(benchmark::State& state) {
  const auto cases = corpus::classifier_corpus(200, 777);
  for (auto _ : state) {
    int bounded = 0;
    for (const auto& c : cases)
      if (classify(c.spec).reason == Verdict::Reason::BoundedRepSeq) ++bounded;
    benchmark::DoNotOptimize(bounded);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cases.size()));
}
BENCHMARK(BM_ClassifyCorpus);

void BM_MengerSeeded(benchmark::State& state) {
  const auto instances = corpus::seeded_menger_corpus(20, 12345);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& inst : instances)
      total += vertex_disjoint_dipaths(inst.g, inst.U, inst.W).paths.size();
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(instances.size()));
}
BENCHMARK(BM_MengerSeeded);

void BM_BuildBounded(benchmark::State& state) {
  const RaySpec spec = parse_ray_spec("prefix=;tail=period:+-");
  for (auto _ : state) {
    const BuildResult r = build_bounded(spec, 3, 150, 6);
    benchmark::DoNotOptimize(r.plan.completed_steps);
  }
}
BENCHMARK(BM_BuildBounded);

void BM_TracePattern(benchmark::State& state) {
  const BuildResult r =
      build_bounded(parse_ray_spec("prefix=;tail=period:+-"), 3, 150, 6);
  const GraphView view(r.digraph);
  const RaySpec& pat = *r.digraph.pattern();
  for (auto _ : state) {
    std::size_t walks = 0;
    for (VertexId v : r.digraph.vertices()) {
      if (v % 50 != 0) continue;  // sample the starts to keep iterations short
      walks += trace_pattern(view, v, pat, 26).size();
    }
    benchmark::DoNotOptimize(walks);
  }
}
BENCHMARK(BM_TracePattern);

}  // namespace

BENCHMARK_MAIN();
