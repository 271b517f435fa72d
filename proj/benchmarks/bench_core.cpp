// Copyright 2026 The facemill Authors
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

#include "facemill/ga.hpp"
#include "facemill/lookup.hpp"
#include "facemill/oracle.hpp"
#include "facemill/random.hpp"
#include "facemill/schema.hpp"

namespace {

using namespace facemill;

const Model& model() {
  static const Model m{ProblemData{}};
  return m;
}

Plan reference_plan() {
  Plan p;
  p.finish = {122.23, 0.27907, 2.0};
  p.rough = {60.12, 0.3187, 4.0};
  p.rough_passes = 1;
  return p;
}

void BM_UnitCost(benchmark::State& state) {
  const Plan p = reference_plan();
  for (auto _ : state) {
    benchmark::DoNotOptimize(model().unit_cost(p));
  }
}
BENCHMARK(BM_UnitCost);

void BM_ConstraintReport(benchmark::State& state) {
  const Plan p = reference_plan();
  for (auto _ : state) {
    benchmark::DoNotOptimize(model().constraint_report(p, 6.0));
  }
}
BENCHMARK(BM_ConstraintReport);

void BM_DecodeGenome(benchmark::State& state) {
  const auto table = enumerate_pairs(6.0, model().problem());
  const auto layout = make_layout(GaConfig{}, table.size());
  Rng rng(1);
  Genome g(layout.length());
  for (auto& b : g) {
    b = static_cast<std::uint8_t>(rng.below(2));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode_genome(g, layout, table, model()));
  }
}
BENCHMARK(BM_DecodeGenome);

void BM_EnumeratePairs(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_pairs(16.0, model().problem()));
  }
}
BENCHMARK(BM_EnumeratePairs);

void BM_GaRun(benchmark::State& state) {
  GaConfig cfg;
  cfg.population = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(model(), 6.0, cfg));
  }
}
BENCHMARK(BM_GaRun)->Arg(100)->Arg(750)->Unit(benchmark::kMillisecond);

void BM_OptimizePass(benchmark::State& state) {
  const auto method = state.range(0) == 0 ? PassMethod::candidates : PassMethod::grid;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_pass(model(), PassKind::rough, 3.2, method));
  }
}
BENCHMARK(BM_OptimizePass)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_GlobalOptimum(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(global_optimum(model(), 16.0));
  }
}
BENCHMARK(BM_GlobalOptimum)->Unit(benchmark::kMicrosecond);

void BM_PopulationSizing(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(size_population(65));
  }
}
BENCHMARK(BM_PopulationSizing)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
