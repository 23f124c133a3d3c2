// Copyright 2026 The colorful-lp Authors
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


// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "colorful/bench.hpp"
#include "colorful/generators.hpp"
#include "colorful/geometry.hpp"

namespace {

// d+1 colors of 3 unit vectors: 3^(d+1) colorful selections to test.
clp::PointConfiguration enumeration_instance(int d) {
  auto c = clp::generate({clp::GeneratorKind::kRandom, d, 1}).config;
  for (auto& color : c.colors) color.resize(3);
  return c;
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto c = enumeration_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clp::enumerate_pdcs(c, {clp::default_budget(), true}));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto c = enumeration_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clp::enumerate_pdcs_serial(c));
}

void general_position(benchmark::State& state, bool parallel) {
  const auto c = clp::generate({clp::GeneratorKind::kRandom, static_cast<int>(state.range(0)), 2}).config;
  clp::GeneralPositionOptions options;
  options.include_origin = true;
  options.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(clp::is_general_position(c, options));
}

void BM_GeneralPositionParallel(benchmark::State& state) { general_position(state, true); }
void BM_GeneralPositionSerial(benchmark::State& state) { general_position(state, false); }

void bench_cell(benchmark::State& state, bool parallel) {
  clp::BenchPlan plan;
  plan.instances = 8;
  plan.parallel = parallel;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        clp::run_cell(plan, clp::GeneratorKind::kRandom, static_cast<int>(state.range(0))));
  }
}

void BM_BenchCellParallel(benchmark::State& state) { bench_cell(state, true); }
void BM_BenchCellSerial(benchmark::State& state) { bench_cell(state, false); }

}  // namespace

BENCHMARK(BM_EnumerateParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneralPositionParallel)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneralPositionSerial)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchCellParallel)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchCellSerial)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
