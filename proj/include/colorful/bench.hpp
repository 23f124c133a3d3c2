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


// Benchmark grid over generator families and dimensions: every instance is
// generated from seed base+index, solved, and re-verified exactly.

#ifndef COLORFUL_BENCH_HPP_
#define COLORFUL_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "colorful/generators.hpp"
#include "colorful/pivot.hpp"

namespace clp {

enum class Algorithm { kSimplexLike, kClassic };

struct BenchPlan {
  std::vector<GeneratorKind> kinds = all_generator_kinds();
  std::vector<int> dimensions{3, 6, 12, 24};
  int instances = 50;
  PivotRule rule = PivotRule::kDantzig;
  Backend backend = Backend::kExact;
  Algorithm algorithm = Algorithm::kSimplexLike;
  std::uint64_t base_seed = 0;
  std::string output;  // CSV path, empty for none
  bool parallel = true;  // OpenMP over the instances of a cell

  void validate() const;
};

struct InstanceOutcome {
  std::uint64_t seed = 0;
  bool verified = false;
  std::size_t pivots = 0;
  double time_ms = 0.0;  // pivoting only
  std::string error;
};

struct BenchRow {
  GeneratorKind generator = GeneratorKind::kRandom;
  int dimension = 0;
  int instances = 0;
  double avg_time_ms = 0.0;
  double avg_pivots = 0.0;
  int failures = 0;
};

// One cell, outcomes in seed order. Failures are recorded, never thrown.
std::vector<InstanceOutcome> run_cell(const BenchPlan& plan, GeneratorKind kind, int dimension);
BenchRow summarize(GeneratorKind kind, int dimension, const std::vector<InstanceOutcome>& outcomes);

// Every cell in plan order; writes the CSV when plan.output is set.
std::vector<BenchRow> run_bench(const BenchPlan& plan);

// generator,dimension,instances,avg_time_ms,avg_pivots,failures
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace clp

#endif  // COLORFUL_BENCH_HPP_
