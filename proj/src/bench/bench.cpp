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


#include "colorful/bench.hpp"

#include <fstream>
#include <sstream>

#include "colorful/errors.hpp"

namespace clp {

void BenchPlan::validate() const {
  if (kinds.empty() || dimensions.empty()) throw ClpError(ErrorKind::kMalformedInput, "empty bench plan");
  for (int d : dimensions)
    if (d < 1) throw ClpError(ErrorKind::kMalformedInput, "bench dimensions must be >= 1");
  if (instances < 1) throw ClpError(ErrorKind::kMalformedInput, "bench needs at least one instance");
}

namespace {

InstanceOutcome run_instance(const BenchPlan& plan, GeneratorKind kind, int dimension,
                             std::uint64_t seed) {
  InstanceOutcome out;
  out.seed = seed;
  try {
    const auto inst = generate({kind, dimension, seed});
    SolveOptions options;
    options.rule = plan.rule;
    options.backend = plan.backend;
    // The generator already certified both; d = 1 is never in general
    // position and goes through the perturbation path.
    options.check_hypothesis = false;
    options.check_general_position = dimension == 1;
    const auto result = plan.algorithm == Algorithm::kClassic ? solve_classic_bo(inst.config, options)
                                                              : solve_simplexlike(inst.config, options);
    out.pivots = result.report.pivots;
    out.time_ms = result.report.wall_time_ms;
    out.verified = result.report.perturbed ||
                   verify_solution(inst.config, result.selection, result.certificate);
    if (!out.verified) out.error = "certificate failed exact verification";
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

std::vector<InstanceOutcome> run_cell(const BenchPlan& plan, GeneratorKind kind, int dimension) {
  std::vector<InstanceOutcome> out(static_cast<std::size_t>(plan.instances));
  const auto n = static_cast<long long>(plan.instances);
  if (plan.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] =
          run_instance(plan, kind, dimension, plan.base_seed + static_cast<std::uint64_t>(i));
    }
  } else {
    for (long long i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] =
          run_instance(plan, kind, dimension, plan.base_seed + static_cast<std::uint64_t>(i));
    }
  }
  return out;
}

BenchRow summarize(GeneratorKind kind, int dimension, const std::vector<InstanceOutcome>& outcomes) {
  BenchRow row{kind, dimension, static_cast<int>(outcomes.size())};
  int ok = 0;
  for (const auto& o : outcomes) {
    if (!o.verified) {
      ++row.failures;
      continue;
    }
    ++ok;
    row.avg_time_ms += o.time_ms;
    row.avg_pivots += static_cast<double>(o.pivots);
  }
  if (ok > 0) {
    row.avg_time_ms /= ok;
    row.avg_pivots /= ok;
  }
  return row;
}

std::vector<BenchRow> run_bench(const BenchPlan& plan) {
  plan.validate();
  std::vector<BenchRow> rows;
  for (auto kind : plan.kinds)
    for (int d : plan.dimensions) rows.push_back(summarize(kind, d, run_cell(plan, kind, d)));
  if (!plan.output.empty()) {
    std::ofstream csv(plan.output);
    if (!csv) throw ClpError(ErrorKind::kMalformedInput, "cannot write " + plan.output);
    csv << bench_csv(rows);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "generator,dimension,instances,avg_time_ms,avg_pivots,failures\n";
  for (const auto& r : rows) {
    out << to_string(r.generator) << ',' << r.dimension << ',' << r.instances << ',' << r.avg_time_ms
        << ',' << r.avg_pivots << ',' << r.failures << '\n';
  }
  return out.str();
}

}  // namespace clp
