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

#ifndef COLORFUL_SRC_PIVOT_SOLVER_COMMON_HPP_
#define COLORFUL_SRC_PIVOT_SOLVER_COMMON_HPP_

#include <optional>

#include "colorful/pivot.hpp"

namespace clp::detail {

struct PreparedInstance {
  std::optional<PointConfiguration> working;  // set when perturbed
  bool perturbed = false;
};

// Validates shape, checks the hypothesis per color and perturbs degenerate
// inputs.
PreparedInstance prepare_instance(const PointConfiguration& config, const SolveOptions& options);

// Re-certifies a solution found on a perturbed copy against the original
// points, then verifies the final certificate exactly.
void finish_result(const PointConfiguration& original, const PreparedInstance& prepared,
                   SolveResult& result);

}  // namespace clp::detail

#endif  // COLORFUL_SRC_PIVOT_SOLVER_COMMON_HPP_
