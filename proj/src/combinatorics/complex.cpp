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


#include <string>

#include "colorful/combinatorics.hpp"
#include "colorful/errors.hpp"

namespace clp {

ComplementComplex::ComplementComplex(PointConfiguration config) : config_(std::move(config)) {
  config_.validate();
  if (config_.target || config_.num_colors() != static_cast<std::size_t>(config_.dimension) + 1) {
    throw ClpError(ErrorKind::kMalformedInput, "need d+1 colors and no target");
  }
  for (std::size_t i = 0; i < config_.num_colors(); ++i) {
    if (config_.colors[i].size() != 2) throw ClpError(ErrorKind::kMalformedInput, "colors must be pairs");
    color_of_.push_back(static_cast<int>(i));
    color_of_.push_back(static_cast<int>(i));
  }
  if (!is_general_position(config_, {.include_origin = true})) {
    throw ClpError(ErrorKind::kDegenerateState, "complement complex needs general position");
  }
}

bool ComplementComplex::contains(const std::vector<char>& sigma) const {
  if (sigma.size() != vertices()) throw ClpError(ErrorKind::kMalformedInput, "wrong vertex count");
  std::vector<Point> rest;
  for (std::size_t v = 0; v < vertices(); ++v)
    if (!sigma[v]) rest.push_back(config_.colors[v / 2][v % 2]);
  return !rest.empty() && is_positively_dependent(rest).dependent;
}

Census ComplementComplex::census(std::uint64_t budget) const {
  const std::size_t k = config_.num_colors();
  if (k >= 63 || (std::uint64_t{1} << k) > budget) {
    throw ClpError(ErrorKind::kBudgetExceeded, "census exceeds budget " + std::to_string(budget));
  }
  // A fully-labeled d-simplex takes one vertex of every color.
  Census out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<char> sigma(vertices(), 0);
    for (std::size_t i = 0; i < k; ++i) sigma[2 * i + (mask >> i & 1u)] = 1;
    if (contains(sigma)) ++out.count;
  }
  out.even = out.count % 2 == 0;
  if (out.count != enumerate_pdcs(config_, {budget, true}).size()) {
    throw ClpError(ErrorKind::kVerificationFailed, "census differs from the colorful enumeration");
  }
  return out;
}

}  // namespace clp
