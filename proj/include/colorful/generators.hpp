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


// Seeded instance generators for the colorful Carathéodory setting
// (d+1 colors of d+1 unit vectors each) and the two CLP liftings that trade
// dimension for colors.

#ifndef COLORFUL_GENERATORS_HPP_
#define COLORFUL_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "colorful/geometry.hpp"

namespace clp {

// SplitMix64 read as a counter-based stream: draw i is mix(seed + i·γ).
class SplitMix64 {
 public:
  static constexpr std::string_view kId = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller (one value per call).
  double normal();

 private:
  std::uint64_t state_;
};

enum class GeneratorKind { kRandom, kTube, kHighDensity, kLowDensity, kMidDensity };

std::string_view to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(std::string_view text);
std::vector<GeneratorKind> all_generator_kinds();

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kRandom;
  int dimension = 1;
  std::uint64_t seed = 0;
};

struct Provenance {
  GeneratorKind kind = GeneratorKind::kRandom;
  int dimension = 1;
  std::uint64_t seed = 0;
  std::string rng{SplitMix64::kId};
  int attempts = 1;  // samples drawn before all checks passed
};

struct GeneratedInstance {
  PointConfiguration config;
  Provenance provenance;
};

// (d+1) colors of d+1 points, coordinates rounded to 15 significant digits.
// Every color strictly contains 0 in its hull and the points together with
// the origin are in general position (d ≥ 2); failing samples are redrawn.
GeneratedInstance generate(const GeneratorSpec& spec);

// Appends a zero coordinate to every point.
PointConfiguration lift_dim(const PointConfiguration& config);
// lift_dim plus two new colors, each two copies of (0, ..., 0, 1).
PointConfiguration add_color_pair(const PointConfiguration& config);

}  // namespace clp

#endif  // COLORFUL_GENERATORS_HPP_
