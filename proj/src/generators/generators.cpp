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


#include <cmath>
#include <numbers>
#include <string>

#include "colorful/errors.hpp"
#include "colorful/generators.hpp"

namespace clp {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandom: return "random";
    case GeneratorKind::kTube: return "tube";
    case GeneratorKind::kHighDensity: return "highdensity";
    case GeneratorKind::kLowDensity: return "lowdensity";
    case GeneratorKind::kMidDensity: return "middensity";
  }
  return "random";
}

GeneratorKind parse_generator_kind(std::string_view text) {
  for (auto kind : all_generator_kinds())
    if (to_string(kind) == text) return kind;
  throw ClpError(ErrorKind::kMalformedInput, "unknown generator '" + std::string(text) + "'");
}

std::vector<GeneratorKind> all_generator_kinds() {
  return {GeneratorKind::kRandom, GeneratorKind::kTube, GeneratorKind::kHighDensity,
          GeneratorKind::kLowDensity, GeneratorKind::kMidDensity};
}

namespace {

// Spread of the clustered families, relative to the unit sphere; see
// around(). Tuned so that difficulty grows high < mid < random < tube < low.
constexpr double kHighJitter = 0.05;  // around shared simplex vertices
constexpr double kMidJitter = 0.8;    // same, much looser
constexpr double kLowDensityCap = 0.05;
constexpr double kTubeWidth = 0.1;
constexpr double kTubeArc = 0.6;  // fraction of the great circle used per color
constexpr int kMaxAttempts = 1000;

using Vec = std::vector<double>;

Vec unit(Vec v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

Vec gaussian(SplitMix64& rng, std::size_t d) {
  Vec v(d);
  for (double& x : v) x = rng.normal();
  return v;
}

// center + spread·g/√d, projected back to the sphere.
Vec around(SplitMix64& rng, const Vec& center, double spread) {
  const double scale = spread / std::sqrt(static_cast<double>(center.size()));
  Vec v = gaussian(rng, center.size());
  for (std::size_t r = 0; r < v.size(); ++r) v[r] = center[r] + scale * v[r];
  return unit(std::move(v));
}

Vec closing_point(const std::vector<Vec>& color) {
  Vec s(color.front().size(), 0.0);
  for (const auto& p : color)
    for (std::size_t r = 0; r < s.size(); ++r) s[r] -= p[r];
  return unit(std::move(s));
}

// Rows of a random orthogonal matrix (Gram-Schmidt on Gaussian vectors).
std::vector<Vec> random_rotation(SplitMix64& rng, std::size_t d) {
  std::vector<Vec> q;
  while (q.size() < d) {
    Vec v = gaussian(rng, d);
    for (const auto& u : q) {
      double dot = 0.0;
      for (std::size_t r = 0; r < d; ++r) dot += v[r] * u[r];
      for (std::size_t r = 0; r < d; ++r) v[r] -= dot * u[r];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm > 1e-12) q.push_back(unit(std::move(v)));
  }
  return q;
}

// Vertices of a regular simplex centered at 0 on the unit sphere: e_k minus
// the centroid, written in the Helmert basis of {x : Σx = 0}.
std::vector<Vec> regular_simplex(std::size_t d) {
  std::vector<Vec> out(d + 1, Vec(d));
  for (std::size_t k = 0; k <= d; ++k) {
    for (std::size_t j = 1; j <= d; ++j) {
      const double norm = std::sqrt(static_cast<double>(j * (j + 1)));
      double coord = 0.0;
      if (k < j) coord = 1.0 / norm;
      if (k == j) coord = -static_cast<double>(j) / norm;
      out[k][j - 1] = coord;
    }
    out[k] = unit(std::move(out[k]));
  }
  return out;
}

std::vector<std::vector<Vec>> sample(GeneratorKind kind, std::size_t d, SplitMix64& rng) {
  std::vector<std::vector<Vec>> colors;
  Vec tube_a, tube_b, center;
  std::vector<Vec> simplex;
  if (kind == GeneratorKind::kTube) {
    auto q = d >= 2 ? random_rotation(rng, d) : std::vector<Vec>{Vec{1.0}, Vec{1.0}};
    tube_a = q[0];
    tube_b = q[1];
  }
  if (kind == GeneratorKind::kLowDensity) {
    center = unit(gaussian(rng, d));
  }
  if (kind == GeneratorKind::kHighDensity || kind == GeneratorKind::kMidDensity) {
    const auto q = random_rotation(rng, d);
    for (const auto& v : regular_simplex(d)) {
      Vec p(d, 0.0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) p[r] += q[c][r] * v[c];
      simplex.push_back(unit(std::move(p)));
    }
  }
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<Vec> color;
    switch (kind) {
      case GeneratorKind::kRandom:
        for (std::size_t j = 0; j < d; ++j) color.push_back(unit(gaussian(rng, d)));
        break;
      case GeneratorKind::kMidDensity:
      case GeneratorKind::kHighDensity: {
        const double jitter = kind == GeneratorKind::kHighDensity ? kHighJitter : kMidJitter;
        // Vertex order is shuffled per color (Fisher-Yates).
        std::vector<std::size_t> order(d + 1);
        for (std::size_t k = 0; k <= d; ++k) order[k] = k;
        for (std::size_t k = d; k > 0; --k) std::swap(order[k], order[rng.next() % (k + 1)]);
        for (std::size_t j = 0; j < d; ++j) color.push_back(around(rng, simplex[order[j]], jitter));
        break;
      }
      case GeneratorKind::kLowDensity:
        for (std::size_t j = 0; j < d; ++j) color.push_back(around(rng, center, kLowDensityCap));
        break;
      case GeneratorKind::kTube:
        for (std::size_t j = 0; j < d; ++j) {
          const double theta = 2.0 * std::numbers::pi * kTubeArc * rng.uniform();
          Vec c(d);
          for (std::size_t r = 0; r < d; ++r) c[r] = std::cos(theta) * tube_a[r] + std::sin(theta) * tube_b[r];
          color.push_back(d >= 2 ? around(rng, c, kTubeWidth) : unit(std::move(c)));
        }
        break;
    }
    if (color.size() == d) color.push_back(closing_point(color));
    colors.push_back(std::move(color));
  }
  return colors;
}

bool strictly_inside(const std::vector<Point>& color) {
  const auto dep = is_positively_dependent(color);
  if (!dep.dependent) return false;
  for (const auto& w : dep.convex.weights)
    if (w <= 0) return false;
  return true;
}

}  // namespace

GeneratedInstance generate(const GeneratorSpec& spec) {
  if (spec.dimension < 1) throw ClpError(ErrorKind::kDimensionOrEmpty, "dimension must be >= 1");
  const auto d = static_cast<std::size_t>(spec.dimension);
  SplitMix64 rng(spec.seed);
  GeneratedInstance out;
  out.provenance = {spec.kind, spec.dimension, spec.seed, std::string(SplitMix64::kId), 0};
  GeneralPositionOptions gp;
  gp.include_origin = true;
  gp.seed = spec.seed;
  while (out.provenance.attempts < kMaxAttempts) {
    ++out.provenance.attempts;
    PointConfiguration config;
    config.dimension = spec.dimension;
    for (const auto& color : sample(spec.kind, d, rng)) {
      std::vector<Point> rounded;
      for (const auto& p : color) {
        Point q(d);
        for (std::size_t r = 0; r < d; ++r) q[r] = round_to_significant(p[r], 15);
        rounded.push_back(std::move(q));
      }
      config.colors.push_back(std::move(rounded));
    }
    bool ok = true;
    for (const auto& color : config.colors) ok = ok && strictly_inside(color);
    // The unit sphere of R^1 is {-1, +1}: no general position to ask for.
    if (ok && (d == 1 || is_general_position(config, gp))) {
      out.config = std::move(config);
      return out;
    }
  }
  throw ClpError(ErrorKind::kDegenerateState, "generator did not produce a valid instance");
}

PointConfiguration lift_dim(const PointConfiguration& config) {
  PointConfiguration out = config;
  out.dimension = config.dimension + 1;
  for (auto& color : out.colors)
    for (auto& p : color) p.push_back(0);
  if (out.target) out.target->push_back(0);
  return out;
}

PointConfiguration add_color_pair(const PointConfiguration& config) {
  PointConfiguration out = lift_dim(config);
  Point apex(static_cast<std::size_t>(out.dimension));
  apex.back() = 1;
  out.colors.push_back({apex, apex});
  out.colors.push_back({apex, apex});
  return out;
}

}  // namespace clp
