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

// Exact geometry kernel for colorful linear programming: colored point
// configurations, LP feasibility with certificates, positive dependence,
// cone membership, general position, perturbation and brute-force
// enumeration of positively dependent colorful sets.

#ifndef COLORFUL_GEOMETRY_HPP_
#define COLORFUL_GEOMETRY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "colorful/rational.hpp"

namespace clp {

using Point = Vector;

// k color classes S_1..S_k of points in Q^d, plus an optional target for
// the conic variant. Colors are 0-based in code.
struct PointConfiguration {
  int dimension = 0;
  std::vector<std::vector<Point>> colors;
  std::optional<Point> target;

  std::size_t num_colors() const { return colors.size(); }
  std::size_t num_points() const;

  // Throws ClpError(kDimensionOrEmpty) if an invariant fails.
  void validate() const;

  // Row-major flattening: color 0's points first.
  std::vector<Point> flattened() const;
  const Point& point(int color, int index) const { return colors[color][index]; }

  bool operator==(const PointConfiguration&) const = default;
};

struct PointRef {
  int color = 0;
  int index = 0;
  bool operator==(const PointRef&) const = default;
  auto operator<=>(const PointRef&) const = default;
};

// At most one pick per color; picks[i] indexes into S_i.
class ColorfulSelection {
 public:
  ColorfulSelection() = default;
  explicit ColorfulSelection(std::size_t num_colors) : picks_(num_colors) {}
  explicit ColorfulSelection(std::vector<std::optional<int>> picks)
      : picks_(std::move(picks)) {}

  std::size_t num_colors() const { return picks_.size(); }
  const std::optional<int>& pick(std::size_t color) const { return picks_[color]; }
  void set(std::size_t color, std::optional<int> index) { picks_[color] = index; }
  const std::vector<std::optional<int>>& picks() const { return picks_; }

  std::size_t size() const;
  bool is_full() const { return size() == picks_.size(); }
  // Picked points in color order.
  std::vector<PointRef> refs() const;
  std::vector<Point> points(const PointConfiguration& config) const;

  bool operator==(const ColorfulSelection&) const = default;
  auto operator<=>(const ColorfulSelection&) const = default;

 private:
  std::vector<std::optional<int>> picks_;
};

// λ ≥ 0, Σλ = 1, Σλx = 0, weights aligned with the certified point list.
struct ConvexCertificate {
  Vector weights;
};

// y·x > 0 for every point x of the refuted set.
struct FarkasCertificate {
  Vector normal;
};

struct DependenceResult {
  bool dependent = false;
  ConvexCertificate convex;  // valid when dependent
  FarkasCertificate farkas;  // valid otherwise
};

// Either x ≥ 0 with Ax = b, or y with yᵀA ≥ 0 and yᵀb < 0.
struct LpResult {
  bool feasible = false;
  Vector x;
  Vector y;
};

// μ ≥ 0 with Σμt = p, or y with y·t ≥ 0 for all t and y·p < 0.
struct ConeResult {
  bool member = false;
  Vector multipliers;
  Vector separator;
};

// Phase-I dense tableau simplex, Bland's rule, exact. Total.
LpResult lp_feasibility(const Matrix& a, std::span<const Rational> b);
bool verify_lp(const Matrix& a, std::span<const Rational> b, const LpResult& result);

// Throws ClpError(kDimensionOrEmpty) on empty input or mixed dimensions.
DependenceResult is_positively_dependent(std::span<const Point> points);
bool verify_convex(std::span<const Point> points, const ConvexCertificate& cert);
bool verify_farkas(std::span<const Point> points, const FarkasCertificate& cert);

ConeResult cone_member(std::span<const Point> points, const Point& target);
bool verify_cone(std::span<const Point> points, const Point& target, const ConeResult& result);

// Budget for exhaustive searches; COLORFUL_BUDGET overrides the default 10^6.
std::uint64_t default_budget();

struct EnumerateOptions {
  std::uint64_t budget = default_budget();
  bool parallel = true;
};

// All full colorful selections whose point set is positively dependent
// (or, when the configuration has a target, whose cone contains it),
// in lexicographic order of picks. Throws kBudgetExceeded.
std::vector<ColorfulSelection> enumerate_pdcs(const PointConfiguration& config,
                                              const EnumerateOptions& options = {});
// Single-threaded reference for the parallel kernel.
std::vector<ColorfulSelection> enumerate_pdcs_serial(const PointConfiguration& config,
                                                     std::uint64_t budget = default_budget());

struct GeneralPositionOptions {
  bool include_origin = false;
  // Exhaustive check over (d+1)-subsets while their count stays below this.
  std::uint64_t budget = default_budget();
  // Past the budget: this many uniformly sampled subsets...
  std::size_t samples = 2000;
  std::uint64_t seed = 0x5eed;
  // ...unless full verification is requested.
  bool full_verification = false;
  // OpenMP over subset batches; false runs the serial reference.
  bool parallel = true;
};

// No d+1 points (optionally with the origin) in a common affine hyperplane;
// no two points coincide.
bool is_general_position(const PointConfiguration& config,
                         const GeneralPositionOptions& options = {});

struct PerturbOptions {
  bool preserve_dependence = false;
  GeneralPositionOptions general_position;
  int max_halvings = 64;
};

// Flattened point j moves by ε^(j+1) along w_j = (1, j+1, (j+1)^2, ...),
// halving ε until the output is in general position. With
// preserve_dependence, every positively dependent color is then translated
// by -Σ λ_j·displacement_j so its convex certificate λ still holds.
PointConfiguration perturb(const PointConfiguration& config, const Rational& epsilon,
                           const PerturbOptions& options = {});

}  // namespace clp

#endif  // COLORFUL_GEOMETRY_HPP_
