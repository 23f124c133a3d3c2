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

// Pivoting algorithms for the colorful Carathéodory search problem.
//
// Both solvers take d+1 positively dependent color classes in Q^d and return
// a positively dependent colorful set with an exact convex certificate.
//
//  * solve_simplexlike(): phase-I style. A dummy point v is added and the
//    auxiliary program  min z  s.t.  Aλ + z·(v, 1) = (0, ..., 0, 1),
//    λ, z ≥ 0  is pivoted from the colorful basis F₁ ∪ {v}, always entering
//    a point of the color missing from the current transversal. The run ends
//    when v leaves the basis.
//  * solve_classic_bo(): keeps a colorful simplex T, drops a vertex whose
//    opposite facet separates it from the origin and enters a point of the
//    same color on the origin's side of that facet. The facet is either the
//    one where the segment from the barycenter of T₁ to 0 leaves conv(T)
//    (default; the exit point moves strictly towards 0, so no simplex
//    repeats) or the separating facet whose hull is closest to 0.
//
// The exact backend works on integer columns (all coordinates multiplied by
// one common denominator) and keeps the basis inverse as adjugate/scale, so
// every update is an exact integer division and no gcd is ever taken.

#ifndef COLORFUL_PIVOT_HPP_
#define COLORFUL_PIVOT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "colorful/errors.hpp"
#include "colorful/geometry.hpp"
#include "colorful/linalg.hpp"

namespace clp {

enum class PivotRule { kDantzig, kBland };
enum class Backend { kExact, kFloat64 };
enum class InitialRule { kFirstPoint, kSeededRandom };
enum class FacetRule { kRayExit, kClosest };

std::string_view to_string(PivotRule rule);
std::string_view to_string(Backend backend);
PivotRule parse_pivot_rule(std::string_view text);
Backend parse_backend(std::string_view text);

// Raised when a color class is not positively dependent; carries the
// separating vector for that class.
class HypothesisViolated : public ClpError {
 public:
  HypothesisViolated(int color, FarkasCertificate certificate)
      : ClpError(ErrorKind::kHypothesisViolated,
                 "color " + std::to_string(color) + " does not contain the origin in its hull"),
        color_(color), certificate_(std::move(certificate)) {}
  int color() const { return color_; }
  const FarkasCertificate& certificate() const { return certificate_; }

 private:
  int color_;
  FarkasCertificate certificate_;
};

struct SolveOptions {
  PivotRule rule = PivotRule::kDantzig;
  Backend backend = Backend::kExact;
  InitialRule initial = InitialRule::kFirstPoint;
  std::uint64_t seed = 0;
  // Switch Dantzig to Bland after 2(d+1)² pivots without a strict decrease
  // of z. With this off, a revisited basis raises CycleDetected.
  bool anti_cycling = true;
  // Check the hypothesis (every color positively dependent) up front.
  bool check_hypothesis = true;
  // Check general position and perturb degenerate inputs before solving.
  bool check_general_position = true;
  GeneralPositionOptions general_position;
  FacetRule facet = FacetRule::kRayExit;  // classic solver only
  double float_tolerance = 1e-9;
  std::size_t max_pivots = 1'000'000;
};

struct SolveReport {
  std::size_t pivots = 0;
  double wall_time_ms = 0.0;
  PivotRule rule = PivotRule::kDantzig;  // rule in force at termination
  Backend backend = Backend::kExact;
  // Simplex-like: z per basis. Classic: per iteration the fraction of the
  // barycenter-to-origin segment still outside conv(T) (ray exit rule) or
  // the squared distance from 0 to the chosen facet hyperplane (closest
  // rule), then 0.
  std::vector<Rational> objective_trace;
  bool switched_to_bland = false;
  // Solved on a perturbed copy and the selection did not certify on the
  // original points; the certificate then refers to the perturbed points.
  bool perturbed = false;
  // Float run whose final basis failed exact re-verification; the result
  // comes from an exact re-solve.
  bool float_fallback = false;
  // Classic solver only: the colorful simplex T_i of every iteration.
  std::vector<ColorfulSelection> simplex_trace;
};

struct SolveResult {
  ColorfulSelection selection;
  ConvexCertificate certificate;  // aligned with selection.refs()
  SolveReport report;
};

// Deterministic: first point of colors 0..d-1. Seeded: uniform per color.
// Color d is the missing one.
ColorfulSelection initial_transversal(const PointConfiguration& config,
                                      InitialRule rule = InitialRule::kFirstPoint,
                                      std::uint64_t seed = 0);

// v = -Σ u over the transversal. Throws DegenerateTransversal when
// F ∪ {v} is affinely dependent.
Point dummy_point(std::span<const Point> transversal);

// Integer lifted columns shared by the exact states: column j of the flattened
// configuration is D·(x_j, 1) for the common denominator D.
class LiftedColumns {
 public:
  explicit LiftedColumns(const PointConfiguration& config);

  std::size_t rows() const { return rows_; }
  std::size_t size() const { return columns_.size(); }
  std::span<const Integer> column(std::size_t j) const { return columns_[j]; }
  const Integer& denominator() const { return denominator_; }
  int color_of(std::size_t j) const { return color_of_[j]; }
  std::size_t flat_index(int color, int index) const { return offsets_[color] + index; }
  PointRef ref(std::size_t j) const {
    return {color_of_[j], static_cast<int>(j - offsets_[color_of_[j]])};
  }
  std::vector<Integer> lift(std::span<const Rational> point) const;

 private:
  std::size_t rows_ = 0;
  Integer denominator_;
  std::vector<std::vector<Integer>> columns_;
  std::vector<int> color_of_;
  std::vector<std::size_t> offsets_;
};

// Inverse of a basis of lifted integer columns, stored as adjugate/scale.
class ExactBasisInverse {
 public:
  // nullopt when the columns are linearly dependent.
  static std::optional<ExactBasisInverse> factor(const std::vector<std::span<const Integer>>& cols);

  std::size_t size() const { return adjugate_.rows(); }
  const Integer& scale() const { return scale_; }
  const IntegerMatrix& adjugate() const { return adjugate_; }

  // scale · B⁻¹ a
  std::vector<Integer> transform(std::span<const Integer> a) const;
  Integer row_dot(std::size_t row, std::span<const Integer> a) const;
  // Replace the basis column at `row` by the column whose transform is w.
  void replace(std::size_t row, std::span<const Integer> w);
  // B⁻¹ e_last as exact rationals (in scaled variables).
  Vector solution() const;

 private:
  Integer scale_;
  IntegerMatrix adjugate_;
};

// Exact state of the simplex-like algorithm: transversal F plus the dummy
// point v in the basis.
class PivotState {
 public:
  // Throws DegenerateTransversal when F ∪ {v} is affinely dependent.
  PivotState(const PointConfiguration& config, const ColorfulSelection& transversal);

  const PointConfiguration& config() const { return *config_; }
  const Point& dummy() const { return dummy_; }
  bool dummy_in_basis() const { return dummy_row_.has_value(); }
  int missing_color() const { return missing_color_; }
  // F (the basis minus v), by color.
  ColorfulSelection transversal() const;
  // Basic variables by basis position; the dummy shows up as nullopt.
  std::vector<std::optional<PointRef>> basis() const;

  // Current value of z (weight on the dummy); 0 once it left.
  Rational objective() const;
  // s/r from r·t̄ + s·v̄ + Σ x_i·ū_i = 0 with r > 0.
  // Throws DegenerateState for basic t, s = 0, or a dummy already gone.
  Rational reduced_cost(PointRef t) const;
  // Same sign as reduced_cost; positive rescaling shared by the whole state.
  Integer reduced_cost_key(PointRef t) const;

  // Enters t (must have the missing color and negative reduced cost). Ratio
  // ties go to the lowest basis column index. Returns true when v left.
  bool pivot_once(PointRef t);

  // Convex weights of the current basis in original variables, aligned with
  // basis(); only meaningful once the dummy left.
  Vector basic_weights() const;
  // Columns by basis position (dummy = size of the column pool).
  const std::vector<std::size_t>& basis_columns() const { return basis_cols_; }

 private:
  std::span<const Integer> column(std::size_t j) const;

  const PointConfiguration* config_;
  LiftedColumns columns_;
  Point dummy_;
  std::vector<Integer> dummy_column_;
  std::vector<std::size_t> basis_cols_;
  std::optional<std::size_t> dummy_row_;
  int missing_color_ = 0;
  ExactBasisInverse inverse_;
};

// Simplex-like pivoting on the auxiliary dummy-point program.
SolveResult solve_simplexlike(const PointConfiguration& config, const SolveOptions& options = {});

// Classic Bárány-Onn pivoting. With FacetRule::kClosest a repeated simplex
// raises CycleDetected.
SolveResult solve_classic_bo(const PointConfiguration& config, const SolveOptions& options = {});

// For d+1 affinely independent points with 0 ∉ conv(T): the indices of the
// d points of the separating facet closest to the origin (ties: lowest index
// of the dropped vertex). Throws NotSeparable when 0 ∈ conv(T).
std::vector<std::size_t> separating_facet(std::span<const Point> simplex);

// Exact check of the solver contract: full, colorful, certificate valid.
bool verify_solution(const PointConfiguration& config, const ColorfulSelection& selection,
                     const ConvexCertificate& certificate);

}  // namespace clp

#endif  // COLORFUL_PIVOT_HPP_
