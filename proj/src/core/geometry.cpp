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

#include "colorful/geometry.hpp"

#include <cstdlib>
#include <string>

#include "colorful/errors.hpp"
#include "colorful/linalg.hpp"

namespace clp {

std::size_t PointConfiguration::num_points() const {
  std::size_t n = 0;
  for (const auto& c : colors) n += c.size();
  return n;
}

void PointConfiguration::validate() const {
  if (dimension < 1) throw ClpError(ErrorKind::kDimensionOrEmpty, "dimension must be >= 1");
  if (colors.empty()) throw ClpError(ErrorKind::kDimensionOrEmpty, "need at least one color");
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i].empty()) {
      throw ClpError(ErrorKind::kDimensionOrEmpty, "color " + std::to_string(i) + " is empty");
    }
    for (const auto& p : colors[i]) {
      if (p.size() != static_cast<std::size_t>(dimension)) {
        throw ClpError(ErrorKind::kDimensionOrEmpty,
                       "point of color " + std::to_string(i) + " has wrong dimension");
      }
    }
  }
  if (target && target->size() != static_cast<std::size_t>(dimension)) {
    throw ClpError(ErrorKind::kDimensionOrEmpty, "target has wrong dimension");
  }
}

std::vector<Point> PointConfiguration::flattened() const {
  std::vector<Point> out;
  out.reserve(num_points());
  for (const auto& c : colors) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::size_t ColorfulSelection::size() const {
  std::size_t n = 0;
  for (const auto& p : picks_) n += p.has_value();
  return n;
}

std::vector<PointRef> ColorfulSelection::refs() const {
  std::vector<PointRef> out;
  for (std::size_t i = 0; i < picks_.size(); ++i) {
    if (picks_[i]) out.push_back({static_cast<int>(i), *picks_[i]});
  }
  return out;
}

std::vector<Point> ColorfulSelection::points(const PointConfiguration& config) const {
  std::vector<Point> out;
  for (const auto& r : refs()) out.push_back(config.point(r.color, r.index));
  return out;
}

namespace {

std::size_t common_dimension(std::span<const Point> points) {
  if (points.empty()) throw ClpError(ErrorKind::kDimensionOrEmpty, "empty point set");
  const std::size_t d = points.front().size();
  if (d == 0) throw ClpError(ErrorKind::kDimensionOrEmpty, "zero-dimensional points");
  for (const auto& p : points) {
    if (p.size() != d) throw ClpError(ErrorKind::kDimensionOrEmpty, "mixed dimensions");
  }
  return d;
}

// d+1 affinely independent points: the barycentric coordinates of the
// origin decide membership, and a negative coordinate's facet row of the
// inverse lifted matrix is a strict separator.
std::optional<DependenceResult> simplex_fast_path(std::span<const Point> points, std::size_t d) {
  const std::size_t n = d + 1;
  Matrix lifted(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < d; ++r) lifted(r, c) = points[c][r];
    lifted(d, c) = 1;
  }
  std::vector<Integer> scale(n);
  IntegerMatrix ints(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector col = lifted.column(c);
    scale[c] = common_denominator(col);
    for (std::size_t r = 0; r < n; ++r) ints(r, c) = Rational(col[r] * scale[c]).get_num();
  }
  std::vector<Integer> e_last(n);
  e_last[d] = 1;
  auto sol = fraction_free_solve(ints, std::move(e_last));
  if (!sol) return std::nullopt;
  const int sign = sgn(sol->scale);
  // λ_c = scale_c · y_c / det, so sign(λ_c) = sign(y_c) · sign(det).
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(sol->numerators[c]) * sign >= 0) continue;
    // Row c of the inverse: zero on the other points, so its first d
    // entries (signed by det) strictly separate every point from 0.
    IntegerMatrix transposed(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) transposed(r, k) = ints(k, r);
    std::vector<Integer> e_c(n);
    e_c[c] = 1;
    const auto row = fraction_free_solve(std::move(transposed), std::move(e_c));
    DependenceResult result;
    result.farkas.normal.resize(d);
    const int row_sign = sgn(row->scale);
    for (std::size_t r = 0; r < d; ++r) result.farkas.normal[r] = Rational(row_sign * row->numerators[r]);
    return result;
  }
  DependenceResult result;
  result.dependent = true;
  result.convex.weights.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    result.convex.weights[c] = make_rational(scale[c] * sol->numerators[c], sol->scale);
  }
  return result;
}

}  // namespace

DependenceResult is_positively_dependent(std::span<const Point> points) {
  const std::size_t d = common_dimension(points);
  if (points.size() == d + 1) {
    if (auto fast = simplex_fast_path(points, d)) return *std::move(fast);
  }
  // [X; 1ᵀ] λ = (0, 1), λ ≥ 0.
  Matrix a(d + 1, points.size());
  for (std::size_t c = 0; c < points.size(); ++c) {
    for (std::size_t r = 0; r < d; ++r) a(r, c) = points[c][r];
    a(d, c) = 1;
  }
  Vector b(d + 1);
  b[d] = 1;
  LpResult lp = lp_feasibility(a, b);
  DependenceResult result;
  result.dependent = lp.feasible;
  if (lp.feasible) {
    result.convex.weights = std::move(lp.x);
  } else {
    // yᵀ[x; 1] ≥ 0 and y_last < 0 give y_x·x ≥ -y_last > 0.
    result.farkas.normal.assign(lp.y.begin(), lp.y.begin() + static_cast<long>(d));
  }
  return result;
}

bool verify_convex(std::span<const Point> points, const ConvexCertificate& cert) {
  if (points.empty() || cert.weights.size() != points.size()) return false;
  const std::size_t d = points.front().size();
  Vector combination(d);
  Rational total = 0;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (cert.weights[j] < 0 || points[j].size() != d) return false;
    total += cert.weights[j];
    for (std::size_t r = 0; r < d; ++r) combination[r] += cert.weights[j] * points[j][r];
  }
  if (total != 1) return false;
  for (const auto& v : combination) {
    if (v != 0) return false;
  }
  return true;
}

bool verify_farkas(std::span<const Point> points, const FarkasCertificate& cert) {
  if (points.empty()) return false;
  for (const auto& p : points) {
    if (p.size() != cert.normal.size() || dot(cert.normal, p) <= 0) return false;
  }
  return true;
}

ConeResult cone_member(std::span<const Point> points, const Point& target) {
  const std::size_t d = target.size();
  if (d == 0) throw ClpError(ErrorKind::kDimensionOrEmpty, "zero-dimensional target");
  ConeResult result;
  if (points.empty()) {
    // cone(∅) = {0}.
    result.member = true;
    for (const auto& v : target) result.member = result.member && v == 0;
    if (!result.member) {
      result.separator.resize(d);
      for (std::size_t r = 0; r < d; ++r) result.separator[r] = -target[r];
    }
    return result;
  }
  if (common_dimension(points) != d) throw ClpError(ErrorKind::kDimensionOrEmpty, "mixed dimensions");
  Matrix a(d, points.size());
  for (std::size_t c = 0; c < points.size(); ++c)
    for (std::size_t r = 0; r < d; ++r) a(r, c) = points[c][r];
  LpResult lp = lp_feasibility(a, target);
  result.member = lp.feasible;
  if (lp.feasible) {
    result.multipliers = std::move(lp.x);
  } else {
    result.separator = std::move(lp.y);
  }
  return result;
}

bool verify_cone(std::span<const Point> points, const Point& target, const ConeResult& result) {
  const std::size_t d = target.size();
  if (result.member) {
    if (result.multipliers.size() != points.size()) return false;
    Vector combination(d);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (result.multipliers[j] < 0) return false;
      for (std::size_t r = 0; r < d; ++r) combination[r] += result.multipliers[j] * points[j][r];
    }
    return combination == target;
  }
  if (result.separator.size() != d) return false;
  for (const auto& p : points) {
    if (dot(result.separator, p) < 0) return false;
  }
  return dot(result.separator, target) < 0;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("COLORFUL_BUDGET")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // Ignore unparsable overrides.
    }
  }
  return 1'000'000;
}

}  // namespace clp
