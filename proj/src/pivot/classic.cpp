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


#include <algorithm>
#include <chrono>
#include <optional>
#include <random>
#include <set>

#include "colorful/pivot.hpp"
#include "solver_common.hpp"

namespace clp {

namespace {

// Row `row` of the adjugate of a basis of lifted columns D·(x, 1) is a
// hyperplane g·x + h = 0 through every vertex except the one at `row`, with
// g = adj(row, 0..d-1) and h = adj(row, d).
struct FacetChoice {
  std::size_t row;
  Integer h_sq;
  Integer g_sq;
};

// Closest separating facet of the simplex held by `inverse`: rows with a
// negative barycentric coordinate of 0, compared by h²/‖g‖². nullopt when
// 0 lies in the simplex.
std::optional<FacetChoice> closest_facet(const ExactBasisInverse& inverse,
                                         const std::vector<std::size_t>& order) {
  const auto n = inverse.size();
  const auto last = n - 1;
  const auto& adj = inverse.adjugate();
  const int sign = sgn(inverse.scale());
  std::optional<FacetChoice> best;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(adj(i, last)) * sign >= 0) continue;
    FacetChoice c{i, adj(i, last) * adj(i, last), 0};
    for (std::size_t r = 0; r < last; ++r) mpz_addmul(c.g_sq.get_mpz_t(), adj(i, r).get_mpz_t(), adj(i, r).get_mpz_t());
    if (!best) {
      best = std::move(c);
      continue;
    }
    const int cmp_dist = cmp(Integer(c.h_sq * best->g_sq), Integer(best->h_sq * c.g_sq));
    if (cmp_dist < 0 || (cmp_dist == 0 && order[i] < order[best->row])) best = std::move(c);
  }
  return best;
}

std::optional<ExactBasisInverse> factor_points(const LiftedColumns& columns,
                                               const std::vector<std::size_t>& cols) {
  std::vector<std::span<const Integer>> spans;
  for (auto j : cols) spans.push_back(columns.column(j));
  return ExactBasisInverse::factor(spans);
}

struct ClassicStart {
  std::vector<std::size_t> cols;  // by color
  ExactBasisInverse inverse;
};

ClassicStart initial_simplex(const PointConfiguration& config, const LiftedColumns& columns,
                             const SolveOptions& options) {
  for (std::uint64_t attempt = 0; attempt <= 64; ++attempt) {
    const auto rule = attempt == 0 ? options.initial : InitialRule::kSeededRandom;
    auto f = initial_transversal(config, rule, options.seed + attempt);
    const auto d = static_cast<std::size_t>(config.dimension);
    int last = 0;
    if (rule == InitialRule::kSeededRandom) {
      std::mt19937_64 rng(options.seed + attempt + 0x9e3779b97f4a7c15ULL);
      std::uniform_int_distribution<int> pick(0, static_cast<int>(config.colors[d].size()) - 1);
      last = pick(rng);
    }
    f.set(d, last);
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i <= d; ++i) cols.push_back(columns.flat_index(static_cast<int>(i), *f.pick(i)));
    if (auto inv = factor_points(columns, cols)) return {std::move(cols), *std::move(inv)};
  }
  throw ClpError(ErrorKind::kDegenerateTransversal, "no affinely independent initial simplex found");
}

// Exit facet of the segment from the fixed point P (homogeneous, lifted) to
// the origin Z: the row whose barycentric coordinate first reaches zero.
struct ExitChoice {
  std::size_t row;
  Integer b;  // coordinate of P
  Integer l;  // coordinate of Z
};

std::optional<ExitChoice> exit_facet(const ExactBasisInverse& inverse,
                                     std::span<const Integer> p, std::span<const Integer> z) {
  const int sign = sgn(inverse.scale());
  std::optional<ExitChoice> best;
  bool inside = true;
  for (std::size_t i = 0; i < inverse.size(); ++i) {
    ExitChoice c{i, inverse.row_dot(i, p) * sign, inverse.row_dot(i, z) * sign};
    if (c.l < 0) inside = false;
    if (c.l >= c.b) continue;
    if (!best) {
      best = std::move(c);
      continue;
    }
    // θ = b/(b - l); both denominators positive.
    const int cmp_theta = cmp(Integer(c.b * (best->b - best->l)), Integer(best->b * (c.b - c.l)));
    if (cmp_theta < 0) best = std::move(c);
  }
  if (inside) return std::nullopt;
  if (!best || best->l >= 0) throw ClpError(ErrorKind::kDegenerateState, "segment misses the simplex");
  return best;
}

SolveResult run_classic(const PointConfiguration& config, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  result.report.backend = Backend::kExact;
  result.report.rule = options.rule;
  const LiftedColumns columns(config);
  auto [cols, inverse] = initial_simplex(config, columns, options);
  const auto n = inverse.size();
  const auto last = n - 1;

  // Barycenter of T₁ and the origin, both lifted and scaled by d+1.
  std::vector<Integer> p(n), z(n);
  for (auto j : cols)
    for (std::size_t r = 0; r < n; ++r) p[r] += columns.column(j)[r];
  z[last] = p[last];

  auto snapshot = [&] {
    ColorfulSelection s(config.num_colors());
    for (auto j : cols) {
      const auto ref = columns.ref(j);
      s.set(static_cast<std::size_t>(ref.color), ref.index);
    }
    return s;
  };

  std::set<std::vector<std::size_t>> seen;
  while (true) {
    result.report.simplex_trace.push_back(snapshot());
    std::size_t row = 0;
    if (options.facet == FacetRule::kRayExit) {
      const auto exit = exit_facet(inverse, p, z);
      if (!exit) break;
      row = exit->row;
      result.report.objective_trace.push_back(make_rational(-exit->l, exit->b - exit->l));
    } else {
      const auto facet = closest_facet(inverse, cols);
      if (!facet) break;
      row = facet->row;
      result.report.objective_trace.push_back(make_rational(facet->h_sq, facet->g_sq));
      auto key = cols;
      std::sort(key.begin(), key.end());
      if (!seen.insert(std::move(key)).second) {
        throw ClpError(ErrorKind::kCycleDetected, "colorful simplex revisited");
      }
    }
    if (result.report.pivots >= options.max_pivots) {
      throw ClpError(ErrorKind::kBudgetExceeded, "pivot limit reached");
    }
    // Entering point: first point of the dropped color strictly on the
    // origin's side of the facet hyperplane.
    const int color = columns.color_of(cols[row]);
    const int origin_side = sgn(inverse.adjugate()(row, last));
    std::optional<std::size_t> entering;
    for (int i = 0; i < static_cast<int>(config.colors[color].size()); ++i) {
      const auto j = columns.flat_index(color, i);
      if (sgn(inverse.row_dot(row, columns.column(j))) == origin_side) {
        entering = j;
        break;
      }
    }
    if (!entering) {
      throw ClpError(ErrorKind::kDegenerateState,
                     "no point of color " + std::to_string(color) + " on the origin's side");
    }
    inverse.replace(row, inverse.transform(columns.column(*entering)));
    cols[row] = *entering;
    ++result.report.pivots;
  }
  result.report.objective_trace.push_back(0);
  result.report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  result.selection = snapshot();
  Vector x = inverse.solution();
  // cols is indexed by color, so the weights already are in color order.
  for (auto& v : x) v *= Rational(columns.denominator());
  result.certificate.weights = std::move(x);
  return result;
}

}  // namespace

SolveResult solve_classic_bo(const PointConfiguration& config, const SolveOptions& options) {
  const auto prepared = detail::prepare_instance(config, options);
  const PointConfiguration& working = prepared.perturbed ? *prepared.working : config;
  SolveResult result = run_classic(working, options);
  detail::finish_result(config, prepared, result);
  return result;
}

std::vector<std::size_t> separating_facet(std::span<const Point> simplex) {
  if (simplex.empty()) throw ClpError(ErrorKind::kDimensionOrEmpty, "empty simplex");
  const std::size_t d = simplex.front().size();
  if (simplex.size() != d + 1) {
    throw ClpError(ErrorKind::kMalformedInput, "separating_facet needs d+1 points in R^d");
  }
  PointConfiguration config;
  config.dimension = static_cast<int>(d);
  for (const auto& p : simplex) config.colors.push_back({p});
  const LiftedColumns columns(config);
  std::vector<std::size_t> cols(d + 1);
  for (std::size_t i = 0; i <= d; ++i) cols[i] = i;
  auto inverse = factor_points(columns, cols);
  if (!inverse) throw ClpError(ErrorKind::kDegenerateState, "points are affinely dependent");
  const auto facet = closest_facet(*inverse, cols);
  if (!facet) throw ClpError(ErrorKind::kNotSeparable, "origin lies in the simplex");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= d; ++i)
    if (i != facet->row) out.push_back(i);
  return out;
}

}  // namespace clp
