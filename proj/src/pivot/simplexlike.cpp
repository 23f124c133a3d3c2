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
#include <cmath>
#include <set>

#include "colorful/pivot.hpp"
#include "solver_common.hpp"

namespace clp {

namespace detail {

PreparedInstance prepare_instance(const PointConfiguration& config, const SolveOptions& options) {
  config.validate();
  const auto d = static_cast<std::size_t>(config.dimension);
  if (config.num_colors() != d + 1) {
    throw ClpError(ErrorKind::kDimensionOrEmpty, "pivot solvers need exactly d+1 colors");
  }
  if (options.check_hypothesis) {
    for (std::size_t i = 0; i < config.num_colors(); ++i) {
      auto dep = is_positively_dependent(config.colors[i]);
      if (!dep.dependent) throw HypothesisViolated(static_cast<int>(i), std::move(dep.farkas));
    }
  }
  PreparedInstance prepared;
  if (options.check_general_position && !is_general_position(config, options.general_position)) {
    PerturbOptions perturb_options;
    perturb_options.preserve_dependence = true;
    perturb_options.general_position = options.general_position;
    prepared.working = perturb(config, make_rational(1, 1024), perturb_options);
    prepared.perturbed = true;
  }
  return prepared;
}

void finish_result(const PointConfiguration& original, const PreparedInstance& prepared,
                   SolveResult& result) {
  if (prepared.perturbed) {
    const auto pts = result.selection.points(original);
    auto dep = is_positively_dependent(pts);
    if (dep.dependent) {
      result.certificate = std::move(dep.convex);
    } else {
      result.report.perturbed = true;
    }
  }
  const auto& checked = result.report.perturbed ? *prepared.working : original;
  if (!verify_solution(checked, result.selection, result.certificate)) {
    throw ClpError(ErrorKind::kVerificationFailed, "solver output failed exact verification");
  }
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

PivotState make_initial_state(const PointConfiguration& config, const SolveOptions& options) {
  try {
    return PivotState(config, initial_transversal(config, options.initial, options.seed));
  } catch (const ClpError& e) {
    if (e.kind() != ErrorKind::kDegenerateTransversal) throw;
  }
  for (std::uint64_t attempt = 1; attempt <= 64; ++attempt) {
    try {
      return PivotState(config, initial_transversal(config, InitialRule::kSeededRandom,
                                                    options.seed + attempt));
    } catch (const ClpError& e) {
      if (e.kind() != ErrorKind::kDegenerateTransversal) throw;
    }
  }
  throw ClpError(ErrorKind::kDegenerateTransversal, "no nondegenerate initial transversal found");
}

// Tracks stalls and revisited bases for the anti-cycling policy.
class CycleGuard {
 public:
  CycleGuard(std::size_t dimension, bool anti_cycling)
      : stall_limit_(2 * (dimension + 1) * (dimension + 1)), anti_cycling_(anti_cycling) {}

  // Returns true when the caller should switch to Bland's rule.
  bool record(std::vector<std::size_t> basis, bool strict_decrease, PivotRule rule) {
    stall_ = strict_decrease ? 0 : stall_ + 1;
    if (strict_decrease) {
      seen_.clear();
    }
    std::sort(basis.begin(), basis.end());
    const bool revisit = !seen_.insert(std::move(basis)).second;
    if (revisit) {
      if (rule == PivotRule::kBland || !anti_cycling_) {
        throw ClpError(ErrorKind::kCycleDetected, "basis revisited");
      }
      seen_.clear();
      return true;
    }
    return anti_cycling_ && rule == PivotRule::kDantzig && stall_ > stall_limit_;
  }

 private:
  std::size_t stall_ = 0;
  std::size_t stall_limit_;
  bool anti_cycling_;
  std::set<std::vector<std::size_t>> seen_;
};

SolveResult run_exact(const PointConfiguration& config, const SolveOptions& options) {
  const auto start = Clock::now();
  SolveResult result;
  result.report.backend = Backend::kExact;
  PivotRule rule = options.rule;
  PivotState state = make_initial_state(config, options);
  CycleGuard guard(static_cast<std::size_t>(config.dimension), options.anti_cycling);
  result.report.objective_trace.push_back(state.objective());
  bool done = false;
  while (!done) {
    if (result.report.pivots >= options.max_pivots) {
      throw ClpError(ErrorKind::kBudgetExceeded, "pivot limit reached");
    }
    const int color = state.missing_color();
    std::optional<PointRef> entering;
    Integer best;
    for (int i = 0; i < static_cast<int>(config.colors[color].size()); ++i) {
      const PointRef t{color, i};
      Integer key = state.reduced_cost_key(t);
      if (key >= 0) continue;
      if (rule == PivotRule::kBland) {
        entering = t;
        break;
      }
      if (!entering || key < best) {
        entering = t;
        best = std::move(key);
      }
    }
    if (!entering) {
      throw ClpError(ErrorKind::kDegenerateState,
                     "no point of the missing color has a negative reduced cost");
    }
    done = state.pivot_once(*entering);
    ++result.report.pivots;
    const Rational z = state.objective();
    const bool decreased = z < result.report.objective_trace.back();
    result.report.objective_trace.push_back(z);
    if (!done && guard.record(state.basis_columns(), decreased, rule)) {
      rule = PivotRule::kBland;
      result.report.switched_to_bland = true;
    }
  }
  result.report.wall_time_ms = elapsed_ms(start);
  result.report.rule = rule;

  result.selection = state.transversal();
  const Vector weights = state.basic_weights();
  const auto basis = state.basis();
  // Reorder from basis positions to color order.
  std::vector<Rational> by_color(config.num_colors());
  for (std::size_t p = 0; p < basis.size(); ++p) by_color[basis[p]->color] = weights[p];
  result.certificate.weights = std::move(by_color);
  return result;
}

// Binary64 twin of PivotState: explicit inverse, eta updates and periodic
// refactorization.
class FloatState {
 public:
  FloatState(const PointConfiguration& config, const ColorfulSelection& f, double tolerance)
      : n_(static_cast<std::size_t>(config.dimension) + 1), tolerance_(tolerance) {
    for (std::size_t i = 0; i < config.num_colors(); ++i) {
      offsets_.push_back(columns_.size());
      for (const auto& p : config.colors[i]) {
        std::vector<double> col(n_);
        for (std::size_t r = 0; r + 1 < n_; ++r) col[r] = p[r].get_d();
        col[n_ - 1] = 1.0;
        columns_.push_back(std::move(col));
        color_of_.push_back(static_cast<int>(i));
      }
    }
    std::vector<double> v(n_, 0.0);
    for (std::size_t i = 0; i < f.num_colors(); ++i) {
      if (!f.pick(i)) {
        missing_ = static_cast<int>(i);
        continue;
      }
      const auto j = offsets_[i] + static_cast<std::size_t>(*f.pick(i));
      basis_.push_back(j);
      for (std::size_t r = 0; r + 1 < n_; ++r) v[r] -= columns_[j][r];
    }
    v[n_ - 1] = 1.0;
    dummy_ = columns_.size();
    columns_.push_back(std::move(v));
    dummy_row_ = static_cast<int>(basis_.size());
    basis_.push_back(dummy_);
    refactor();
  }

  int missing_color() const { return missing_; }
  bool done() const { return dummy_row_ < 0; }
  double objective() const { return done() ? 0.0 : inverse_[idx(dummy_row_, n_ - 1)]; }

  double reduced_cost(std::size_t j) const {
    double acc = 0.0;
    for (std::size_t c = 0; c < n_; ++c) acc += inverse_[idx(dummy_row_, c)] * columns_[j][c];
    return -acc;
  }

  std::size_t column(int color, int index) const {
    return offsets_[color] + static_cast<std::size_t>(index);
  }

  void pivot(std::size_t entering) {
    std::vector<double> w(n_, 0.0);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) w[r] += inverse_[idx(r, c)] * columns_[entering][c];
    std::optional<std::size_t> leaving;
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (w[i] <= tolerance_) continue;
      const double ratio = inverse_[idx(i, n_ - 1)] / w[i];
      if (!leaving || ratio < best - tolerance_ ||
          (std::abs(ratio - best) <= tolerance_ && basis_[i] < basis_[*leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    if (!leaving) throw ClpError(ErrorKind::kDegenerateState, "unbounded direction (float)");
    const std::size_t row = *leaving;
    const std::size_t out = basis_[row];
    basis_[row] = entering;
    if (++updates_ % 32 == 0) {
      refactor();
    } else {
      const double p = w[row];
      for (std::size_t c = 0; c < n_; ++c) inverse_[idx(row, c)] /= p;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == row || w[i] == 0.0) continue;
        for (std::size_t c = 0; c < n_; ++c) inverse_[idx(i, c)] -= w[i] * inverse_[idx(row, c)];
      }
    }
    if (out == dummy_) {
      dummy_row_ = -1;
      missing_ = -1;
    } else {
      missing_ = color_of_[out];
    }
  }

  ColorfulSelection selection(std::size_t num_colors) const {
    ColorfulSelection s(num_colors);
    for (auto j : basis_) {
      if (j == dummy_) continue;
      s.set(static_cast<std::size_t>(color_of_[j]), static_cast<int>(j - offsets_[color_of_[j]]));
    }
    return s;
  }

  std::vector<std::size_t> basis_columns() const { return basis_; }

 private:
  std::size_t idx(std::size_t r, std::size_t c) const { return r * n_ + c; }
  std::size_t idx(int r, std::size_t c) const { return static_cast<std::size_t>(r) * n_ + c; }

  // Gauss-Jordan with partial pivoting on the current basis.
  void refactor() {
    std::vector<double> m(n_ * 2 * n_, 0.0);
    const std::size_t w = 2 * n_;
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t r = 0; r < n_; ++r) m[r * w + c] = columns_[basis_[c]][r];
    for (std::size_t r = 0; r < n_; ++r) m[r * w + n_ + r] = 1.0;
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n_; ++i)
        if (std::abs(m[i * w + k]) > std::abs(m[p * w + k])) p = i;
      if (std::abs(m[p * w + k]) < 1e-12) {
        throw ClpError(ErrorKind::kDegenerateTransversal, "singular basis (float)");
      }
      if (p != k)
        for (std::size_t c = 0; c < w; ++c) std::swap(m[p * w + c], m[k * w + c]);
      const double piv = m[k * w + k];
      for (std::size_t c = 0; c < w; ++c) m[k * w + c] /= piv;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == k || m[i * w + k] == 0.0) continue;
        const double f = m[i * w + k];
        for (std::size_t c = 0; c < w; ++c) m[i * w + c] -= f * m[k * w + c];
      }
    }
    inverse_.assign(n_ * n_, 0.0);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) inverse_[idx(r, c)] = m[r * w + n_ + c];
  }

  std::size_t n_;
  double tolerance_;
  std::vector<std::vector<double>> columns_;
  std::vector<int> color_of_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> basis_;
  std::vector<double> inverse_;
  std::size_t dummy_ = 0;
  int dummy_row_ = -1;
  int missing_ = -1;
  std::size_t updates_ = 0;
};

SolveResult run_float(const PointConfiguration& config, const SolveOptions& options) {
  SolveResult result;
  result.report.backend = Backend::kFloat64;
  PivotRule rule = options.rule;
  const auto pivot_start = Clock::now();
  std::optional<FloatState> built;
  for (std::uint64_t attempt = 0; attempt <= 64 && !built; ++attempt) {
    const auto f = attempt == 0
                       ? initial_transversal(config, options.initial, options.seed)
                       : initial_transversal(config, InitialRule::kSeededRandom, options.seed + attempt);
    try {
      built.emplace(config, f, options.float_tolerance);
    } catch (const ClpError& e) {
      if (e.kind() != ErrorKind::kDegenerateTransversal) throw;
    }
  }
  if (!built) throw ClpError(ErrorKind::kDegenerateTransversal, "no nondegenerate initial transversal found");
  FloatState& state = *built;
  CycleGuard guard(static_cast<std::size_t>(config.dimension), options.anti_cycling);
  result.report.objective_trace.push_back(rational_from_double(state.objective()));
  double last_z = state.objective();
  while (!state.done()) {
    if (result.report.pivots >= options.max_pivots) {
      throw ClpError(ErrorKind::kBudgetExceeded, "pivot limit reached");
    }
    const int color = state.missing_color();
    std::optional<std::size_t> entering;
    double best = 0.0;
    for (int i = 0; i < static_cast<int>(config.colors[color].size()); ++i) {
      const auto j = state.column(color, i);
      const double rc = state.reduced_cost(j);
      if (rc >= -options.float_tolerance) continue;
      if (rule == PivotRule::kBland) {
        entering = j;
        break;
      }
      if (!entering || rc < best) {
        entering = j;
        best = rc;
      }
    }
    if (!entering) {
      throw ClpError(ErrorKind::kDegenerateState,
                     "no point of the missing color has a negative reduced cost (float)");
    }
    state.pivot(*entering);
    ++result.report.pivots;
    const double z = state.objective();
    const bool decreased = z < last_z - options.float_tolerance;
    last_z = z;
    result.report.objective_trace.push_back(rational_from_double(std::max(z, 0.0)));
    if (!state.done() && guard.record(state.basis_columns(), decreased, rule)) {
      rule = PivotRule::kBland;
      result.report.switched_to_bland = true;
    }
  }
  result.report.wall_time_ms = elapsed_ms(pivot_start);
  result.report.rule = rule;
  result.selection = state.selection(config.num_colors());
  // The final basis is re-verified in exact arithmetic.
  auto dep = is_positively_dependent(result.selection.points(config));
  if (dep.dependent) {
    result.certificate = std::move(dep.convex);
    return result;
  }
  SolveOptions exact = options;
  exact.backend = Backend::kExact;
  SolveResult fallback = run_exact(config, exact);
  fallback.report.float_fallback = true;
  return fallback;
}

}  // namespace

SolveResult solve_simplexlike(const PointConfiguration& config, const SolveOptions& options) {
  const auto prepared = detail::prepare_instance(config, options);
  const PointConfiguration& working = prepared.perturbed ? *prepared.working : config;
  SolveResult result = options.backend == Backend::kExact ? run_exact(working, options)
                                                          : run_float(working, options);
  detail::finish_result(config, prepared, result);
  return result;
}

bool verify_solution(const PointConfiguration& config, const ColorfulSelection& selection,
                     const ConvexCertificate& certificate) {
  if (selection.num_colors() != config.num_colors() || !selection.is_full()) return false;
  for (std::size_t i = 0; i < selection.num_colors(); ++i) {
    const int idx = *selection.pick(i);
    if (idx < 0 || idx >= static_cast<int>(config.colors[i].size())) return false;
  }
  return verify_convex(selection.points(config), certificate);
}

}  // namespace clp
