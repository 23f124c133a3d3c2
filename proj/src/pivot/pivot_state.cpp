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

#include <random>
#include <string>

#include "colorful/pivot.hpp"

namespace clp {

namespace {

// Compares a/b with c/e for b, e of the same sign.
int cmp_q(const Integer& a, const Integer& b, const Integer& c, const Integer& e) {
  return cmp(Integer(a * e), Integer(c * b));
}

}  // namespace

std::string_view to_string(PivotRule rule) {
  return rule == PivotRule::kBland ? "bland" : "dantzig";
}

std::string_view to_string(Backend backend) {
  return backend == Backend::kFloat64 ? "float64" : "exact";
}

PivotRule parse_pivot_rule(std::string_view text) {
  if (text == "dantzig" || text == "dantzig-most-negative") return PivotRule::kDantzig;
  if (text == "bland") return PivotRule::kBland;
  throw ClpError(ErrorKind::kMalformedInput, "unknown pivot rule '" + std::string(text) + "'");
}

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::kExact;
  if (text == "float64") return Backend::kFloat64;
  throw ClpError(ErrorKind::kMalformedInput, "unknown backend '" + std::string(text) + "'");
}

ColorfulSelection initial_transversal(const PointConfiguration& config, InitialRule rule,
                                      std::uint64_t seed) {
  config.validate();
  const auto d = static_cast<std::size_t>(config.dimension);
  if (config.num_colors() != d + 1) {
    throw ClpError(ErrorKind::kDimensionOrEmpty, "need exactly d+1 colors");
  }
  ColorfulSelection f(d + 1);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < d; ++i) {
    if (rule == InitialRule::kFirstPoint) {
      f.set(i, 0);
    } else {
      std::uniform_int_distribution<int> pick(0, static_cast<int>(config.colors[i].size()) - 1);
      f.set(i, pick(rng));
    }
  }
  return f;
}

Point dummy_point(std::span<const Point> transversal) {
  if (transversal.empty()) throw ClpError(ErrorKind::kDimensionOrEmpty, "empty transversal");
  const std::size_t d = transversal.front().size();
  Point v(d);
  for (const auto& u : transversal)
    for (std::size_t r = 0; r < d; ++r) v[r] -= u[r];
  std::vector<Point> all(transversal.begin(), transversal.end());
  all.push_back(v);
  if (all.size() != d + 1 || !affinely_independent(all)) {
    throw ClpError(ErrorKind::kDegenerateTransversal, "transversal plus dummy is affinely dependent");
  }
  return v;
}

PivotState::PivotState(const PointConfiguration& config, const ColorfulSelection& transversal)
    : config_(&config), columns_(config) {
  const auto d = static_cast<std::size_t>(config.dimension);
  if (transversal.num_colors() != config.num_colors() || transversal.size() != d) {
    throw ClpError(ErrorKind::kDegenerateTransversal, "transversal must pick d distinct colors");
  }
  missing_color_ = -1;
  std::vector<Point> f;
  for (std::size_t i = 0; i < transversal.num_colors(); ++i) {
    if (transversal.pick(i)) {
      basis_cols_.push_back(columns_.flat_index(static_cast<int>(i), *transversal.pick(i)));
      f.push_back(config.point(static_cast<int>(i), *transversal.pick(i)));
    } else {
      missing_color_ = static_cast<int>(i);
    }
  }
  dummy_ = dummy_point(f);
  dummy_column_ = columns_.lift(dummy_);
  dummy_row_ = basis_cols_.size();
  basis_cols_.push_back(columns_.size());
  std::vector<std::span<const Integer>> cols;
  for (auto j : basis_cols_) cols.push_back(column(j));
  auto inv = ExactBasisInverse::factor(cols);
  if (!inv) throw ClpError(ErrorKind::kDegenerateTransversal, "singular initial basis");
  inverse_ = *std::move(inv);
}

std::span<const Integer> PivotState::column(std::size_t j) const {
  return j == columns_.size() ? std::span<const Integer>(dummy_column_) : columns_.column(j);
}

ColorfulSelection PivotState::transversal() const {
  ColorfulSelection f(config_->num_colors());
  for (auto j : basis_cols_) {
    if (j == columns_.size()) continue;
    const auto ref = columns_.ref(j);
    f.set(static_cast<std::size_t>(ref.color), ref.index);
  }
  return f;
}

std::vector<std::optional<PointRef>> PivotState::basis() const {
  std::vector<std::optional<PointRef>> out;
  for (auto j : basis_cols_) {
    if (j == columns_.size()) {
      out.emplace_back();
    } else {
      out.emplace_back(columns_.ref(j));
    }
  }
  return out;
}

Rational PivotState::objective() const {
  if (!dummy_row_) return 0;
  const auto last = inverse_.size() - 1;
  return make_rational(inverse_.adjugate()(*dummy_row_, last) * columns_.denominator(),
                       inverse_.scale());
}

Integer PivotState::reduced_cost_key(PointRef t) const {
  if (!dummy_row_) throw ClpError(ErrorKind::kDegenerateState, "dummy already left the basis");
  const auto j = columns_.flat_index(t.color, t.index);
  for (auto b : basis_cols_) {
    if (b == j) throw ClpError(ErrorKind::kDegenerateState, "point is basic");
  }
  Integer key = -inverse_.row_dot(*dummy_row_, columns_.column(j));
  if (inverse_.scale() < 0) key = -key;
  return key;
}

Rational PivotState::reduced_cost(PointRef t) const {
  Integer key = reduced_cost_key(t);
  if (key == 0) throw ClpError(ErrorKind::kDegenerateState, "point lies on aff(F)");
  return make_rational(key, abs(inverse_.scale()));
}

bool PivotState::pivot_once(PointRef t) {
  if (t.color != missing_color_ || reduced_cost_key(t) >= 0) {
    throw ClpError(ErrorKind::kMalformedInput,
                   "entering point needs the missing color and a negative reduced cost");
  }
  const auto entering = columns_.flat_index(t.color, t.index);
  const auto w = inverse_.transform(columns_.column(entering));
  const auto last = inverse_.size() - 1;
  const int sign = sgn(inverse_.scale());
  std::optional<std::size_t> leaving;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sgn(w[i]) * sign <= 0) continue;
    if (!leaving) {
      leaving = i;
      continue;
    }
    // adj(i)/w_i vs adj(l)/w_l with w_i·w_l > 0.
    const auto& ai = inverse_.adjugate()(i, last);
    const auto& al = inverse_.adjugate()(*leaving, last);
    const int cmp = cmp_q(ai, w[i], al, w[*leaving]);
    if (cmp < 0 || (cmp == 0 && basis_cols_[i] < basis_cols_[*leaving])) leaving = i;
  }
  if (!leaving) throw ClpError(ErrorKind::kDegenerateState, "unbounded direction");
  const std::size_t out_col = basis_cols_[*leaving];
  inverse_.replace(*leaving, w);
  basis_cols_[*leaving] = entering;
  if (out_col == columns_.size()) {
    dummy_row_.reset();
    missing_color_ = -1;
    return true;
  }
  missing_color_ = columns_.color_of(out_col);
  return false;
}

Vector PivotState::basic_weights() const {
  Vector x = inverse_.solution();
  for (auto& v : x) v *= Rational(columns_.denominator());
  return x;
}

}  // namespace clp
