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

#include <utility>

#include "colorful/pivot.hpp"

namespace clp {

LiftedColumns::LiftedColumns(const PointConfiguration& config)
    : rows_(static_cast<std::size_t>(config.dimension) + 1), denominator_(1) {
  for (const auto& color : config.colors)
    for (const auto& p : color)
      for (const auto& x : p) mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), x.get_den_mpz_t());
  for (std::size_t i = 0; i < config.colors.size(); ++i) {
    offsets_.push_back(columns_.size());
    for (const auto& p : config.colors[i]) {
      columns_.push_back(lift(p));
      color_of_.push_back(static_cast<int>(i));
    }
  }
}

std::vector<Integer> LiftedColumns::lift(std::span<const Rational> point) const {
  std::vector<Integer> col(rows_);
  for (std::size_t r = 0; r + 1 < rows_; ++r) {
    Rational scaled = point[r] * Rational(denominator_);
    if (scaled.get_den() != 1) {
      throw ClpError(ErrorKind::kMalformedInput, "point not over the common denominator");
    }
    col[r] = scaled.get_num();
  }
  col[rows_ - 1] = denominator_;
  return col;
}

std::optional<ExactBasisInverse> ExactBasisInverse::factor(
    const std::vector<std::span<const Integer>>& cols) {
  const std::size_t n = cols.size();
  IntegerMatrix b(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (cols[c].size() != n) throw ClpError(ErrorKind::kMalformedInput, "basis is not square");
    for (std::size_t r = 0; r < n; ++r) b(r, c) = cols[c][r];
  }
  auto inv = fraction_free_inverse(std::move(b));
  if (!inv) return std::nullopt;
  ExactBasisInverse out;
  out.scale_ = std::move(inv->scale);
  out.adjugate_ = std::move(inv->adjugate);
  return out;
}

std::vector<Integer> ExactBasisInverse::transform(std::span<const Integer> a) const {
  std::vector<Integer> w(size());
  for (std::size_t r = 0; r < size(); ++r) w[r] = row_dot(r, a);
  return w;
}

Integer ExactBasisInverse::row_dot(std::size_t row, std::span<const Integer> a) const {
  Integer acc = 0;
  const auto adj = adjugate_.row(row);
  for (std::size_t c = 0; c < adj.size(); ++c) {
    if (a[c] != 0) mpz_addmul(acc.get_mpz_t(), adj[c].get_mpz_t(), a[c].get_mpz_t());
  }
  return acc;
}

void ExactBasisInverse::replace(std::size_t row, std::span<const Integer> w) {
  const std::size_t n = size();
  const Integer& pivot = w[row];
  if (pivot == 0) throw ClpError(ErrorKind::kDegeneratePivot, "zero pivot element");
  Integer t;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == row) continue;
    auto target = adjugate_.row(i);
    const auto source = adjugate_.row(row);
    for (std::size_t j = 0; j < n; ++j) {
      t = pivot * target[j];
      if (w[i] != 0) mpz_submul(t.get_mpz_t(), w[i].get_mpz_t(), source[j].get_mpz_t());
      mpz_divexact(target[j].get_mpz_t(), t.get_mpz_t(), scale_.get_mpz_t());
    }
  }
  scale_ = pivot;
}

Vector ExactBasisInverse::solution() const {
  const std::size_t n = size();
  Vector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = make_rational(adjugate_(r, n - 1), scale_);
  return x;
}

}  // namespace clp
