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

#ifndef COLORFUL_RATIONAL_HPP_
#define COLORFUL_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clp {

// GMP keeps mpq_class canonical after every arithmetic operation
// (denominator > 0, gcd(num, den) = 1). Values built from raw
// numerator/denominator pairs must go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

using Vector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p/q", "p", and plain decimals ("0.125", "-3e-2").
// Throws ClpError(MalformedInput) on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" for integers).
std::string format_rational(const Rational& value);

// Exact binary value of a finite double.
Rational rational_from_double(double value);

// Rounds to `digits` significant decimal digits, exactly.
Rational round_to_significant(double value, int digits = 15);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational sum(std::span<const Rational> a);

// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;

  Matrix transposed() const;
  Vector multiply(std::span<const Rational> x) const;
  // yᵀA
  Vector left_multiply(std::span<const Rational> y) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace clp

#endif  // COLORFUL_RATIONAL_HPP_
