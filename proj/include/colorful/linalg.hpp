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

// Exact dense linear algebra: fraction-free (Bareiss) elimination over the
// integers, rational Gaussian elimination, and a modular determinant used as
// a fast nonsingularity certificate.

#ifndef COLORFUL_LINALG_HPP_
#define COLORFUL_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "colorful/rational.hpp"

namespace clp {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// For a nonsingular square A: scale = ±det(A) and adjugate = scale·A⁻¹,
// both integral.
struct FractionFreeInverse {
  Integer scale;
  IntegerMatrix adjugate;
};

// Bareiss Gauss-Jordan on [A | I]. Returns nullopt when A is singular.
std::optional<FractionFreeInverse> fraction_free_inverse(IntegerMatrix a);

// Bareiss elimination on [A | b] and fraction-free back substitution:
// A x = b with x = numerators / scale, scale = ±det(A). nullopt when A is
// singular.
struct FractionFreeSolution {
  Integer scale;
  std::vector<Integer> numerators;
};
std::optional<FractionFreeSolution> fraction_free_solve(IntegerMatrix a, std::vector<Integer> b);

Integer fraction_free_determinant(IntegerMatrix a);

// Least common multiple of the denominators.
Integer common_denominator(std::span<const Rational> values);

Rational determinant(const Matrix& a);
std::size_t rank(const Matrix& a);

// Unique solution of A x = b for square nonsingular A, nullopt otherwise.
// Columns are scaled to integers and solved fraction-free.
std::optional<Vector> solve_square(const Matrix& a, std::span<const Rational> b);

// Modular arithmetic over the Mersenne prime 2^31 - 1. Only used as a
// filter: a full rank mod p proves full rank, anything else is rechecked.
namespace modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 31) - 1;

std::uint64_t reduce(const Integer& value);
// nullopt if the denominator vanishes mod p.
std::optional<std::uint64_t> reduce(const Rational& value);
std::uint64_t determinant(std::vector<std::uint64_t> entries, std::size_t n);
// Rank of a row-major rows×cols matrix over GF(p); a lower bound on the
// rational rank of any matrix that reduces to it.
std::size_t rank(std::vector<std::uint64_t> entries, std::size_t rows, std::size_t cols);

}  // namespace modp

// Lifted matrix of a point set: column j is (x_j, 1). Returns true iff
// the points are affinely independent (lifted columns linearly independent).
// A nonzero determinant mod p is accepted as a certificate; otherwise the
// rank is computed exactly.
bool affinely_independent(std::span<const Vector> points);

}  // namespace clp

#endif  // COLORFUL_LINALG_HPP_
