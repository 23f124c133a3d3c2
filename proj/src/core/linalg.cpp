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

#include "colorful/linalg.hpp"

#include <utility>

#include "colorful/errors.hpp"

namespace clp {

std::optional<FractionFreeInverse> fraction_free_inverse(IntegerMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw ClpError(ErrorKind::kMalformedInput, "inverse of non-square matrix");
  IntegerMatrix m(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = std::move(a(r, c));
    m(r, n + r) = 1;
  }
  Integer previous = 1;
  Integer t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(m(p, c), m(k, c));
    }
    const Integer& pivot = m(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Integer factor = m(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        // Sylvester's identity makes this division exact.
        t = pivot * m(i, j);
        t -= factor * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, k) = 0;
    }
    previous = pivot;
  }
  FractionFreeInverse out{previous, IntegerMatrix(n, n)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.adjugate(r, c) = std::move(m(r, n + c));
  return out;
}

std::optional<FractionFreeSolution> fraction_free_solve(IntegerMatrix a, std::vector<Integer> b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || b.size() != n) {
    throw ClpError(ErrorKind::kMalformedInput, "fraction_free_solve shape mismatch");
  }
  if (n == 0) return FractionFreeSolution{1, {}};
  Integer previous = 1;
  Integer t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a(p, c), a(k, c));
      std::swap(b[p], b[k]);
    }
    const Integer& pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer& factor = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        t = pivot * a(i, j);
        mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      t = pivot * b[i];
      mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), b[k].get_mpz_t());
      mpz_divexact(b[i].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      a(i, k) = 0;
    }
    previous = pivot;
  }
  // U x = b' with U(n-1, n-1) = scale; y = scale·x is integral (Cramer).
  FractionFreeSolution out{previous, std::vector<Integer>(n)};
  for (std::size_t i = n; i-- > 0;) {
    t = out.scale * b[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      mpz_submul(t.get_mpz_t(), a(i, j).get_mpz_t(), out.numerators[j].get_mpz_t());
    }
    mpz_divexact(out.numerators[i].get_mpz_t(), t.get_mpz_t(), a(i, i).get_mpz_t());
  }
  return out;
}

Integer fraction_free_determinant(IntegerMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw ClpError(ErrorKind::kMalformedInput, "determinant of non-square matrix");
  if (n == 0) return 1;
  Integer previous = 1;
  Integer t;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a(k, k) * a(i, j);
        t -= a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  return sign > 0 ? det : Integer(-det);
}

Integer common_denominator(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

namespace {

// Reduced row echelon in place; returns rank and the determinant sign/value
// product of pivots when square.
std::size_t eliminate(Matrix& m, Rational* det) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  Rational product = 1;
  int sign = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) {
      product = 0;
      continue;
    }
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(rank, j));
      sign = -sign;
    }
    product *= m(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(rank, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  if (det != nullptr) *det = (rank == rows && rows == cols) ? Rational(sign * product) : Rational(0);
  return rank;
}

}  // namespace

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw ClpError(ErrorKind::kMalformedInput, "determinant of non-square matrix");
  Matrix m = a;
  Rational det;
  eliminate(m, &det);
  return det;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return eliminate(m, nullptr);
}

std::optional<Vector> solve_square(const Matrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || b.size() != n) {
    throw ClpError(ErrorKind::kMalformedInput, "solve_square shape mismatch");
  }
  std::vector<Integer> scale(n);
  IntegerMatrix ints(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector col = a.column(c);
    scale[c] = common_denominator(col);
    for (std::size_t r = 0; r < n; ++r) {
      Rational scaled = col[r] * scale[c];
      ints(r, c) = scaled.get_num();
    }
  }
  const Integer beta = common_denominator(b);
  std::vector<Integer> rhs(n);
  for (std::size_t r = 0; r < n; ++r) rhs[r] = Rational(b[r] * beta).get_num();
  auto sol = fraction_free_solve(std::move(ints), std::move(rhs));
  if (!sol) return std::nullopt;
  // (A·S) w = β b, x = S w / β.
  Vector x(n);
  for (std::size_t r = 0; r < n; ++r) {
    x[r] = make_rational(sol->numerators[r] * scale[r], sol->scale * beta);
  }
  return x;
}

namespace modp {

namespace {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t p = a * b;  // < 2^62
  std::uint64_t s = (p & kPrime) + (p >> 31);
  s = (s & kPrime) + (s >> 31);
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a) { return power(a, kPrime - 2); }

}  // namespace

std::uint64_t reduce(const Integer& value) {
  return mpz_fdiv_ui(value.get_mpz_t(), kPrime);
}

std::optional<std::uint64_t> reduce(const Rational& value) {
  const std::uint64_t den = reduce(value.get_den());
  if (den == 0) return std::nullopt;
  return mul(reduce(value.get_num()), inverse(den));
}

std::size_t rank(std::vector<std::uint64_t> m, std::size_t rows, std::size_t cols) {
  // Row i becomes piv·row_i − a_ic·row_r: no inverses, same rank.
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[p * cols + j], m[r * cols + j]);
    }
    const std::uint64_t piv = m[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = m[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m[i * cols + j] = sub(mul(piv, m[i * cols + j]), mul(f, m[r * cols + j]));
      }
    }
    ++r;
  }
  return r;
}

std::uint64_t determinant(std::vector<std::uint64_t> m, std::size_t n) {
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p * n + c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
      det = sub(0, det);
    }
    det = mul(det, m[c * n + c]);
    const std::uint64_t inv = inverse(m[c * n + c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i * n + c] == 0) continue;
      const std::uint64_t f = mul(m[i * n + c], inv);
      for (std::size_t j = c; j < n; ++j) m[i * n + j] = sub(m[i * n + j], mul(f, m[c * n + j]));
    }
  }
  return det;
}

}  // namespace modp

bool affinely_independent(std::span<const Vector> points) {
  if (points.empty()) return true;
  const std::size_t d = points.front().size();
  const std::size_t rows = d + 1;
  const std::size_t cols = points.size();
  if (cols > rows) return false;
  std::vector<std::uint64_t> reduced(rows * cols);
  bool reducible = true;
  for (std::size_t c = 0; c < cols && reducible; ++c) {
    for (std::size_t r = 0; r < d; ++r) {
      auto v = modp::reduce(points[c][r]);
      if (!v) {
        reducible = false;
        break;
      }
      reduced[r * cols + c] = *v;
    }
    reduced[d * cols + c] = 1;
  }
  if (reducible && modp::rank(std::move(reduced), rows, cols) == cols) return true;
  Matrix lifted(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < d; ++r) lifted(r, c) = points[c][r];
    lifted(d, c) = 1;
  }
  return rank(lifted) == cols;
}

}  // namespace clp
