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

#include "colorful/rational.hpp"

#include <cmath>
#include <cstdio>
#include <regex>
#include <string>

#include "colorful/errors.hpp"

namespace clp {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput: return "MalformedInput";
    case ErrorKind::kDimensionOrEmpty: return "DimensionOrEmpty";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kDegenerateTransversal: return "DegenerateTransversal";
    case ErrorKind::kDegenerateState: return "DegenerateState";
    case ErrorKind::kDegeneratePivot: return "DegeneratePivot";
    case ErrorKind::kHypothesisViolated: return "HypothesisViolated";
    case ErrorKind::kCycleDetected: return "CycleDetected";
    case ErrorKind::kNotSeparable: return "NotSeparable";
    case ErrorKind::kNonPositiveEntries: return "NonPositiveEntries";
    case ErrorKind::kOracleInconsistent: return "OracleInconsistent";
    case ErrorKind::kNotAnEquilibrium: return "NotAnEquilibrium";
    case ErrorKind::kInvalidFamily: return "InvalidFamily";
    case ErrorKind::kVerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw ClpError(ErrorKind::kMalformedInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ClpError(ErrorKind::kMalformedInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  static const std::regex kFraction(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
  static const std::regex kDecimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, kFraction)) {
    Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    Integer den = m[2].matched ? Integer(m[2].str(), 10) : Integer(1);
    return make_rational(num, den);
  }
  if (std::regex_match(s, m, kDecimal) && (m[2].length() + m[3].length()) > 0) {
    std::string digits = m[2].str() + m[3].str();
    long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
    exponent -= static_cast<long>(m[3].length());
    if (exponent > 100000 || exponent < -100000) {
      throw ClpError(ErrorKind::kMalformedInput, "exponent out of range: " + s);
    }
    Integer num(digits, 10);
    if (m[1].str() == "-") num = -num;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    return exponent >= 0 ? make_rational(num * scale, Integer(1)) : make_rational(num, scale);
  }
  throw ClpError(ErrorKind::kMalformedInput, "not a rational: '" + s + "'");
}

std::string format_rational(const Rational& value) { return value.get_str(); }

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw ClpError(ErrorKind::kMalformedInput, "non-finite coordinate");
  }
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

Rational round_to_significant(double value, int digits) {
  if (!std::isfinite(value)) {
    throw ClpError(ErrorKind::kMalformedInput, "non-finite coordinate");
  }
  if (value == 0.0) return Rational(0);
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*e", digits - 1, value);
  return parse_rational(buffer);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational sum(std::span<const Rational> a) {
  Rational acc = 0;
  for (const auto& v : a) acc += v;
  return acc;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw ClpError(ErrorKind::kMalformedInput, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::multiply(std::span<const Rational> x) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), x);
  return out;
}

Vector Matrix::left_multiply(std::span<const Rational> y) const {
  Vector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (y[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] += y[r] * (*this)(r, c);
  }
  return out;
}

}  // namespace clp
