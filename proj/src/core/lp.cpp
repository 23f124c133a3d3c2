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

// Phase-I simplex on a dense exact tableau.
//
// The system Ax = b, x ≥ 0 is rewritten with b ≥ 0 (rows flipped as needed)
// and one artificial per row. Minimizing the artificial sum with Bland's
// rule terminates; a positive optimum yields the Farkas vector from the
// artificial columns of the final tableau, whose reduced costs are 1 - π.

#include <vector>

#include "colorful/errors.hpp"
#include "colorful/geometry.hpp"

namespace clp {

namespace {

class PhaseOneTableau {
 public:
  PhaseOneTableau(const Matrix& a, std::span<const Rational> b)
      : m_(a.rows()), n_(a.cols()), width_(n_ + m_ + 1),
        cells_((m_ + 1) * width_), basis_(m_), flipped_(m_, false) {
    for (std::size_t i = 0; i < m_; ++i) {
      flipped_[i] = b[i] < 0;
      const int s = flipped_[i] ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = s * a(i, j);
      at(i, n_ + i) = 1;
      at(i, rhs()) = s * b[i];
      basis_[i] = n_ + i;
    }
    // Objective row holds reduced costs c_j - c_Bᵀ B⁻¹ a_j and -w at rhs.
    for (std::size_t j = 0; j < width_; ++j) {
      Rational acc = 0;
      for (std::size_t i = 0; i < m_; ++i) acc -= at(i, j);
      at(m_, j) = acc;
    }
    for (std::size_t i = 0; i < m_; ++i) at(m_, n_ + i) = 0;
  }

  void run() {
    while (true) {
      std::size_t entering = width_;
      for (std::size_t j = 0; j + 1 < width_; ++j) {
        if (at(m_, j) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == width_) return;
      std::size_t leaving = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, entering) <= 0) continue;
        Rational ratio = at(i, rhs()) / at(i, entering);
        if (leaving == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = std::move(ratio);
        }
      }
      // The phase-I objective is bounded below by zero.
      pivot(leaving, entering);
    }
  }

  Rational objective() const { return -at(m_, rhs()); }

  Vector primal() const {
    Vector x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = at(i, rhs());
    }
    return x;
  }

  Vector farkas() const {
    Vector y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational pi = 1 - at(m_, n_ + i);
      y[i] = flipped_[i] ? pi : Rational(-pi);
    }
    return y;
  }

 private:
  std::size_t rhs() const { return width_ - 1; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const Rational f = at(i, col);
      for (std::size_t j = 0; j < width_; ++j) {
        if (at(row, j) != 0) at(i, j) -= f * at(row, j);
      }
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
  std::vector<bool> flipped_;
};

}  // namespace

LpResult lp_feasibility(const Matrix& a, std::span<const Rational> b) {
  if (a.rows() == 0 || a.cols() == 0 || b.size() != a.rows()) {
    throw ClpError(ErrorKind::kMalformedInput, "lp_feasibility needs m, n >= 1 and |b| = m");
  }
  PhaseOneTableau tableau(a, b);
  tableau.run();
  LpResult result;
  result.feasible = tableau.objective() == 0;
  if (result.feasible) {
    result.x = tableau.primal();
  } else {
    result.y = tableau.farkas();
  }
  return result;
}

bool verify_lp(const Matrix& a, std::span<const Rational> b, const LpResult& result) {
  if (result.feasible) {
    if (result.x.size() != a.cols()) return false;
    for (const auto& v : result.x) {
      if (v < 0) return false;
    }
    const Vector ax = a.multiply(result.x);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (ax[i] != b[i]) return false;
    }
    return true;
  }
  if (result.y.size() != a.rows()) return false;
  for (const auto& v : a.left_multiply(result.y)) {
    if (v < 0) return false;
  }
  return dot(result.y, b) < 0;
}

}  // namespace clp
