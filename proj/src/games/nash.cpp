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

#include "colorful/errors.hpp"
#include "colorful/games.hpp"
#include "colorful/linalg.hpp"

namespace clp {

void BimatrixGame::validate() const {
  if (a.rows() == 0 || a.cols() == 0) {
    throw ClpError(ErrorKind::kMalformedInput, "game matrices must be nonempty");
  }
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ClpError(ErrorKind::kMalformedInput, "A and B differ in shape");
  }
}

BimatrixGame positivize(const BimatrixGame& game) {
  game.validate();
  Rational low = game.a(0, 0);
  for (std::size_t i = 0; i < game.m(); ++i)
    for (std::size_t j = 0; j < game.n(); ++j) low = std::min({low, game.a(i, j), game.b(i, j)});
  if (low > 0) return game;
  const Rational shift = 1 - low;
  BimatrixGame out = game;
  for (std::size_t i = 0; i < game.m(); ++i)
    for (std::size_t j = 0; j < game.n(); ++j) {
      out.a(i, j) += shift;
      out.b(i, j) += shift;
    }
  return out;
}

FacsInstance game_to_config(const BimatrixGame& game) {
  game.validate();
  const std::size_t m = game.m(), n = game.n(), rows = m + n;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (game.a(i, j) <= 0 || game.b(i, j) <= 0) {
        throw ClpError(ErrorKind::kNonPositiveEntries, "positivize the game first");
      }
  // Column c of M, 0-based.
  const auto column = [&](std::size_t c) {
    Point col(rows);
    if (c < n) {
      for (std::size_t i = 0; i < m; ++i) col[i] = game.a(i, c);
    } else if (c < n + m) {
      col[c - n] = 1;
    } else if (c < 2 * n + m) {
      col[m + (c - n - m)] = 1;
    } else {
      const std::size_t i = c - 2 * n - m;
      for (std::size_t j = 0; j < n; ++j) col[m + j] = game.b(i, j);
    }
    return col;
  };
  FacsInstance out;
  out.config.dimension = static_cast<int>(rows);
  out.config.target = Point(rows, Rational(1));
  out.given = ColorfulSelection(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    out.config.colors.push_back({column(i), column(rows + i)});
    out.given.set(i, i < n ? 1 : 0);
  }
  out.given_weights.assign(rows, Rational(1));
  return out;
}

ComplementaryPair complementary_pair(const BimatrixGame& game, const ColorfulSelection& selection,
                                     std::span<const Rational> weights) {
  const std::size_t rows = game.m() + game.n();
  if (selection.num_colors() != rows || !selection.is_full() || weights.size() != rows) {
    throw ClpError(ErrorKind::kMalformedInput, "selection does not match the game");
  }
  ComplementaryPair out{Vector(rows), Vector(rows)};
  std::size_t w = 0;
  for (const auto& ref : selection.refs()) {
    (ref.index == 0 ? out.xa : out.xb)[static_cast<std::size_t>(ref.color)] = weights[w++];
  }
  return out;
}

bool verify_complementary(const BimatrixGame& game, const ComplementaryPair& pair) {
  const std::size_t m = game.m(), n = game.n();
  if (pair.xa.size() != m + n || pair.xb.size() != m + n) return false;
  for (std::size_t c = 0; c < m + n; ++c) {
    if (pair.xa[c] < 0 || pair.xb[c] < 0 || pair.xa[c] * pair.xb[c] != 0) return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational row = pair.xa[n + i];
    for (std::size_t j = 0; j < n; ++j) row += game.a(i, j) * pair.xa[j];
    if (row != 1) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational row = pair.xb[j];
    for (std::size_t i = 0; i < m; ++i) row += game.b(i, j) * pair.xb[n + i];
    if (row != 1) return false;
  }
  return true;
}

bool is_equilibrium(const BimatrixGame& game, const MixedProfile& p) {
  const std::size_t m = game.m(), n = game.n();
  if (p.y.size() != m || p.z.size() != n) return false;
  for (const auto* v : {&p.y, &p.z}) {
    if (sum(*v) != 1) return false;
    for (const auto& x : *v)
      if (x < 0) return false;
  }
  const Vector az = game.a.multiply(p.z);
  const Vector yb = game.b.left_multiply(p.y);
  const Rational va = dot(p.y, az), vb = dot(yb, p.z);
  return std::all_of(az.begin(), az.end(), [&](const Rational& x) { return x <= va; }) &&
         std::all_of(yb.begin(), yb.end(), [&](const Rational& x) { return x <= vb; });
}

namespace {

Vector normalized(Vector v) {
  const Rational s = sum(v);
  if (s == 0) throw ClpError(ErrorKind::kOracleInconsistent, "strategy block vanished");
  for (auto& x : v) x /= s;
  return v;
}

}  // namespace

MixedProfile extract_nash(const BimatrixGame& game, const ColorfulSelection& selection,
                          std::span<const Rational> weights) {
  const std::size_t m = game.m(), n = game.n();
  const auto pair = complementary_pair(game, selection, weights);
  if (!verify_complementary(game, pair)) {
    throw ClpError(ErrorKind::kNotAnEquilibrium, "weights are not complementary solutions");
  }
  MixedProfile out;
  out.z = normalized(Vector(pair.xa.begin(), pair.xa.begin() + static_cast<long>(n)));
  out.y = normalized(Vector(pair.xb.begin() + static_cast<long>(n),
                            pair.xb.begin() + static_cast<long>(n + m)));
  if (!is_equilibrium(game, out)) {
    throw ClpError(ErrorKind::kNotAnEquilibrium, "extracted profile fails the best-response check");
  }
  return out;
}

NashSolution solve_bimatrix(const BimatrixGame& game, const ClpOracle& oracle) {
  const BimatrixGame shifted = positivize(game);
  const FacsInstance instance = game_to_config(shifted);
  NashSolution out;
  out.facs = find_another_colorful(instance, oracle);
  out.profile = extract_nash(shifted, out.facs.selection, out.facs.weights);
  if (!is_equilibrium(game, out.profile)) {
    throw ClpError(ErrorKind::kNotAnEquilibrium, "profile fails on the original game");
  }
  return out;
}

namespace {

// Strategy on `support` (size k) making the opponent indifferent over
// `opp_support`: payoff(s, t) is the opponent's payoff when we play s and
// they play t. Solves [P | -1; 1 | 0] (x, v) = (0, 1).
std::optional<Vector> indifference(std::size_t size, const std::vector<std::size_t>& support,
                                   const std::vector<std::size_t>& opp_support,
                                   const std::function<Rational(std::size_t, std::size_t)>& payoff) {
  const std::size_t k = support.size();
  Matrix sys(k + 1, k + 1);
  Vector rhs(k + 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) sys(r, c) = payoff(support[c], opp_support[r]);
    sys(r, k) = -1;
  }
  for (std::size_t c = 0; c < k; ++c) sys(k, c) = 1;
  rhs[k] = 1;
  auto sol = solve_square(sys, rhs);
  if (!sol) return std::nullopt;
  Vector x(size);
  for (std::size_t c = 0; c < k; ++c) {
    if ((*sol)[c] < 0) return std::nullopt;
    x[support[c]] = (*sol)[c];
  }
  return x;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<MixedProfile> support_enumeration(const BimatrixGame& game) {
  game.validate();
  const std::size_t m = game.m(), n = game.n();
  if (m > 5 || n > 5) throw ClpError(ErrorKind::kBudgetExceeded, "support enumeration is capped at 5x5");
  std::vector<MixedProfile> out;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    for (const auto& rows : subsets_of_size(m, k)) {
      for (const auto& cols : subsets_of_size(n, k)) {
        auto y = indifference(m, rows, cols,
                              [&](std::size_t i, std::size_t j) { return game.b(i, j); });
        if (!y) continue;
        auto z = indifference(n, cols, rows,
                              [&](std::size_t j, std::size_t i) { return game.a(i, j); });
        if (!z) continue;
        MixedProfile p{std::move(*y), std::move(*z)};
        if (is_equilibrium(game, p) && std::find(out.begin(), out.end(), p) == out.end()) {
          out.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

}  // namespace clp
