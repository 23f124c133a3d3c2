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


// Colorful linear programming as a decision oracle, the d+1-call search for
// a second positively dependent colorful set, and the bimatrix game
// reduction built on top of it.

#ifndef COLORFUL_GAMES_HPP_
#define COLORFUL_GAMES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "colorful/geometry.hpp"

namespace clp {

// Full colorful selections only; a positively dependent (or target-covering)
// partial selection always extends to a full one.
struct ClpDecision {
  bool yes = false;
  std::optional<ColorfulSelection> witness;
  // Convex weights, or cone multipliers when the configuration has a target,
  // aligned with witness->refs().
  Vector weights;
  // Search trace: LP calls made, and subtrees cut by the relaxation.
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
};

struct ClpDecideOptions {
  // Cut a partial selection when its picks plus every point of the remaining
  // colors already fail the test. Off: plain exhaustive search.
  bool pruning = true;
  std::uint64_t budget = default_budget();  // max LP calls
};

// Depth-first over colors 0..k-1, points in index order; the witness is the
// lexicographically first solution in both modes. Throws kBudgetExceeded.
ClpDecision clp_decide(const PointConfiguration& config, const ClpDecideOptions& options = {});

using ClpOracle = std::function<ClpDecision(const PointConfiguration&)>;

// A configuration of pairs and a full colorful selection T that is
// positively dependent, or with a target p, has p ∈ cone(T).
struct FacsInstance {
  PointConfiguration config;
  ColorfulSelection given;
  Vector given_weights;

  // Throws kMalformedInput on a broken invariant (including, for the conic
  // variant, 0 ∈ conv({p} ∪ all points)).
  void validate() const;
};

struct FacsResult {
  ColorfulSelection selection;
  Vector weights;  // convex or cone weights, aligned with selection.refs()
  int oracle_calls = 0;
};

// Fixes colors in order, preferring the point outside T whenever the oracle
// still finds a solution with it. At most one oracle call per color. Throws
// kOracleInconsistent when the result is T or fails to certify.
FacsResult find_another_colorful(const FacsInstance& instance, const ClpOracle& oracle = {});

struct BimatrixGame {
  Matrix a;
  Matrix b;

  std::size_t m() const { return a.rows(); }
  std::size_t n() const { return a.cols(); }
  void validate() const;
};

struct MixedProfile {
  Vector y;  // row player, length m
  Vector z;  // column player, length n
  bool operator==(const MixedProfile&) const = default;
};

// x_A solves [A, I_m] x = 1, x_B solves [I_n, Bᵀ] x = 1, x_A·x_B = 0.
struct ComplementaryPair {
  Vector xa;
  Vector xb;
};

// Adds 1 - min(entries) to every entry of both matrices when min ≤ 0.
BimatrixGame positivize(const BimatrixGame& game);

// Columns M_1..M_2(m+n) of M = [[A, I_m, 0, 0], [0, 0, I_n, Bᵀ]], colors
// {M_i, M_{m+n+i}}, target (1, ..., 1), T = the identity columns with all
// weights 1. Throws kNonPositiveEntries.
FacsInstance game_to_config(const BimatrixGame& game);

// x from the cone weights of T′, split into (x_A, x_B).
ComplementaryPair complementary_pair(const BimatrixGame& game, const ColorfulSelection& selection,
                                     std::span<const Rational> weights);
bool verify_complementary(const BimatrixGame& game, const ComplementaryPair& pair);

// Best-response conditions checked against every pure strategy.
bool is_equilibrium(const BimatrixGame& game, const MixedProfile& profile);

// z = x_A[1..n] and y = x_B[n+1..n+m], normalized. Throws
// kOracleInconsistent when a block vanishes and kNotAnEquilibrium when the
// profile fails is_equilibrium(game, ·).
MixedProfile extract_nash(const BimatrixGame& game, const ColorfulSelection& selection,
                          std::span<const Rational> weights);

struct NashSolution {
  MixedProfile profile;
  FacsResult facs;
};

// positivize → game_to_config → find_another_colorful → extract_nash, with
// the profile verified on the original game.
NashSolution solve_bimatrix(const BimatrixGame& game, const ClpOracle& oracle = {});

// Test oracle: equal-size support pairs, square solves, exact verification.
// Complete for nondegenerate games. Throws kBudgetExceeded past 5×5.
std::vector<MixedProfile> support_enumeration(const BimatrixGame& game);

}  // namespace clp

#endif  // COLORFUL_GAMES_HPP_
