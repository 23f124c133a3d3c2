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
#include <random>

#include "colorful/errors.hpp"
#include "colorful/games.hpp"
#include "colorful/generators.hpp"
#include "doctest.h"
#include "instances.hpp"
#include "test_support.hpp"

using namespace clp;
using clp::testing::config;
using clp::testing::pt;
using clp::testing::random_game;
using clp::testing::random_small_config;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (auto r : rows) out.push_back(pt(r));
  return Matrix::from_rows(out);
}

BimatrixGame game(std::initializer_list<std::initializer_list<long>> a,
                  std::initializer_list<std::initializer_list<long>> b) {
  return {mat(a), mat(b)};
}

Vector q(std::initializer_list<std::pair<long, long>> xs) {
  Vector v;
  for (auto [p, d] : xs) v.push_back(make_rational(p, d));
  return v;
}

}  // namespace

TEST_CASE("positivize") {
  const auto g = game({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
  const auto p = positivize(g);
  CHECK(p.a.row(0)[0] == 3);
  CHECK(p.a.row(0)[1] == 1);
  CHECK(p.b.row(0)[0] == 1);
  CHECK(p.b.row(0)[1] == 3);
  const auto pos = game({{2, 1}}, {{1, 5}});
  const auto same = positivize(pos);
  CHECK(same.a.row(0)[0] == 2);
  CHECK(same.b.row(0)[1] == 5);
}

TEST_CASE("game_to_config on matching pennies") {
  const auto inst = game_to_config(positivize(game({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}})));
  CHECK(inst.config.dimension == 4);
  REQUIRE(inst.config.num_colors() == 4);
  // T = columns 3..6 (1-based) of the 4x8 matrix: the two identity blocks.
  CHECK(inst.config.colors[0][1] == pt({0, 0, 1, 0}));
  CHECK(inst.config.colors[1][1] == pt({0, 0, 0, 1}));
  CHECK(inst.config.colors[2][0] == pt({1, 0, 0, 0}));
  CHECK(inst.config.colors[3][0] == pt({0, 1, 0, 0}));
  CHECK(inst.given == ColorfulSelection({1, 1, 0, 0}));
  CHECK(inst.given_weights == q({{1, 1}, {1, 1}, {1, 1}, {1, 1}}));
  CHECK(*inst.config.target == pt({1, 1, 1, 1}));
  CHECK_NOTHROW(inst.validate());
  CHECK_THROWS_AS(game_to_config(game({{0}}, {{1}})), ClpError);
}

TEST_CASE("game_to_config on a 1x1 game") {
  const auto inst = game_to_config(game({{1}}, {{1}}));
  // M = [[1,1,0,0],[0,0,1,1]], pairs {c1,c3} and {c2,c4}.
  CHECK(inst.config.colors[0][0] == pt({1, 0}));
  CHECK(inst.config.colors[0][1] == pt({0, 1}));
  CHECK(inst.config.colors[1][0] == pt({1, 0}));
  CHECK(inst.config.colors[1][1] == pt({0, 1}));
  const auto sol = solve_bimatrix(game({{1}}, {{1}}));
  CHECK(sol.profile.y == q({{1, 1}}));
  CHECK(sol.profile.z == q({{1, 1}}));
}

TEST_CASE("clp_decide examples") {
  const auto no = clp_decide(config(2, {{{1, 0}, {0, 1}}, {{-1, -1}, {1, 1}}}));
  CHECK_FALSE(no.yes);
  CHECK_FALSE(no.witness.has_value());
  CHECK_FALSE(clp_decide(config(2, {{{1, 0}, {0, 1}}, {{-1, -1}, {1, 1}}}), {false}).yes);

  const auto yes = clp_decide(config(2, {{{1, 0}}, {{-1, 0}}}));
  REQUIRE(yes.yes);
  CHECK(*yes.witness == ColorfulSelection({0, 0}));
  CHECK(yes.weights == q({{1, 2}, {1, 2}}));

  ClpDecideOptions tiny;
  tiny.budget = 2;
  CHECK_THROWS_AS(clp_decide(config(1, {{{1}, {2}}, {{3}, {4}}, {{5}, {-1}}}), tiny), ClpError);
}

TEST_CASE("pruning agrees with exhaustive search") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    auto c = random_small_config(rng);
    if (coin(rng) == 0) {
      c.target = Point(static_cast<std::size_t>(c.dimension));
      for (auto& x : *c.target) x = coin(rng) - 1;
    }
    const auto pruned = clp_decide(c, {true});
    const auto plain = clp_decide(c, {false});
    REQUIRE(pruned.yes == plain.yes);
    CHECK(pruned.witness == plain.witness);
    CHECK(pruned.yes == !enumerate_pdcs(c).empty());
    if (pruned.yes) {
      const auto pts = pruned.witness->points(c);
      if (c.target) {
        CHECK(verify_cone(pts, *c.target, {true, pruned.weights, {}}));
      } else {
        CHECK(verify_convex(pts, {pruned.weights}));
      }
    }
  }
}

TEST_CASE("liftings preserve the decision") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_small_config(rng);
    const bool base = clp_decide(c).yes;
    CHECK(clp_decide(lift_dim(c)).yes == base);
    CHECK(clp_decide(add_color_pair(c)).yes == base);
  }
}

TEST_CASE("find_another_colorful on the line") {
  FacsInstance inst;
  inst.config = config(1, {{{1}, {-1}}, {{2}, {-3}}});
  inst.given = ColorfulSelection({0, 1});
  inst.given_weights = q({{3, 4}, {1, 4}});
  const auto r = find_another_colorful(inst);
  CHECK(r.selection == ColorfulSelection({1, 0}));
  CHECK(r.oracle_calls <= 2);
  CHECK(verify_convex(r.selection.points(inst.config), {r.weights}));

  inst.given_weights = q({{1, 2}, {1, 2}});
  CHECK_THROWS_AS(find_another_colorful(inst), ClpError);
}

TEST_CASE("an oracle that always says no is reported") {
  FacsInstance inst;
  inst.config = config(1, {{{1}, {-1}}, {{2}, {-3}}});
  inst.given = ColorfulSelection({0, 1});
  inst.given_weights = q({{3, 4}, {1, 4}});
  const auto never = [](const PointConfiguration&) { return ClpDecision{}; };
  try {
    find_another_colorful(inst, never);
    FAIL("expected OracleInconsistent");
  } catch (const ClpError& e) {
    CHECK(e.kind() == ErrorKind::kOracleInconsistent);
  }
}

TEST_CASE("find_another_colorful on random general-position pairs") {
  std::mt19937_64 rng(29);
  int done = 0;
  for (int trial = 0; done < 60 && trial < 400; ++trial) {
    const int d = 1 + trial % 4;
    const auto c = clp::testing::random_pairs_config(d, rng);
    const auto all = enumerate_pdcs(c);
    if (all.empty()) continue;
    FacsInstance inst{c, all.front(), {}};
    inst.given_weights = is_positively_dependent(all.front().points(c)).convex.weights;
    const auto r = find_another_colorful(inst);
    CHECK(r.selection != inst.given);
    CHECK(std::find(all.begin(), all.end(), r.selection) != all.end());
    CHECK(r.oracle_calls <= d + 1);
    ++done;
  }
  CHECK(done == 60);
}

TEST_CASE("support enumeration fixtures") {
  const auto pennies = game({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
  const auto eq = support_enumeration(pennies);
  REQUIRE(eq.size() == 1);
  CHECK(eq[0].y == q({{1, 2}, {1, 2}}));
  CHECK(eq[0].z == q({{1, 2}, {1, 2}}));

  const auto dilemma = game({{3, 0}, {5, 1}}, {{3, 5}, {0, 1}});
  const auto pd = support_enumeration(dilemma);
  REQUIRE(pd.size() == 1);
  CHECK(pd[0].y == q({{0, 1}, {1, 1}}));
  CHECK(pd[0].z == q({{0, 1}, {1, 1}}));

  const auto sexes = game({{3, 0}, {0, 2}}, {{2, 0}, {0, 3}});
  const auto bs = support_enumeration(sexes);
  CHECK(bs.size() == 3);
  const MixedProfile mixed{q({{3, 5}, {2, 5}}), q({{2, 5}, {3, 5}})};
  CHECK(std::find(bs.begin(), bs.end(), mixed) != bs.end());
}

TEST_CASE("solve_bimatrix fixtures") {
  const auto pennies = solve_bimatrix(game({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}));
  CHECK(pennies.profile.y == q({{1, 2}, {1, 2}}));
  CHECK(pennies.profile.z == q({{1, 2}, {1, 2}}));
  CHECK(pennies.facs.oracle_calls <= 4);

  const auto dominant = solve_bimatrix(game({{2, 1}, {0, 0}}, {{2, 0}, {1, 0}}));
  CHECK(dominant.profile.y == q({{1, 1}, {0, 1}}));
  CHECK(dominant.profile.z == q({{1, 1}, {0, 1}}));

  const auto sexes = game({{3, 0}, {0, 2}}, {{2, 0}, {0, 3}});
  const auto bs = solve_bimatrix(sexes);
  const auto all = support_enumeration(sexes);
  CHECK(std::find(all.begin(), all.end(), bs.profile) != all.end());
}

TEST_CASE("solve_bimatrix on random games matches support enumeration") {
  std::mt19937_64 rng(31);
  for (std::size_t size = 2; size <= 4; ++size) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto g = random_game(size, size, rng);
      const auto sol = solve_bimatrix(g);
      CHECK(is_equilibrium(g, sol.profile));
      CHECK(sol.facs.oracle_calls <= static_cast<int>(2 * size));
      const auto shifted = positivize(g);
      CHECK(verify_complementary(shifted,
                                 complementary_pair(shifted, sol.facs.selection, sol.facs.weights)));
      const auto all = support_enumeration(g);
      CHECK(std::find(all.begin(), all.end(), sol.profile) != all.end());
    }
  }
}

TEST_CASE("non-square games") {
  std::mt19937_64 rng(37);
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 3}, {3, 2}, {2, 4}}) {
    const auto g = random_game(m, n, rng);
    const auto sol = solve_bimatrix(g);
    CHECK(is_equilibrium(g, sol.profile));
    const auto all = support_enumeration(g);
    CHECK(std::find(all.begin(), all.end(), sol.profile) != all.end());
  }
}
