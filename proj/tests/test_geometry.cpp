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

#include "colorful/errors.hpp"
#include "colorful/geometry.hpp"
#include "colorful/linalg.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace clp;
using clp::testing::config;
using clp::testing::pt;
using clp::testing::pts;

namespace {

Vector q(std::initializer_list<const char*> xs) {
  Vector v;
  for (auto x : xs) v.push_back(parse_rational(x));
  return v;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("1.5e-3") == make_rational(3, 2000));
  CHECK(format_rational(make_rational(-6, 4)) == "-3/2");
  CHECK(format_rational(make_rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ClpError);
  CHECK_THROWS_AS(parse_rational("abc"), ClpError);
  CHECK(round_to_significant(0.1) == make_rational(1, 10));
}

TEST_CASE("lp_feasibility examples") {
  SUBCASE("zero solution") {
    auto a = Matrix::from_rows({q({"1", "-1"})});
    auto r = lp_feasibility(a, q({"0"}));
    CHECK(r.feasible);
    CHECK(verify_lp(a, q({"0"}), r));
  }
  SUBCASE("nonnegative row, negative rhs") {
    auto a = Matrix::from_rows({q({"1", "2"})});
    auto r = lp_feasibility(a, q({"-1"}));
    CHECK_FALSE(r.feasible);
    CHECK(r.y == q({"1"}));
    CHECK(verify_lp(a, q({"-1"}), r));
  }
  SUBCASE("2x2 system") {
    auto a = Matrix::from_rows({q({"1", "-3"}), q({"1", "1"})});
    auto r = lp_feasibility(a, q({"0", "1"}));
    REQUIRE(r.feasible);
    CHECK(r.x == q({"3/4", "1/4"}));
  }
  SUBCASE("empty shapes are rejected") {
    CHECK_THROWS_AS(lp_feasibility(Matrix(0, 2), Vector{}), ClpError);
  }
}

TEST_CASE("duality totality on random instances") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> val(-5, 5);
  std::uniform_int_distribution<int> shape(1, 5);
  for (int trial = 0; trial < 10000; ++trial) {
    const int m = shape(rng), n = shape(rng);
    Matrix a(m, n);
    Vector b(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = make_rational(val(rng), 1 + (val(rng) & 3));
      b[i] = val(rng);
    }
    const auto r = lp_feasibility(a, b);
    REQUIRE(verify_lp(a, b, r));
  }
}

TEST_CASE("positive dependence examples") {
  auto a = pts({{1, 0}, {-1, 1}, {-1, -1}});
  auto r = is_positively_dependent(a);
  REQUIRE(r.dependent);
  CHECK(r.convex.weights == q({"1/2", "1/4", "1/4"}));

  auto b = pts({{1, 0}, {0, 1}});
  r = is_positively_dependent(b);
  REQUIRE_FALSE(r.dependent);
  CHECK(verify_farkas(b, r.farkas));
  CHECK(r.farkas.normal[0] > 0);
  CHECK(r.farkas.normal[1] > 0);

  auto c = pts({{2}, {-3}});
  r = is_positively_dependent(c);
  REQUIRE(r.dependent);
  CHECK(r.convex.weights == q({"3/5", "2/5"}));

  CHECK_THROWS_AS(is_positively_dependent(std::vector<Point>{}), ClpError);
  CHECK_THROWS_AS(is_positively_dependent(std::vector<Point>{pt({1}), pt({1, 2})}), ClpError);
}

TEST_CASE("certificate soundness on random point sets") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> val(-9, 9);
  std::uniform_int_distribution<int> shape(1, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    const int d = shape(rng), n = shape(rng);
    std::vector<Point> p(n, Point(d));
    for (auto& x : p)
      for (auto& c : x) c = val(rng);
    const auto r = is_positively_dependent(p);
    if (r.dependent) {
      REQUIRE(verify_convex(p, r.convex));
    } else {
      REQUIRE(verify_farkas(p, r.farkas));
    }
  }
}

TEST_CASE("cone membership examples") {
  auto r = cone_member(pts({{1, 0}, {0, 1}}), pt({2, 3}));
  REQUIRE(r.member);
  CHECK(r.multipliers == q({"2", "3"}));

  const auto ray = pts({{1, 0}});
  r = cone_member(ray, pt({-1, 0}));
  REQUIRE_FALSE(r.member);
  CHECK(verify_cone(ray, pt({-1, 0}), r));
  CHECK(r.separator[0] > 0);

  r = cone_member(pts({{1, 1}, {1, -1}}), pt({1, 0}));
  REQUIRE(r.member);
  CHECK(r.multipliers == q({"1/2", "1/2"}));
}

TEST_CASE("enumerate_pdcs examples") {
  auto c = config(1, {{{1}, {-1}}, {{2}, {-3}}});
  auto all = enumerate_pdcs(c);
  REQUIRE(all.size() == 2);
  CHECK(all[0] == ColorfulSelection({0, 1}));
  CHECK(all[1] == ColorfulSelection({1, 0}));

  auto c2 = config(2, {{{1, 0}, {0, 1}}, {{-1, -1}, {1, 1}}, {{1, -1}, {-1, 1}}});
  auto found = enumerate_pdcs(c2);
  for (const auto& s : found) CHECK(is_positively_dependent(s.points(c2)).dependent);
  // Every selection not reported must fail the test.
  int dependent = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int e = 0; e < 2; ++e) {
        ColorfulSelection s({a, b, e});
        if (is_positively_dependent(s.points(c2)).dependent) ++dependent;
      }
  CHECK(dependent == static_cast<int>(found.size()));

  auto right = config(2, {{{1, 0}, {2, 5}}, {{3, -1}}, {{1, 1}, {4, 4}}});
  CHECK(enumerate_pdcs(right).empty());

  EnumerateOptions tight;
  tight.budget = 3;
  CHECK_THROWS_AS(enumerate_pdcs(c2, tight), ClpError);
}

TEST_CASE("enumerate_pdcs parallel kernel matches the serial reference") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = clp::testing::random_dependent_config(2, 3, rng);
    CHECK(enumerate_pdcs(c) == enumerate_pdcs_serial(c));
  }
}

TEST_CASE("octahedron parity for random pairs") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> val(-40, 40);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 4;
    PointConfiguration c;
    c.dimension = d;
    for (int i = 0; i <= d; ++i) {
      std::vector<Point> pair(2, Point(d));
      for (auto& p : pair)
        for (auto& x : p) x = val(rng);
      c.colors.push_back(pair);
    }
    if (!is_general_position(c, {.include_origin = true})) continue;
    ++checked;
    CHECK(enumerate_pdcs(c).size() % 2 == 0);
  }
  CHECK(checked > 100);
}

TEST_CASE("general position examples") {
  CHECK(is_general_position(config(1, {{{1}, {2}, {3}}})));
  CHECK_FALSE(is_general_position(config(1, {{{1}, {2}, {1}}})));
  CHECK_FALSE(is_general_position(config(2, {{{0, 0}, {1, 1}, {2, 2}}})));
  CHECK(is_general_position(config(2, {{{1, 0}, {0, 1}, {-1, -1}, {2, 1}}})));
  CHECK_FALSE(is_general_position(config(2, {{{1, 1}, {-1, -1}}}), {.include_origin = true}));
}

TEST_CASE("sampled general position path") {
  auto c = config(2, {{{0, 0}, {1, 1}, {2, 2}, {5, 7}, {3, -4}, {9, 1}}});
  GeneralPositionOptions opt;
  opt.budget = 1;
  opt.full_verification = true;
  CHECK_FALSE(is_general_position(c, opt));
  auto dup = config(2, {{{0, 0}, {1, 3}, {2, 2}, {5, 7}, {3, -4}, {1, 3}}});
  opt.full_verification = false;
  CHECK_FALSE(is_general_position(dup, opt));
}

TEST_CASE("perturb reaches general position") {
  auto line = config(2, {{{0, 0}, {1, 1}, {2, 2}}});
  auto out = perturb(line, make_rational(1, 8));
  CHECK(is_general_position(out));
  for (const auto& p : out.flattened()) CHECK(p.size() == 2);

  auto fine = config(2, {{{1, 0}, {0, 1}, {-1, -1}, {2, 1}}});
  CHECK(is_general_position(perturb(fine, make_rational(1, 3))));

  // Symmetric colors: degenerate through the origin but dependent.
  auto sym = config(2, {{{1, 0}, {-1, 0}, {0, 1}}, {{0, 1}, {0, -1}, {1, 0}}, {{2, 2}, {-2, -2}, {1, 0}}});
  PerturbOptions opt;
  opt.preserve_dependence = true;
  out = perturb(sym, make_rational(1, 16), opt);
  CHECK(is_general_position(out));
  for (const auto& color : out.colors) CHECK(is_positively_dependent(color).dependent);
  CHECK_THROWS_AS(perturb(sym, make_rational(0)), ClpError);
}

TEST_CASE("linear algebra kernels agree with the oracle") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> val(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix a(n, n);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    IntegerMatrix ia(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long v = trial % 7 == 0 && i == 1 ? val(rng) * 0 : val(rng);
        a(i, j) = v;
        rows[i][j] = v;
        ia(i, j) = v;
      }
    const Rational det = clp::testing::det_oracle(rows);
    CHECK(determinant(a) == det);
    CHECK(Rational(fraction_free_determinant(ia)) == det);
    const auto inv = fraction_free_inverse(ia);
    CHECK(inv.has_value() == (det != 0));
    CHECK((rank(a) == n) == (det != 0));
    if (det != 0) {
      Vector b(n);
      for (auto& x : b) x = val(rng);
      const auto x = solve_square(a, b);
      REQUIRE(x.has_value());
      CHECK(a.multiply(*x) == b);
    }
  }
}
