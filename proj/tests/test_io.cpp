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


#include "colorful/bench.hpp"
#include "colorful/errors.hpp"
#include "colorful/io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace clp;
using clp::io::Json;
using clp::testing::config;

TEST_CASE("configuration round trip") {
  auto c = config(2, {{{1, 0}, {-1, 0}}, {{0, 1}, {0, -1}}, {{2, 3}, {-4, -1}}});
  c.colors[0][0][1] = make_rational(-7, 3);
  const auto j = io::to_json(c);
  CHECK(j["colors"][0][0][1] == "-7/3");
  CHECK(io::config_from_json(j) == c);
  c.target = Point{make_rational(1), make_rational(1, 2)};
  CHECK(io::config_from_json(io::to_json(c)) == c);
}

TEST_CASE("numbers and decimal strings parse exactly") {
  const auto j = Json::parse(R"({"dimension": 1, "colors": [[[0.5], ["-3/4"], [2]]]})");
  const auto c = io::config_from_json(j);
  CHECK(c.colors[0][0][0] == make_rational(1, 2));
  CHECK(c.colors[0][1][0] == make_rational(-3, 4));
  CHECK(c.colors[0][2][0] == 2);
}

TEST_CASE("malformed inputs are rejected") {
  const char* bad[] = {
      R"({"colors": [[[1]]]})",
      R"({"dimension": 2, "colors": [[[1]]]})",
      R"({"dimension": 1, "colors": [[["1/0"]]]})",
      R"({"dimension": 1, "colors": [[]]})",
      R"({"dimension": 1, "colors": [[[true]]]})",
      R"({"dimension": "x", "colors": []})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    try {
      io::config_from_json(Json::parse(text));
      FAIL("accepted");
    } catch (const ClpError& e) {
      CHECK((e.kind() == ErrorKind::kMalformedInput || e.kind() == ErrorKind::kDimensionOrEmpty));
    }
  }
  CHECK_THROWS_AS(io::game_from_json(Json::parse(R"({"A": [[1, 2]], "B": [[1]]})")), ClpError);
  CHECK_THROWS_AS(io::matroid_from_json(Json::parse(R"({"kind": "sparse"})")), ClpError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), ClpError);
}

TEST_CASE("selection, game, digraph, labeling and census forms") {
  const ColorfulSelection s({2, std::nullopt, 0});
  CHECK(io::to_json(s).dump() == "[2,null,0]");
  CHECK(io::selection_from_json(io::to_json(s)) == s);

  const auto g = io::game_from_json(Json::parse(R"({"A": [["1/2", 2]], "B": [[3, "-1"]]})"));
  CHECK(g.m() == 1);
  CHECK(g.n() == 2);
  CHECK(io::to_json(g)["A"][0][0] == "1/2");
  CHECK(io::to_json(MixedProfile{{1}, {make_rational(1, 3), make_rational(2, 3)}}, true).dump() ==
        R"({"y":["1"],"z":["1/3","2/3"],"verified":true})");

  const Digraph d{3, {{0, 1}, {1, 2}}};
  CHECK(io::digraph_from_json(io::to_json(d)).arcs == d.arcs);
  CHECK_THROWS_AS(io::digraph_from_json(Json::parse(R"({"vertices": 2, "arcs": [[0, 5]]})")), ClpError);

  const CrossPolytopeLabeling l{2, {0, 1, 1, 0}};
  CHECK(io::labeling_from_json(io::to_json(l)).label == l.label);

  CHECK(io::to_json(Census{4, true}).dump() == R"({"count":4,"parity":"even"})");
}

TEST_CASE("matroid specs") {
  const auto u = io::matroid_from_json(Json::parse(R"({"kind": "uniform", "size": 4, "rank": 2})"));
  CHECK(u->rank() == 2);
  const auto g = io::matroid_from_json(
      Json::parse(R"({"kind": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]})"));
  CHECK(g->rank() == 2);
  const auto lin = io::matroid_from_json(
      Json::parse(R"({"kind": "linear", "vectors": [[1, 0], [0, 1], ["1/2", "1/2"]]})"));
  CHECK(lin->rank() == 2);
  const auto p = io::matroid_from_json(
      Json::parse(R"({"kind": "partition", "blocks": [0, 0, 1], "capacities": [1, 1]})"));
  CHECK(p->rank() == 2);
}

TEST_CASE("facs instances compute missing weights") {
  const auto inst = io::facs_from_json(
      Json::parse(R"({"dimension": 1, "colors": [[[1], [-1]], [[2], [-3]]], "given": [0, 1]})"));
  CHECK(inst.given_weights == Vector{make_rational(3, 4), make_rational(1, 4)});
  CHECK_THROWS_AS(io::facs_from_json(Json::parse(
                      R"({"dimension": 1, "colors": [[[1], [-1]], [[2], [-3]]], "given": [0, 7]})")),
                  ClpError);
}

TEST_CASE("solve result fields") {
  const auto c = config(1, {{{1}, {-1}}, {{2}, {-3}}});
  const auto r = solve_simplexlike(c);
  const auto j = io::to_json(r);
  for (const char* key : {"selection", "weights", "pivots", "time_ms", "rule", "backend"}) CHECK(j.contains(key));
  CHECK(j["backend"] == "exact");
  CHECK(verify_solution(c, io::selection_from_json(j["selection"]), {io::vector_from_json(j["weights"])}));
}

TEST_CASE("bench plans and rows") {
  const auto plan = io::plan_from_json(Json::parse(
      R"({"kinds": ["random", "tube"], "dimensions": [2, 3], "instances": 4, "rule": "bland", "seed": 9,
          "algorithm": "classic"})"));
  CHECK(plan.kinds.size() == 2);
  CHECK(plan.rule == PivotRule::kBland);
  CHECK(plan.algorithm == Algorithm::kClassic);
  CHECK(plan.base_seed == 9);
  CHECK_THROWS_AS(io::plan_from_json(Json::parse(R"({"instances": 0})")), ClpError);
  CHECK_THROWS_AS(io::plan_from_json(Json::parse(R"({"kinds": ["flat"]})")), ClpError);

  auto serial = plan;
  serial.parallel = false;
  const auto a = run_bench(plan);
  const auto b = run_bench(serial);
  REQUIRE(a.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].failures == 0);
    CHECK(a[i].avg_pivots == b[i].avg_pivots);
  }
  // The dummy point has to leave, so the simplex-like solver always pivots.
  auto simplex = plan;
  simplex.algorithm = Algorithm::kSimplexLike;
  for (const auto& row : run_bench(simplex)) CHECK(row.avg_pivots >= 1.0);
  const auto csv = bench_csv(a);
  CHECK(csv.rfind("generator,dimension,instances,avg_time_ms,avg_pivots,failures\n", 0) == 0);
}

TEST_CASE("bench covers d = 1") {
  BenchPlan plan;
  plan.kinds = {GeneratorKind::kRandom};
  plan.dimensions = {1};
  plan.instances = 5;
  const auto rows = run_bench(plan);
  CHECK(rows.front().failures == 0);
}
