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


// colorful: command-line front end. JSON in, JSON (with --json) or short
// text out. Exit codes: 0 ok, 1 malformed input, 2 verification failure,
// 3 budget exceeded.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "colorful/bench.hpp"
#include "colorful/combinatorics.hpp"
#include "colorful/errors.hpp"
#include "colorful/games.hpp"
#include "colorful/generators.hpp"
#include "colorful/io.hpp"
#include "colorful/pivot.hpp"

namespace {

using clp::io::Json;

constexpr int kMalformed = 1;
constexpr int kVerification = 2;
constexpr int kBudget = 3;

int exit_code(const clp::ClpError& e) {
  switch (e.kind()) {
    case clp::ErrorKind::kBudgetExceeded:
      return kBudget;
    case clp::ErrorKind::kVerificationFailed:
    case clp::ErrorKind::kNotAnEquilibrium:
    case clp::ErrorKind::kOracleInconsistent:
      return kVerification;
    default:
      return kMalformed;
  }
}

void emit(const Json& j, bool json, const std::string& text) {
  if (json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

std::string picks_text(const clp::ColorfulSelection& s) {
  std::string out;
  for (const auto& p : s.picks()) out += (out.empty() ? "" : " ") + (p ? std::to_string(*p) : "-");
  return out;
}

std::string vector_text(const clp::Vector& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + clp::format_rational(x);
  return out;
}

// A stored solve result re-verified from its own embedded configuration.
bool check_entry(const Json& entry) {
  const auto config = clp::io::config_from_json(entry.at("configuration"));
  const auto selection = clp::io::selection_from_json(entry.at("selection"));
  const auto weights = clp::io::vector_from_json(entry.at("weights"));
  if (selection.num_colors() != config.num_colors()) return false;
  for (std::size_t i = 0; i < selection.num_colors(); ++i) {
    const auto& p = selection.pick(i);
    if (p && (*p < 0 || *p >= static_cast<int>(config.colors[i].size()))) return false;
  }
  return clp::verify_solution(config, selection, {weights});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colorful linear programming toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON on stdout");

  auto* gen = app.add_subcommand("generate", "Generate a seeded instance");
  std::string kind = "random", out_path;
  int dim = 3;
  std::uint64_t seed = 0;
  gen->add_option("--kind", kind, "random|tube|highdensity|lowdensity|middensity");
  gen->add_option("--dim", dim, "Dimension d")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("-o,--output", out_path, "Output file (stdout when omitted)");

  auto* solve = app.add_subcommand("solve", "Find a positively dependent colorful set");
  std::string algo = "simplex", rule = "dantzig", backend = "exact", facet = "ray", in_path;
  solve->add_option("--algo", algo)->check(CLI::IsMember({"simplex", "classic"}));
  solve->add_option("--rule", rule)->check(CLI::IsMember({"dantzig", "bland"}));
  solve->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float64"}));
  solve->add_option("--facet", facet, "Classic facet rule")->check(CLI::IsMember({"ray", "closest"}));
  solve->add_option("-o,--output", out_path, "Write the result JSON here");
  solve->add_option("file", in_path)->required();

  auto* check = app.add_subcommand("check", "Re-verify stored solve results");
  check->add_option("file", in_path)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Brute-force census of colorful solutions");
  enumerate->add_option("file", in_path)->required();

  auto* decide = app.add_subcommand("decide", "Decide colorful linear programming");
  bool exhaustive = false;
  decide->add_flag("--exhaustive", exhaustive, "Disable relaxation pruning");
  decide->add_option("file", in_path)->required();

  auto* facs = app.add_subcommand("facs", "Find another colorful simplex");
  facs->add_option("file", in_path)->required();

  auto* nash = app.add_subcommand("nash", "Nash equilibrium of a bimatrix game");
  nash->add_option("file", in_path)->required();

  auto* bench = app.add_subcommand("bench", "Run the benchmark grid");
  std::string plan_path;
  bool serial = false;
  bench->add_option("--plan", plan_path, "Plan JSON (defaults otherwise)");
  bench->add_flag("--serial", serial, "Run instances one at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kMalformed;
  }

  try {
    if (*gen) {
      const auto inst = clp::generate({clp::parse_generator_kind(kind), dim, seed});
      const auto j = clp::io::to_json(inst);
      if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
      } else {
        clp::io::write_file(out_path, j);
      }
      return 0;
    }
    if (*solve) {
      const auto config = clp::io::config_from_json(clp::io::read_file(in_path));
      clp::SolveOptions options;
      options.rule = clp::parse_pivot_rule(rule);
      options.backend = clp::parse_backend(backend);
      options.facet = facet == "closest" ? clp::FacetRule::kClosest : clp::FacetRule::kRayExit;
      const auto result =
          algo == "classic" ? clp::solve_classic_bo(config, options) : clp::solve_simplexlike(config, options);
      auto j = clp::io::to_json(result);
      j["algorithm"] = algo;
      j["configuration"] = clp::io::to_json(config);
      if (!out_path.empty()) clp::io::write_file(out_path, j);
      emit(j, json,
           "selection " + picks_text(result.selection) + "\nweights " + vector_text(result.certificate.weights) +
               "\npivots " + std::to_string(result.report.pivots));
      return 0;
    }
    if (*check) {
      const auto j = clp::io::read_file(in_path);
      const Json entries = j.is_array() ? j : Json::array({j});
      Json report = Json::array();
      bool all = true;
      for (const auto& entry : entries) {
        bool ok = false;
        try {
          ok = check_entry(entry);
        } catch (const clp::ClpError&) {
        } catch (const nlohmann::json::exception&) {
        }
        all = all && ok;
        report.push_back(ok);
      }
      emit(Json{{"verified", report}, {"all", all}}, json, all ? "ok" : "FAILED");
      return all ? 0 : kVerification;
    }
    if (*enumerate) {
      const auto config = clp::io::config_from_json(clp::io::read_file(in_path));
      const auto all = clp::enumerate_pdcs(config);
      Json sel = Json::array();
      for (const auto& s : all) sel.push_back(clp::io::to_json(s));
      Json j = clp::io::to_json(clp::Census{all.size(), all.size() % 2 == 0});
      j["selections"] = std::move(sel);
      emit(j, json, "count " + std::to_string(all.size()) + (all.size() % 2 == 0 ? " (even)" : " (odd)"));
      return 0;
    }
    if (*decide) {
      const auto config = clp::io::config_from_json(clp::io::read_file(in_path));
      clp::ClpDecideOptions options;
      options.pruning = !exhaustive;
      const auto d = clp::clp_decide(config, options);
      emit(clp::io::to_json(d), json,
           d.yes ? "yes: " + picks_text(*d.witness) + " weights " + vector_text(d.weights) : "no");
      return 0;
    }
    if (*facs) {
      const auto inst = clp::io::facs_from_json(clp::io::read_file(in_path));
      const auto r = clp::find_another_colorful(inst);
      emit(clp::io::to_json(r), json,
           "selection " + picks_text(r.selection) + "\noracle calls " + std::to_string(r.oracle_calls));
      return 0;
    }
    if (*nash) {
      const auto game = clp::io::game_from_json(clp::io::read_file(in_path));
      const auto sol = clp::solve_bimatrix(game);
      const bool ok = clp::is_equilibrium(game, sol.profile);
      emit(clp::io::to_json(sol.profile, ok), json,
           "y " + vector_text(sol.profile.y) + "\nz " + vector_text(sol.profile.z));
      return ok ? 0 : kVerification;
    }
    if (*bench) {
      auto plan = plan_path.empty() ? clp::BenchPlan{} : clp::io::plan_from_json(clp::io::read_file(plan_path));
      if (serial) plan.parallel = false;
      const auto rows = clp::run_bench(plan);
      Json j = Json::array();
      int failures = 0;
      for (const auto& r : rows) {
        failures += r.failures;
        j.push_back({{"generator", std::string(clp::to_string(r.generator))},
                     {"dimension", r.dimension},
                     {"instances", r.instances},
                     {"avg_time_ms", r.avg_time_ms},
                     {"avg_pivots", r.avg_pivots},
                     {"failures", r.failures}});
      }
      emit(j, json, clp::bench_csv(rows));
      return failures == 0 ? 0 : kVerification;
    }
  } catch (const clp::ClpError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return 0;
}
