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


// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "colorful/combinatorics.hpp"
#include "colorful/errors.hpp"
#include "colorful/games.hpp"
#include "colorful/generators.hpp"
#include "colorful/io.hpp"
#include "colorful/pivot.hpp"
#include "instances.hpp"
#include "test_support.hpp"

using namespace clp;
using namespace clp::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Mean pivots per (generator, dimension), filled by A1 and read by A2.
std::map<std::pair<GeneratorKind, int>, double> g_mean_pivots;

// Colorful, λ ≥ 0, Σλ = 1, Σλx = 0, all in exact arithmetic.
bool certifies(const PointConfiguration& c, const ColorfulSelection& s, const Vector& lambda) {
  if (s.num_colors() != c.num_colors() || lambda.size() != c.num_colors()) return false;
  Point sum(static_cast<std::size_t>(c.dimension));
  Rational total = 0;
  for (std::size_t i = 0; i < c.num_colors(); ++i) {
    const auto& pick = s.pick(i);
    if (!pick || *pick < 0 || *pick >= static_cast<int>(c.colors[i].size())) return false;
    if (lambda[i] < 0) return false;
    total += lambda[i];
    const auto& x = c.colors[i][static_cast<std::size_t>(*pick)];
    for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += lambda[i] * x[r];
  }
  if (total != 1) return false;
  for (const auto& v : sum)
    if (v != 0) return false;
  return true;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Verdict a1_solver_soundness() {
  Verdict v;
  int total = 0, bad = 0;
  double exact_ms = 0, float_ms = 0;
  for (int d : {3, 6, 12, 24, 48}) {
    const auto start = std::chrono::steady_clock::now();
    for (auto kind : all_generator_kinds()) {
      double pivots = 0;
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        ++total;
        const auto inst = generate({kind, d, seed});
        SolveOptions opt;
        opt.backend = d == 48 ? Backend::kFloat64 : Backend::kExact;
        opt.check_hypothesis = false;
        opt.check_general_position = false;
        try {
          const auto r = solve_simplexlike(inst.config, opt);
          pivots += static_cast<double>(r.report.pivots);
          if (!certifies(inst.config, r.selection, r.certificate.weights)) ++bad;
        } catch (const ClpError& e) {
          ++bad;
          if (v.detail.empty()) v.detail = std::string(to_string(kind)) + " d=" + std::to_string(d) + ": " + e.what() + "; ";
        }
      }
      g_mean_pivots[{kind, d}] = pivots / 50;
    }
    (d == 48 ? float_ms : exact_ms) += ms_since(start);
  }
  v.pass = bad == 0 && exact_ms < 10 * 60 * 1000;
  std::ostringstream out;
  out << v.detail << total - bad << "/" << total << " verified; d<=24 exact " << exact_ms / 1000
      << " s, d=48 float64 " << float_ms / 1000 << " s";
  v.detail = out.str();
  return v;
}

Verdict a2_pivot_counts() {
  Verdict v;
  const std::map<int, double> reference{{3, 1.94}, {6, 3.38}, {12, 6.56}, {24, 13.76}, {48, 31.86}};
  std::ostringstream out;
  out << "random:";
  for (auto [d, ref] : reference) {
    const double got = g_mean_pivots.at({GeneratorKind::kRandom, d});
    out << " d=" << d << " " << got << " (" << ref << ")";
    v.pass = v.pass && got <= 3 * ref && got >= ref / 3;
  }
  out << "; d=24:";
  double prev = -1;
  for (auto kind : {GeneratorKind::kHighDensity, GeneratorKind::kMidDensity, GeneratorKind::kRandom,
                    GeneratorKind::kTube, GeneratorKind::kLowDensity}) {
    const double got = g_mean_pivots.at({kind, 24});
    out << " " << to_string(kind) << " " << got;
    v.pass = v.pass && got > prev;
    prev = got;
  }
  v.detail = out.str();
  return v;
}

Verdict a3_reduced_cost_sign() {
  Verdict v;
  std::mt19937_64 rng(401);
  int pairs = 0, disagree = 0;
  while (pairs < 1000) {
    const int d = 2 + pairs % 7;
    const auto c = random_dependent_config(d, d + 2, rng, 30);
    if (!is_general_position(c, {.include_origin = true})) continue;
    std::optional<PivotState> state;
    try {
      state.emplace(c, initial_transversal(c, InitialRule::kSeededRandom, rng()));
    } catch (const ClpError&) {
      continue;
    }
    // Walk the whole run, testing every candidate of each intermediate state.
    while (state->dummy_in_basis()) {
      const auto facet = state->transversal().points(c);
      const int origin = side(facet, Point(static_cast<std::size_t>(d)));
      const int color = state->missing_color();
      std::optional<PointRef> entering;
      Rational best = 0;
      for (int i = 0; i < static_cast<int>(c.colors[color].size()); ++i) {
        const int s = side(facet, c.colors[color][static_cast<std::size_t>(i)]);
        const Rational rc = state->reduced_cost({color, i});
        disagree += (rc < 0) != (s == origin);
        ++pairs;
        if (rc < best) {
          best = rc;
          entering = PointRef{color, i};
        }
      }
      if (!entering) break;
      state->pivot_once(*entering);
    }
  }
  v.pass = disagree == 0;
  v.detail = std::to_string(pairs - disagree) + "/" + std::to_string(pairs) + " pairs agree (d 2..8)";
  return v;
}

Verdict a4_octahedron_parity() {
  Verdict v;
  std::mt19937_64 rng(409);
  int checked = 0, bad = 0;
  for (int d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto c = random_pairs_config(d, rng);
      const auto count = enumerate_pdcs(c).size();
      const auto census = ComplementComplex(c).census();
      bad += count % 2 != 0 || census.count != count;
      ++checked;
    }
  }
  v.pass = bad == 0;
  v.detail = std::to_string(checked - bad) + "/" + std::to_string(checked) + " even and equal to the census";
  return v;
}

// Best-response conditions, written out directly.
bool nash_conditions(const BimatrixGame& g, const MixedProfile& p) {
  const auto m = g.m(), n = g.n();
  if (p.y.size() != m || p.z.size() != n) return false;
  Rational sy = 0, sz = 0;
  for (const auto& x : p.y) {
    if (x < 0) return false;
    sy += x;
  }
  for (const auto& x : p.z) {
    if (x < 0) return false;
    sz += x;
  }
  if (sy != 1 || sz != 1) return false;
  Vector az(m), yb(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      az[i] += g.a(i, j) * p.z[j];
      yb[j] += p.y[i] * g.b(i, j);
    }
  Rational ua = 0, ub = 0;
  for (std::size_t i = 0; i < m; ++i) ua += p.y[i] * az[i];
  for (std::size_t j = 0; j < n; ++j) ub += yb[j] * p.z[j];
  for (const auto& x : az)
    if (x > ua) return false;
  for (const auto& x : yb)
    if (x > ub) return false;
  return true;
}

BimatrixGame fixed_game(std::vector<std::vector<long>> a, std::vector<std::vector<long>> b) {
  BimatrixGame g{Matrix(a.size(), a[0].size()), Matrix(a.size(), a[0].size())};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) {
      g.a(i, j) = a[i][j];
      g.b(i, j) = b[i][j];
    }
  return g;
}

Verdict a5_nash_pipeline() {
  Verdict v;
  std::vector<BimatrixGame> games{fixed_game({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}),
                                  fixed_game({{3, 0}, {0, 2}}, {{2, 0}, {0, 3}})};
  std::mt19937_64 rng(419);
  for (std::size_t size = 2; size <= 4; ++size)
    for (int trial = 0; trial < 50; ++trial) games.push_back(random_game(size, size, rng));
  int bad = 0, max_calls = 0;
  for (const auto& g : games) {
    try {
      const auto sol = solve_bimatrix(g);
      const auto all = support_enumeration(g);
      const bool member = std::find(all.begin(), all.end(), sol.profile) != all.end();
      const bool calls = sol.facs.oracle_calls <= static_cast<int>(g.m() + g.n());
      max_calls = std::max(max_calls, sol.facs.oracle_calls);
      bad += !(nash_conditions(g, sol.profile) && member && calls);
    } catch (const ClpError& e) {
      ++bad;
      v.detail += std::string(e.what()) + "; ";
    }
  }
  v.pass = bad == 0;
  v.detail += std::to_string(games.size() - static_cast<std::size_t>(bad)) + "/" +
              std::to_string(games.size()) + " games; most oracle calls " + std::to_string(max_calls);
  return v;
}

Verdict a6_oracle_consistency() {
  Verdict v;
  std::mt19937_64 rng(421);
  std::uniform_int_distribution<int> coin(0, 2);
  int mismatch = 0, lifted = 0, lift_bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto c = random_small_config(rng);
    const bool with_target = coin(rng) == 0;
    if (with_target) {
      c.target = Point(static_cast<std::size_t>(c.dimension));
      for (auto& x : *c.target) x = coin(rng) - 1;
    }
    const auto pruned = clp_decide(c, {true});
    const auto plain = clp_decide(c, {false});
    mismatch += pruned.yes != plain.yes || pruned.witness != plain.witness;
    if (with_target) continue;
    const bool brute = !enumerate_pdcs(c).empty();
    for (const auto& l : {lift_dim(c), add_color_pair(c)}) {
      ++lifted;
      lift_bad += clp_decide(l).yes != brute || !enumerate_pdcs(l).empty() != brute;
    }
  }
  v.pass = mismatch == 0 && lift_bad == 0;
  v.detail = std::to_string(500 - mismatch) + "/500 pruned = exhaustive; " +
             std::to_string(lifted - lift_bad) + "/" + std::to_string(lifted) + " liftings preserve the answer";
  return v;
}

Verdict a7_combinatorics() {
  Verdict v;
  std::mt19937_64 rng(431);
  int circuits = 0, paths = 0, intersections = 0, bases = 0, cross = 0, total_cross = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto ci = random_circuits(2 + trial % 9, rng);
    const auto c = colorful_circuit(ci.graph, ci.family);
    bool ok = is_circuit(ci.graph, c);
    for (const auto& member : ci.family) ok = ok && shared_arcs(c, member) <= 1;
    circuits += ok;

    const auto pi = random_paths(2 + trial % 9, rng);
    const auto p = colorful_path(pi.graph, pi.s, pi.t, pi.family);
    ok = is_st_path(pi.graph, pi.s, pi.t, p);
    for (const auto& member : pi.family) ok = ok && shared_arcs(p, member) <= 1;
    paths += ok;

    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    const auto n = size(rng);
    const auto m1 = random_matroid(n, rng, kind(rng));
    const auto m2 = random_matroid(n, rng, kind(rng));
    const auto common = matroid_intersection(*m1, *m2);
    intersections += m1->independent(common) && m2->independent(common) &&
                     common.size() == brute_intersection(*m1, *m2);
  }

  // Partition, graphic and linear matroids on 8 loopless elements with a
  // balanced coloring that has a colorful basis.
  std::uniform_int_distribution<int> kind_pick(0, 2);
  int instances = 0;
  for (int trial = 0; instances < 200 && trial < 20000; ++trial) {
    const int kind = std::array{0, 1, 3}[static_cast<std::size_t>(kind_pick(rng))];
    const auto m = random_matroid(8, rng, kind);
    const std::size_t d = m->rank();
    if (d == 0 || 2 * d > 8) continue;
    bool loopless = true;
    for (int e = 0; e < 8; ++e) {
      const int single[] = {e};
      loopless = loopless && m->independent(single);
    }
    if (!loopless) continue;
    std::vector<int> color(8);
    for (int e = 0; e < 8; ++e) color[static_cast<std::size_t>(e)] = e % static_cast<int>(d);
    std::shuffle(color.begin(), color.end(), rng);
    const auto b = matroid_intersection(*m, PartitionMatroid(color, std::vector<int>(d, 1)));
    if (b.size() != d) continue;
    ++instances;
    auto other = another_colorful_basis(*m, color, b);
    auto sorted_b = b;
    std::sort(sorted_b.begin(), sorted_b.end());
    const bool valid = is_colorful_basis(*m, color, other);
    std::sort(other.begin(), other.end());
    bases += valid && other != sorted_b;
  }

  for (int pairs = 1; pairs <= 11; ++pairs) {
    std::uniform_int_distribution<int> lab(0, pairs - 1);
    for (int trial = 0; trial < 50; ++trial) {
      CrossPolytopeLabeling l{pairs, std::vector<int>(2 * static_cast<std::size_t>(pairs))};
      for (auto& x : l.label) x = lab(rng);
      bool any = false;
      for (std::uint32_t mask = 0; mask < (1u << pairs) && !any; ++mask) {
        Facet f(static_cast<std::size_t>(pairs));
        for (int i = 0; i < pairs; ++i) f[static_cast<std::size_t>(i)] = static_cast<int>(mask >> i & 1u);
        any = fully_labeled(l, f);
      }
      ++total_cross;
      const auto got = crosspolytope_decide(l);
      bool ok = got.has_value() == any;
      if (ok && got) {
        const auto other = crosspolytope_another(l, *got);
        ok = fully_labeled(l, *got) && fully_labeled(l, other) && other != *got;
      }
      cross += ok;
    }
  }
  v.pass = circuits == 200 && paths == 200 && intersections == 200 && instances == 200 &&
           bases == 200 && cross == total_cross;
  std::ostringstream out;
  out << "circuits " << circuits << "/200, paths " << paths << "/200, intersection " << intersections
      << "/200, another basis " << bases << "/" << instances << ", cross-polytope " << cross << "/"
      << total_cross;
  v.detail = out.str();
  return v;
}

Verdict a8_reproducibility() {
  Verdict v;
  int checked = 0, bad = 0;
  for (auto kind : all_generator_kinds())
    for (int d : {3, 6, 12})
      for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
        ++checked;
        const auto first = generate({kind, d, seed});
        const auto second = generate({kind, d, seed});
        const bool same_bytes = io::to_json(first).dump() == io::to_json(second).dump();
        const bool differs = io::to_json(generate({kind, d, seed + 1}).config).dump() !=
                             io::to_json(first.config).dump();
        const auto p1 = solve_simplexlike(first.config).report.pivots;
        const auto p2 = solve_simplexlike(second.config).report.pivots;
        bad += !(same_bytes && differs && p1 == p2);
      }
  v.pass = bad == 0;
  v.detail = std::to_string(checked - bad) + "/" + std::to_string(checked) +
             " seeds byte-identical with equal pivot counts";
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"A1", a1_solver_soundness},   {"A2", a2_pivot_counts},    {"A3", a3_reduced_cost_sign},
      {"A4", a4_octahedron_parity},  {"A5", a5_nash_pipeline},   {"A6", a6_oracle_consistency},
      {"A7", a7_combinatorics},      {"A8", a8_reproducibility},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::printf("%s %s  %s [%.1f s]\n", name, v.pass ? "PASS" : "FAIL", v.detail.c_str(),
                ms_since(start) / 1000);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
