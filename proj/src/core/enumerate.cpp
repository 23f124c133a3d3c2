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

// Exhaustive kernels: colorful-set enumeration and (d+1)-subset general
// position checks. Both come in an OpenMP flavour and a serial reference.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>

#include "colorful/errors.hpp"
#include "colorful/geometry.hpp"
#include "colorful/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clp {

namespace {

std::uint64_t selection_count(const PointConfiguration& config, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (const auto& c : config.colors) {
    if (total > budget / c.size()) {
      throw ClpError(ErrorKind::kBudgetExceeded,
                     "colorful selections exceed budget " + std::to_string(budget));
    }
    total *= c.size();
  }
  if (total > budget) {
    throw ClpError(ErrorKind::kBudgetExceeded,
                   "colorful selections exceed budget " + std::to_string(budget));
  }
  return total;
}

// Mixed-radix decode, last color varies fastest (lexicographic order).
ColorfulSelection decode(const PointConfiguration& config, std::uint64_t index) {
  ColorfulSelection s(config.num_colors());
  for (std::size_t i = config.num_colors(); i-- > 0;) {
    const auto size = config.colors[i].size();
    s.set(i, static_cast<int>(index % size));
    index /= size;
  }
  return s;
}

bool selection_qualifies(const PointConfiguration& config, const ColorfulSelection& s) {
  const auto pts = s.points(config);
  if (config.target) return cone_member(pts, *config.target).member;
  return is_positively_dependent(pts).dependent;
}

}  // namespace

std::vector<ColorfulSelection> enumerate_pdcs_serial(const PointConfiguration& config,
                                                     std::uint64_t budget) {
  config.validate();
  const std::uint64_t total = selection_count(config, budget);
  std::vector<ColorfulSelection> out;
  for (std::uint64_t i = 0; i < total; ++i) {
    auto s = decode(config, i);
    if (selection_qualifies(config, s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<ColorfulSelection> enumerate_pdcs(const PointConfiguration& config,
                                              const EnumerateOptions& options) {
  if (!options.parallel) return enumerate_pdcs_serial(config, options.budget);
  config.validate();
  const std::uint64_t total = selection_count(config, options.budget);
  std::vector<char> hit(total, 0);
  const auto n = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) {
    hit[static_cast<std::size_t>(i)] =
        selection_qualifies(config, decode(config, static_cast<std::uint64_t>(i))) ? 1 : 0;
  }
  std::vector<ColorfulSelection> out;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (hit[i]) out.push_back(decode(config, i));
  }
  return out;
}

namespace {

// C(n, k) saturating at limit + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

// Points reduced mod p once; a subset whose mod-p rank is full is affinely
// independent, anything else gets the exact test.
class SubsetChecker {
 public:
  explicit SubsetChecker(const std::vector<Point>& points) : points_(points) {
    dim_ = points.empty() ? 0 : points.front().size();
    reduced_.resize(points.size() * dim_);
    reducible_.assign(points.size(), 1);
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t r = 0; r < dim_; ++r) {
        auto v = modp::reduce(points[i][r]);
        if (!v) {
          reducible_[i] = 0;
          break;
        }
        reduced_[i * dim_ + r] = *v;
      }
  }

  bool independent(std::span<const std::size_t> idx) const {
    const std::size_t rows = dim_ + 1, cols = idx.size();
    bool reducible = true;
    std::vector<std::uint64_t> m(rows * cols);
    for (std::size_t c = 0; c < cols && reducible; ++c) {
      reducible = reducible_[idx[c]] != 0;
      for (std::size_t r = 0; r < dim_; ++r) m[r * cols + c] = reduced_[idx[c] * dim_ + r];
      m[dim_ * cols + c] = 1;
    }
    if (reducible && modp::rank(std::move(m), rows, cols) == cols) return true;
    std::vector<Vector> chosen;
    for (auto i : idx) chosen.push_back(points_[i]);
    return affinely_independent(chosen);
  }

 private:
  const std::vector<Point>& points_;
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> reduced_;
  std::vector<char> reducible_;
};

// Checks a batch of k-subsets (stored back to back); OpenMP when asked.
bool batch_independent(const SubsetChecker& checker, const std::vector<std::size_t>& batch,
                       std::size_t k, bool parallel) {
  const auto count = static_cast<long long>(batch.size() / k);
  bool ok = true;
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
    for (long long s = 0; s < count; ++s) {
      ok = ok && checker.independent(std::span(batch).subspan(static_cast<std::size_t>(s) * k, k));
    }
  } else {
    for (long long s = 0; s < count && ok; ++s) {
      ok = checker.independent(std::span(batch).subspan(static_cast<std::size_t>(s) * k, k));
    }
  }
  return ok;
}

}  // namespace

bool is_general_position(const PointConfiguration& config, const GeneralPositionOptions& options) {
  config.validate();
  std::vector<Point> points = config.flattened();
  if (options.include_origin) points.emplace_back(static_cast<std::size_t>(config.dimension));
  const std::size_t n = points.size();
  const std::size_t k = std::min<std::size_t>(n, static_cast<std::size_t>(config.dimension) + 1);
  if (k == 0) return true;
  const SubsetChecker checker(points);
  constexpr std::size_t kBatch = 4096;

  const std::uint64_t count = binomial_capped(n, k, options.budget);
  if (count <= options.budget || options.full_verification) {
    std::vector<std::size_t> idx(k), batch;
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      batch.insert(batch.end(), idx.begin(), idx.end());
      std::size_t i = k;
      while (i-- > 0 && idx[i] == n - k + i) {
      }
      const bool last = i == static_cast<std::size_t>(-1);
      if (last || batch.size() >= kBatch * k) {
        if (!batch_independent(checker, batch, k, options.parallel)) return false;
        batch.clear();
      }
      if (last) return true;
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  // Sampled check. Coincident points are tested exhaustively since they are
  // the most common degeneracy and a pairwise scan is cheap.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i] == points[j]) return false;
  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> all(n), batch;
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t s = 0; s < options.samples; ++s) {
    // Partial Fisher-Yates for a uniform k-subset.
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    batch.insert(batch.end(), all.begin(), all.begin() + static_cast<long>(k));
  }
  return batch_independent(checker, batch, k, options.parallel);
}

PointConfiguration perturb(const PointConfiguration& config, const Rational& epsilon,
                           const PerturbOptions& options) {
  config.validate();
  if (epsilon <= 0) throw ClpError(ErrorKind::kMalformedInput, "perturbation magnitude must be > 0");
  // Convex weights of the colors whose dependence must survive.
  std::vector<std::optional<Vector>> weights(config.num_colors());
  if (options.preserve_dependence) {
    for (std::size_t i = 0; i < config.num_colors(); ++i) {
      auto dep = is_positively_dependent(config.colors[i]);
      if (dep.dependent) weights[i] = std::move(dep.convex.weights);
    }
  }
  Rational eps = epsilon;
  for (int attempt = 0; attempt <= options.max_halvings; ++attempt) {
    PointConfiguration out = config;
    Rational step = eps;
    long j = 0;
    for (std::size_t i = 0; i < out.num_colors(); ++i) {
      auto& color = out.colors[i];
      Point drift(static_cast<std::size_t>(config.dimension));
      for (std::size_t k = 0; k < color.size(); ++k) {
        Rational moment = 1;
        for (std::size_t r = 0; r < color[k].size(); ++r) {
          const Rational delta = step * moment;
          color[k][r] += delta;
          if (weights[i]) drift[r] += (*weights[i])[k] * delta;
          moment *= (j + 1);
        }
        step *= eps;
        ++j;
      }
      // Translate the color back so its original certificate still cancels.
      if (weights[i])
        for (auto& p : color)
          for (std::size_t r = 0; r < p.size(); ++r) p[r] -= drift[r];
    }
    if (is_general_position(out, options.general_position)) return out;
    eps /= 2;
  }
  throw ClpError(ErrorKind::kDegenerateState, "perturbation did not reach general position");
}

}  // namespace clp
