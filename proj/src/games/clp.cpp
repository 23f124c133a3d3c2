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


#include <string>

#include "colorful/errors.hpp"
#include "colorful/games.hpp"

namespace clp {

namespace {

struct Test {
  bool ok = false;
  Vector weights;
};

Test run_test(const PointConfiguration& config, std::span<const Point> points) {
  if (config.target) {
    auto r = cone_member(points, *config.target);
    return {r.member, std::move(r.multipliers)};
  }
  auto r = is_positively_dependent(points);
  return {r.dependent, std::move(r.convex.weights)};
}

class Search {
 public:
  Search(const PointConfiguration& config, const ClpDecideOptions& options)
      : config_(config), options_(options), picks_(config.num_colors()) {}

  ClpDecision run() {
    descend(0);
    return std::move(out_);
  }

 private:
  Test test(std::span<const Point> points) {
    if (++out_.nodes > options_.budget) {
      throw ClpError(ErrorKind::kBudgetExceeded,
                     "clp_decide exceeded " + std::to_string(options_.budget) + " LP calls");
    }
    return run_test(config_, points);
  }

  bool descend(std::size_t color) {
    const std::size_t k = config_.num_colors();
    if (color == k) {
      std::vector<Point> chosen;
      for (std::size_t i = 0; i < k; ++i) chosen.push_back(config_.colors[i][*picks_[i]]);
      auto t = test(chosen);
      if (!t.ok) return false;
      out_.yes = true;
      out_.witness = ColorfulSelection(picks_);
      out_.weights = std::move(t.weights);
      return true;
    }
    if (options_.pruning && color > 0) {
      std::vector<Point> relaxed;
      for (std::size_t i = 0; i < color; ++i) relaxed.push_back(config_.colors[i][*picks_[i]]);
      for (std::size_t i = color; i < k; ++i)
        relaxed.insert(relaxed.end(), config_.colors[i].begin(), config_.colors[i].end());
      if (!test(relaxed).ok) {
        ++out_.pruned;
        return false;
      }
    }
    for (int j = 0; j < static_cast<int>(config_.colors[color].size()); ++j) {
      picks_[color] = j;
      if (descend(color + 1)) return true;
    }
    picks_[color].reset();
    return false;
  }

  const PointConfiguration& config_;
  const ClpDecideOptions& options_;
  std::vector<std::optional<int>> picks_;
  ClpDecision out_;
};

}  // namespace

ClpDecision clp_decide(const PointConfiguration& config, const ClpDecideOptions& options) {
  config.validate();
  return Search(config, options).run();
}

void FacsInstance::validate() const {
  config.validate();
  for (const auto& c : config.colors) {
    if (c.size() != 2) throw ClpError(ErrorKind::kMalformedInput, "every color must be a pair");
  }
  if (given.num_colors() != config.num_colors() || !given.is_full()) {
    throw ClpError(ErrorKind::kMalformedInput, "given selection must pick every color");
  }
  const auto pts = given.points(config);
  if (config.target) {
    ConeResult r{true, given_weights, {}};
    if (!verify_cone(pts, *config.target, r)) {
      throw ClpError(ErrorKind::kMalformedInput, "given selection does not cover the target");
    }
    auto all = config.flattened();
    all.push_back(*config.target);
    if (is_positively_dependent(all).dependent) {
      throw ClpError(ErrorKind::kMalformedInput, "origin lies in the hull of the points and target");
    }
  } else if (!verify_convex(pts, {given_weights})) {
    throw ClpError(ErrorKind::kMalformedInput, "given selection is not positively dependent");
  }
}

FacsResult find_another_colorful(const FacsInstance& instance, const ClpOracle& oracle) {
  instance.validate();
  const ClpOracle ask = oracle ? oracle : [](const PointConfiguration& c) { return clp_decide(c); };
  const auto& config = instance.config;
  const std::size_t k = config.num_colors();

  FacsResult out;
  out.selection = ColorfulSelection(k);
  PointConfiguration restricted = config;
  for (std::size_t i = 0; i < k; ++i) {
    const int in_t = *instance.given.pick(i);
    const int other = 1 - in_t;
    restricted.colors[i] = {config.colors[i][other]};
    ++out.oracle_calls;
    if (ask(restricted).yes) {
      out.selection.set(i, other);
    } else {
      restricted.colors[i] = {config.colors[i][in_t]};
      out.selection.set(i, in_t);
    }
  }
  if (out.selection == instance.given) {
    throw ClpError(ErrorKind::kOracleInconsistent, "every restricted call answered no");
  }
  auto t = run_test(config, out.selection.points(config));
  if (!t.ok) throw ClpError(ErrorKind::kOracleInconsistent, "selected set does not certify");
  out.weights = std::move(t.weights);
  return out;
}

}  // namespace clp
