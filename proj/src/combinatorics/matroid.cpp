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
#include <numeric>
#include <random>

#include "colorful/combinatorics.hpp"
#include "colorful/errors.hpp"
#include "colorful/linalg.hpp"

namespace clp {

std::size_t Matroid::rank(std::span<const int> elements) const {
  std::vector<int> basis;
  for (int e : elements) {
    basis.push_back(e);
    if (!independent(basis)) basis.pop_back();
  }
  return basis.size();
}

std::size_t Matroid::rank() const {
  std::vector<int> all(ground_size());
  std::iota(all.begin(), all.end(), 0);
  return rank(all);
}

PartitionMatroid::PartitionMatroid(std::vector<int> block_of, std::vector<int> capacity)
    : block_of_(std::move(block_of)), capacity_(std::move(capacity)) {
  for (int b : block_of_) {
    if (b < 0 || b >= static_cast<int>(capacity_.size())) {
      throw ClpError(ErrorKind::kMalformedInput, "partition block out of range");
    }
  }
}

bool PartitionMatroid::independent(std::span<const int> elements) const {
  std::vector<int> used(capacity_.size(), 0);
  for (int e : elements)
    if (++used[block_of_[e]] > capacity_[block_of_[e]]) return false;
  return true;
}

GraphicMatroid::GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(vertices), edges_(std::move(edges)) {}

bool GraphicMatroid::independent(std::span<const int> elements) const {
  std::vector<int> parent(vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e : elements) {
    const int a = find(edges_[e].first), b = find(edges_[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool UniformMatroid::independent(std::span<const int> elements) const {
  return elements.size() <= rank_;
}

bool LinearMatroid::independent(std::span<const int> elements) const {
  if (elements.empty()) return true;
  const std::size_t dim = vectors_.front().size();
  if (elements.size() > dim) return false;
  Matrix m(dim, elements.size());
  for (std::size_t c = 0; c < elements.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = vectors_[elements[c]][r];
  return clp::rank(m) == elements.size();
}

bool spot_check_axioms(const Matroid& matroid, std::uint64_t seed, int trials) {
  const std::size_t n = matroid.ground_size();
  if (!matroid.independent(std::span<const int>{})) return false;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  const auto random_independent = [&] {
    std::vector<int> order(n), out;
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int e : order) {
      if (!coin(rng)) continue;
      out.push_back(e);
      if (!matroid.independent(out)) out.pop_back();
    }
    return out;
  };
  for (int t = 0; t < trials; ++t) {
    auto a = random_independent();
    // Hereditary: dropping any element keeps independence.
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto smaller = a;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (!matroid.independent(smaller)) return false;
    }
    // Exchange: a smaller independent set extends from a larger one.
    auto b = random_independent();
    if (a.size() == b.size()) continue;
    if (a.size() < b.size()) std::swap(a, b);
    bool extended = false;
    for (int e : a) {
      if (std::find(b.begin(), b.end(), e) != b.end()) continue;
      b.push_back(e);
      extended = matroid.independent(b);
      b.pop_back();
      if (extended) break;
    }
    if (!extended) return false;
  }
  return true;
}

std::vector<int> greedy_colorful_basis(const Matroid& matroid, const std::vector<int>& color) {
  const std::size_t d = matroid.rank();
  if (color.size() != matroid.ground_size()) {
    throw ClpError(ErrorKind::kMalformedInput, "coloring does not match the ground set");
  }
  std::vector<std::vector<int>> classes(d);
  for (std::size_t e = 0; e < color.size(); ++e) {
    if (color[e] < 0 || color[e] >= static_cast<int>(d)) {
      throw ClpError(ErrorKind::kMalformedInput, "color out of range");
    }
    classes[color[e]].push_back(static_cast<int>(e));
  }
  for (const auto& c : classes) {
    if (matroid.rank(c) != d) {
      throw ClpError(ErrorKind::kHypothesisViolated, "a color class has no basis");
    }
  }
  std::vector<int> out;
  for (const auto& c : classes) {
    for (int e : c) {
      out.push_back(e);
      if (matroid.independent(out)) break;
      out.pop_back();
    }
  }
  return out;
}

std::vector<int> matroid_intersection(const Matroid& m1, const Matroid& m2,
                                      const std::vector<char>* allowed) {
  const std::size_t n = m1.ground_size();
  if (m2.ground_size() != n) throw ClpError(ErrorKind::kMalformedInput, "ground sets differ");
  std::vector<char> in(n, 0);
  const auto usable = [&](std::size_t e) { return !allowed || (*allowed)[e]; };
  while (true) {
    std::vector<int> current;
    for (std::size_t e = 0; e < n; ++e)
      if (in[e]) current.push_back(static_cast<int>(e));
    const auto with = [&](const Matroid& m, int add, int drop) {
      std::vector<int> s;
      for (int e : current)
        if (e != drop) s.push_back(e);
      s.push_back(add);
      return m.independent(s);
    };
    // BFS from the free elements addable in M1 to those addable in M2.
    // Edges: x -> y (x in I, y out) when I - x + y ∈ M1; y -> x when ∈ M2.
    std::vector<int> prev(n, -2);
    std::vector<int> queue;
    for (std::size_t y = 0; y < n; ++y) {
      if (in[y] || !usable(y)) continue;
      if (with(m1, static_cast<int>(y), -1)) {
        prev[y] = -1;
        queue.push_back(static_cast<int>(y));
      }
    }
    int sink = -1;
    for (std::size_t head = 0; head < queue.size() && sink < 0; ++head) {
      const int u = queue[head];
      if (!in[u]) {
        if (with(m2, u, -1)) {
          sink = u;
          break;
        }
        for (int x : current) {
          if (prev[x] == -2 && with(m2, u, x)) {
            prev[x] = u;
            queue.push_back(x);
          }
        }
      } else {
        for (std::size_t y = 0; y < n; ++y) {
          if (in[y] || !usable(y) || prev[y] != -2) continue;
          if (with(m1, static_cast<int>(y), u)) {
            prev[y] = u;
            queue.push_back(static_cast<int>(y));
          }
        }
      }
    }
    if (sink < 0) return current;
    for (int v = sink; v >= 0; v = prev[v]) in[v] ^= 1;
  }
}

std::vector<int> another_colorful_basis(const Matroid& matroid, const std::vector<int>& color,
                                        const std::vector<int>& basis) {
  const std::size_t n = matroid.ground_size();
  const std::size_t d = matroid.rank();
  if (color.size() != n) throw ClpError(ErrorKind::kMalformedInput, "coloring does not match the ground set");
  std::vector<int> class_size(d, 0);
  for (std::size_t e = 0; e < n; ++e) {
    const int single[] = {static_cast<int>(e)};
    if (!matroid.independent(single)) throw ClpError(ErrorKind::kHypothesisViolated, "matroid has a loop");
    if (color[e] < 0 || color[e] >= static_cast<int>(d)) {
      throw ClpError(ErrorKind::kHypothesisViolated, "need exactly rank-many colors");
    }
    ++class_size[color[e]];
  }
  if (std::any_of(class_size.begin(), class_size.end(), [](int s) { return s < 2; })) {
    throw ClpError(ErrorKind::kHypothesisViolated, "every color needs two elements");
  }
  std::vector<char> hit(d, 0);
  for (int e : basis) {
    if (e < 0 || e >= static_cast<int>(n) || hit[color[e]]) {
      throw ClpError(ErrorKind::kHypothesisViolated, "given set is not colorful");
    }
    hit[color[e]] = 1;
  }
  if (basis.size() != d || !matroid.independent(basis)) {
    throw ClpError(ErrorKind::kHypothesisViolated, "given set is not a basis");
  }
  const PartitionMatroid colors(color, std::vector<int>(d, 1));
  for (int e : basis) {
    std::vector<char> allowed(n, 1);
    allowed[e] = 0;
    auto other = matroid_intersection(matroid, colors, &allowed);
    if (other.size() == d) return other;
  }
  throw ClpError(ErrorKind::kHypothesisViolated, "no other colorful basis");
}

}  // namespace clp
