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


// Polynomial combinatorial relatives of colorful linear programming:
// colorful circuits and s-t paths in digraphs, colorful matroid bases,
// fully-labeled facets of the cross-polytope boundary, and the complement
// complex whose fully-labeled simplices are the colorful solutions.

#ifndef COLORFUL_COMBINATORICS_HPP_
#define COLORFUL_COMBINATORICS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "colorful/geometry.hpp"

namespace clp {

// ---- bipartite matching ----

struct Matching {
  std::vector<int> left;   // partner on the right, -1 if free
  std::vector<int> right;  // partner on the left, -1 if free
  std::size_t size = 0;
};

// Augmenting paths (Kuhn). adjacency[l] lists right vertices.
Matching max_bipartite_matching(std::size_t right_count,
                                const std::vector<std::vector<int>>& adjacency);

// For a matching of maximum size that leaves some left vertex free: the left
// vertices reachable from free left vertices by alternating paths. Their
// neighborhood is smaller than the set itself. Empty when the matching
// saturates the left side.
std::vector<int> hall_violator(const std::vector<std::vector<int>>& adjacency,
                               const Matching& matching);

// ---- digraphs ----

struct Digraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head); the arc id is the index

  void validate() const;
};

using ArcSet = std::vector<int>;

// Arc sets forming one directed cycle (loops allowed), or a simple s-t path.
bool is_circuit(const Digraph& graph, const ArcSet& arcs);
bool is_st_path(const Digraph& graph, int s, int t, const ArcSet& arcs);
std::size_t shared_arcs(const ArcSet& a, const ArcSet& b);

// A circuit sharing at most one arc with each of the n = |V| pairwise
// arc-disjoint circuits. Throws kInvalidFamily.
ArcSet colorful_circuit(const Digraph& graph, const std::vector<ArcSet>& circuits);

// An s-t path sharing at most one arc with each of the n-1 pairwise
// arc-disjoint s-t paths. Throws kInvalidFamily.
ArcSet colorful_path(const Digraph& graph, int s, int t, const std::vector<ArcSet>& paths);

// ---- matroids ----

class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual std::size_t ground_size() const = 0;
  virtual bool independent(std::span<const int> elements) const = 0;
  // Greedy rank of a subset (the whole ground set by default).
  std::size_t rank(std::span<const int> elements) const;
  std::size_t rank() const;
};

class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::vector<int> block_of, std::vector<int> capacity);
  std::size_t ground_size() const override { return block_of_.size(); }
  bool independent(std::span<const int> elements) const override;

 private:
  std::vector<int> block_of_;
  std::vector<int> capacity_;
};

class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges);
  std::size_t ground_size() const override { return edges_.size(); }
  bool independent(std::span<const int> elements) const override;

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(std::size_t size, std::size_t rank) : size_(size), rank_(rank) {}
  std::size_t ground_size() const override { return size_; }
  bool independent(std::span<const int> elements) const override;

 private:
  std::size_t size_;
  std::size_t rank_;
};

class LinearMatroid : public Matroid {
 public:
  explicit LinearMatroid(std::vector<Vector> vectors) : vectors_(std::move(vectors)) {}
  std::size_t ground_size() const override { return vectors_.size(); }
  bool independent(std::span<const int> elements) const override;

 private:
  std::vector<Vector> vectors_;
};

// Random hereditary and exchange checks; false on the first violation.
bool spot_check_axioms(const Matroid& matroid, std::uint64_t seed, int trials = 200);

// One element per color 0..d-1, d = rank. Throws kHypothesisViolated when a
// color class has rank < d.
std::vector<int> greedy_colorful_basis(const Matroid& matroid, const std::vector<int>& color);

// Maximum common independent set, by shortest augmenting paths in the
// exchange graph. Elements outside `allowed` (when given) are never used.
std::vector<int> matroid_intersection(const Matroid& m1, const Matroid& m2,
                                      const std::vector<char>* allowed = nullptr);

// A colorful basis different from `basis`: for each e in the basis in turn,
// intersect M without e with the color partition matroid. Throws
// kHypothesisViolated when the preconditions fail.
std::vector<int> another_colorful_basis(const Matroid& matroid, const std::vector<int>& color,
                                        const std::vector<int>& basis);

// ---- cross-polytope ----

// Vertex 2i is +e_i and 2i+1 is -e_i, i < pairs; labels in [0, pairs).
struct CrossPolytopeLabeling {
  int pairs = 0;
  std::vector<int> label;

  void validate() const;
};

// Facet: one vertex per antipodal pair, facet[i] = 0 for +e_i, 1 for -e_i.
using Facet = std::vector<int>;

bool fully_labeled(const CrossPolytopeLabeling& labeling, const Facet& facet);

// Perfect matching between antipodal pairs and labels.
std::optional<Facet> crosspolytope_decide(const CrossPolytopeLabeling& labeling);

// Strips labels used once (with their vertex's pair), then another colorful
// basis of the pair partition matroid. Throws kHypothesisViolated.
Facet crosspolytope_another(const CrossPolytopeLabeling& labeling, const Facet& facet);

// ---- complement complex ----

struct Census {
  std::uint64_t count = 0;
  bool even = true;
};

// Vertex set: the flattened points of d+1 pairs. σ belongs to K when the
// points outside σ are positively dependent.
class ComplementComplex {
 public:
  // Throws kDegenerateState unless the points (with 0) are in general
  // position, kMalformedInput unless the colors are d+1 pairs.
  explicit ComplementComplex(PointConfiguration config);

  const PointConfiguration& config() const { return config_; }
  std::size_t vertices() const { return color_of_.size(); }
  int color_of(std::size_t v) const { return color_of_[v]; }
  bool contains(const std::vector<char>& sigma) const;
  // Fully-labeled d-simplices. Throws kVerificationFailed if the count
  // differs from enumerate_pdcs, kBudgetExceeded past the budget.
  Census census(std::uint64_t budget = default_budget()) const;

 private:
  PointConfiguration config_;
  std::vector<int> color_of_;
};

}  // namespace clp

#endif  // COLORFUL_COMBINATORICS_HPP_
