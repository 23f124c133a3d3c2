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

#include "colorful/combinatorics.hpp"
#include "colorful/errors.hpp"

namespace clp {

void CrossPolytopeLabeling::validate() const {
  if (pairs < 1 || label.size() != 2 * static_cast<std::size_t>(pairs)) {
    throw ClpError(ErrorKind::kMalformedInput, "need 2·pairs labels");
  }
  for (int l : label)
    if (l < 0 || l >= pairs) throw ClpError(ErrorKind::kMalformedInput, "label out of range");
}

bool fully_labeled(const CrossPolytopeLabeling& labeling, const Facet& facet) {
  if (facet.size() != static_cast<std::size_t>(labeling.pairs)) return false;
  std::vector<char> seen(labeling.pairs, 0);
  for (int i = 0; i < labeling.pairs; ++i) {
    if (facet[i] != 0 && facet[i] != 1) return false;
    const int l = labeling.label[2 * i + facet[i]];
    if (seen[l]) return false;
    seen[l] = 1;
  }
  return true;
}

std::optional<Facet> crosspolytope_decide(const CrossPolytopeLabeling& labeling) {
  labeling.validate();
  std::vector<std::vector<int>> adjacency(labeling.pairs);
  for (int i = 0; i < labeling.pairs; ++i) {
    adjacency[i].push_back(labeling.label[2 * i]);
    if (labeling.label[2 * i + 1] != labeling.label[2 * i]) adjacency[i].push_back(labeling.label[2 * i + 1]);
  }
  const auto m = max_bipartite_matching(static_cast<std::size_t>(labeling.pairs), adjacency);
  if (m.size != static_cast<std::size_t>(labeling.pairs)) return std::nullopt;
  Facet out(labeling.pairs);
  for (int i = 0; i < labeling.pairs; ++i) out[i] = labeling.label[2 * i] == m.left[i] ? 0 : 1;
  return out;
}

Facet crosspolytope_another(const CrossPolytopeLabeling& labeling, const Facet& facet) {
  labeling.validate();
  if (!fully_labeled(labeling, facet)) {
    throw ClpError(ErrorKind::kHypothesisViolated, "given facet is not fully labeled");
  }
  const int n = labeling.pairs;
  std::vector<char> pair_alive(n, 1);
  Facet out(n, -1);
  // A label carried by a single live vertex forces that vertex.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> count(n, 0), holder(n, -1);
    for (int v = 0; v < 2 * n; ++v) {
      if (!pair_alive[v / 2]) continue;
      ++count[labeling.label[v]];
      holder[labeling.label[v]] = v;
    }
    for (int l = 0; l < n; ++l) {
      if (count[l] != 1) continue;
      const int v = holder[l];
      pair_alive[v / 2] = 0;
      out[v / 2] = v % 2;
      changed = true;
      break;
    }
  }
  // Remaining pairs: every remaining label appears exactly twice. Relabel
  // to a compact matroid on the live vertices.
  std::vector<int> vertex_of, block, color, label_id(n, -1);
  int live_pairs = 0;
  for (int i = 0; i < n; ++i) {
    if (!pair_alive[i]) continue;
    for (int s = 0; s < 2; ++s) {
      vertex_of.push_back(2 * i + s);
      block.push_back(live_pairs);
    }
    ++live_pairs;
  }
  if (live_pairs == 0) throw ClpError(ErrorKind::kHypothesisViolated, "the facet is the only one");
  int next_label = 0;
  for (int v : vertex_of) {
    int& id = label_id[labeling.label[v]];
    if (id < 0) id = next_label++;
    color.push_back(id);
  }
  std::vector<int> basis;
  for (std::size_t e = 0; e < vertex_of.size(); ++e) {
    const int v = vertex_of[e];
    if (facet[v / 2] == v % 2) basis.push_back(static_cast<int>(e));
  }
  const PartitionMatroid pairs_matroid(block, std::vector<int>(live_pairs, 1));
  for (int e : another_colorful_basis(pairs_matroid, color, basis)) {
    const int v = vertex_of[e];
    out[v / 2] = v % 2;
  }
  return out;
}

}  // namespace clp
