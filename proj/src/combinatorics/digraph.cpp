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
#include <string>

#include "colorful/combinatorics.hpp"
#include "colorful/errors.hpp"

namespace clp {

void Digraph::validate() const {
  if (vertices < 1) throw ClpError(ErrorKind::kInvalidFamily, "digraph needs a vertex");
  for (const auto& [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw ClpError(ErrorKind::kInvalidFamily, "arc endpoint out of range");
    }
  }
}

namespace {

bool valid_ids(const Digraph& graph, const ArcSet& arcs) {
  std::vector<char> seen(graph.arcs.size(), 0);
  for (int a : arcs) {
    if (a < 0 || a >= static_cast<int>(graph.arcs.size()) || seen[a]) return false;
    seen[a] = 1;
  }
  return true;
}

void check_disjoint(const Digraph& graph, const std::vector<ArcSet>& family) {
  std::vector<char> used(graph.arcs.size(), 0);
  for (const auto& member : family)
    for (int a : member) {
      if (used[a]) throw ClpError(ErrorKind::kInvalidFamily, "family members share an arc");
      used[a] = 1;
    }
}

}  // namespace

bool is_circuit(const Digraph& graph, const ArcSet& arcs) {
  if (arcs.empty() || !valid_ids(graph, arcs)) return false;
  std::vector<int> out_arc(graph.vertices, -1), in_count(graph.vertices, 0);
  for (int a : arcs) {
    const auto [u, v] = graph.arcs[a];
    if (out_arc[u] >= 0) return false;
    out_arc[u] = a;
    if (++in_count[v] > 1) return false;
  }
  // Follow the successor map from one vertex; it must close after |arcs| steps.
  const int start = graph.arcs[arcs.front()].first;
  int v = start;
  for (std::size_t step = 0; step < arcs.size(); ++step) {
    if (out_arc[v] < 0) return false;
    v = graph.arcs[out_arc[v]].second;
    if (v == start) return step + 1 == arcs.size();
  }
  return false;
}

bool is_st_path(const Digraph& graph, int s, int t, const ArcSet& arcs) {
  if (s == t || arcs.empty() || !valid_ids(graph, arcs)) return false;
  std::vector<int> out_arc(graph.vertices, -1);
  for (int a : arcs) {
    const int u = graph.arcs[a].first;
    if (out_arc[u] >= 0) return false;
    out_arc[u] = a;
  }
  std::vector<char> visited(graph.vertices, 0);
  int v = s;
  for (std::size_t step = 0; step < arcs.size(); ++step) {
    if (out_arc[v] < 0 || visited[v]) return false;
    visited[v] = 1;
    v = graph.arcs[out_arc[v]].second;
  }
  return v == t;
}

std::size_t shared_arcs(const ArcSet& a, const ArcSet& b) {
  std::size_t n = 0;
  for (int x : a) n += static_cast<std::size_t>(std::count(b.begin(), b.end(), x));
  return n;
}

ArcSet colorful_circuit(const Digraph& graph, const std::vector<ArcSet>& circuits) {
  graph.validate();
  if (circuits.size() != static_cast<std::size_t>(graph.vertices)) {
    throw ClpError(ErrorKind::kInvalidFamily, "need one circuit per vertex");
  }
  for (const auto& c : circuits)
    if (!is_circuit(graph, c)) throw ClpError(ErrorKind::kInvalidFamily, "family member is not a circuit");
  check_disjoint(graph, circuits);

  std::vector<char> alive(graph.vertices, 1);
  while (true) {
    // Circuits entirely inside the remaining vertices.
    std::vector<int> live;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
      const bool inside = std::all_of(circuits[i].begin(), circuits[i].end(),
                                      [&](int a) { return alive[graph.arcs[a].second]; });
      if (inside) live.push_back(static_cast<int>(i));
    }
    std::vector<int> vertex_ids;
    for (int v = 0; v < graph.vertices; ++v)
      if (alive[v]) vertex_ids.push_back(v);
    if (vertex_ids.empty()) throw ClpError(ErrorKind::kInvalidFamily, "no circuit survives");

    std::vector<int> slot(graph.vertices, -1);
    for (std::size_t k = 0; k < vertex_ids.size(); ++k) slot[vertex_ids[k]] = static_cast<int>(k);
    // adjacency: vertex -> live circuits through it; entering[k][c] = the arc
    // of that circuit entering the vertex.
    std::vector<std::vector<int>> adjacency(vertex_ids.size());
    std::vector<std::vector<int>> entering(vertex_ids.size());
    for (std::size_t c = 0; c < live.size(); ++c)
      for (int a : circuits[live[c]]) {
        const int k = slot[graph.arcs[a].second];
        adjacency[k].push_back(static_cast<int>(c));
        entering[k].push_back(a);
      }
    const auto matching = max_bipartite_matching(live.size(), adjacency);
    if (matching.size == vertex_ids.size()) {
      std::vector<int> in_arc(graph.vertices, -1);
      for (std::size_t k = 0; k < vertex_ids.size(); ++k) {
        const auto it = std::find(adjacency[k].begin(), adjacency[k].end(), matching.left[k]);
        in_arc[vertex_ids[k]] = entering[k][static_cast<std::size_t>(it - adjacency[k].begin())];
      }
      // Every vertex has one chosen in-arc: walk backwards until a repeat.
      std::vector<int> seen_at(graph.vertices, -1);
      std::vector<int> walk;
      int v = vertex_ids.front();
      while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(walk.size());
        walk.push_back(in_arc[v]);
        v = graph.arcs[in_arc[v]].first;
      }
      ArcSet out(walk.begin() + seen_at[v], walk.end());
      std::sort(out.begin(), out.end());
      return out;
    }
    for (int k : hall_violator(adjacency, matching)) alive[vertex_ids[k]] = 0;
  }
}

ArcSet colorful_path(const Digraph& graph, int s, int t, const std::vector<ArcSet>& paths) {
  graph.validate();
  if (s < 0 || t < 0 || s >= graph.vertices || t >= graph.vertices || s == t) {
    throw ClpError(ErrorKind::kInvalidFamily, "bad endpoints");
  }
  if (paths.size() + 1 != static_cast<std::size_t>(graph.vertices)) {
    throw ClpError(ErrorKind::kInvalidFamily, "need n-1 paths");
  }
  for (const auto& p : paths)
    if (!is_st_path(graph, s, t, p)) throw ClpError(ErrorKind::kInvalidFamily, "family member is not an s-t path");
  check_disjoint(graph, paths);

  std::vector<char> in_x(graph.vertices, 0);
  std::vector<int> parent(graph.vertices, -1);
  in_x[s] = 1;
  for (const auto& p : paths) {
    if (in_x[t]) break;
    auto it = std::find_if(p.begin(), p.end(), [&](int a) {
      return in_x[graph.arcs[a].first] && !in_x[graph.arcs[a].second];
    });
    if (it == p.end()) throw ClpError(ErrorKind::kInvalidFamily, "path does not leave X");
    const int head = graph.arcs[*it].second;
    in_x[head] = 1;
    parent[head] = *it;
  }
  if (!in_x[t]) throw ClpError(ErrorKind::kInvalidFamily, "t not reached");
  ArcSet out;
  for (int v = t; v != s; v = graph.arcs[parent[v]].first) out.push_back(parent[v]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace clp
