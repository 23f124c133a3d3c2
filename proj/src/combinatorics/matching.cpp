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


#include <functional>

#include "colorful/combinatorics.hpp"

namespace clp {

Matching max_bipartite_matching(std::size_t right_count,
                                const std::vector<std::vector<int>>& adjacency) {
  Matching m;
  m.left.assign(adjacency.size(), -1);
  m.right.assign(right_count, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int l) {
    for (int r : adjacency[l]) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (m.right[r] < 0 || augment(m.right[r])) {
        m.left[l] = r;
        m.right[r] = l;
        return true;
      }
    }
    return false;
  };
  for (std::size_t l = 0; l < adjacency.size(); ++l) {
    seen.assign(right_count, 0);
    if (augment(static_cast<int>(l))) ++m.size;
  }
  return m;
}

std::vector<int> hall_violator(const std::vector<std::vector<int>>& adjacency,
                               const Matching& matching) {
  std::vector<char> in_x(adjacency.size(), 0), seen_right(matching.right.size(), 0);
  std::vector<int> queue;
  for (std::size_t l = 0; l < adjacency.size(); ++l) {
    if (matching.left[l] < 0) {
      in_x[l] = 1;
      queue.push_back(static_cast<int>(l));
    }
  }
  // With a maximum matching every reached right vertex is matched.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int r : adjacency[queue[head]]) {
      if (seen_right[r]) continue;
      seen_right[r] = 1;
      const int next = matching.right[r];
      if (next >= 0 && !in_x[next]) {
        in_x[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::vector<int> out;
  for (std::size_t l = 0; l < in_x.size(); ++l)
    if (in_x[l]) out.push_back(static_cast<int>(l));
  return out;
}

}  // namespace clp
