// Copyright 2026 The Equisplit Authors.
//
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

#include "equisplit/degree_stats.h"

namespace equisplit {

DegreeStats ComputeDegreeStats(const Graph& g) {
  const Vertex n = g.order();
  DegreeStats stats;
  if (n == 0) return stats;

  std::vector<int> start(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) ++start[g.degree(v) + 1];
  for (Vertex d = 1; d <= n; ++d) start[d] += start[d - 1];
  stats.ordering.resize(n);
  for (Vertex v = 1; v <= n; ++v) stats.ordering[start[g.degree(v)]++] = v;

  for (Vertex v = 1; v <= n; ++v) {
    const int d = g.degree(v);
    if (d == n - 1) ++stats.universal;
    if (d == 1) ++stats.leaves;
  }
  const int near_degree = n - stats.leaves - 1;
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) == near_degree) ++stats.near;
  }
  return stats;
}

}  // namespace equisplit
