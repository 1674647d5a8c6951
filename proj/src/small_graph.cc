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

#include "equisplit/small_graph.h"

#include <string>

namespace equisplit {

std::vector<std::uint32_t> AdjacencyMasks(const Graph& g) {
  if (g.order() > kMaxBruteForceOrder) {
    throw OracleLimitError("exhaustive oracle limited to " +
                           std::to_string(kMaxBruteForceOrder) +
                           " vertices, got " + std::to_string(g.order()));
  }
  std::vector<std::uint32_t> masks(g.order(), 0);
  for (Vertex v = 1; v <= g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) masks[v - 1] |= 1u << (w - 1);
  }
  return masks;
}

}  // namespace equisplit
