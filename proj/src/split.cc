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

#include "equisplit/split.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace equisplit {

std::optional<SplitPartition> FindSplitPartition(const Graph& g) {
  const Vertex n = g.order();
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) ++count[g.degree(v)];
  // start[d] = number of vertices with degree > d.
  std::vector<int> start(static_cast<std::size_t>(n) + 1, 0);
  for (int d = n - 1; d >= 0; --d) start[d] = start[d + 1] + count[d + 1];
  std::vector<Vertex> order(n);
  for (Vertex v = 1; v <= n; ++v) order[start[g.degree(v)]++] = v;

  int h = 0;
  while (h < n && g.degree(order[h]) >= h) ++h;

  std::int64_t head = 0;
  std::int64_t tail = 0;
  for (int i = 0; i < n; ++i) (i < h ? head : tail) += g.degree(order[i]);
  if (head != static_cast<std::int64_t>(h) * (h - 1) + tail) {
    return std::nullopt;
  }

  SplitPartition sp;
  sp.clique.assign(order.begin(), order.begin() + h);
  sp.independent.assign(order.begin() + h, order.end());
  std::sort(sp.clique.begin(), sp.clique.end());
  std::sort(sp.independent.begin(), sp.independent.end());
  return sp;
}

bool IsValidPartition(const Graph& g, const SplitPartition& sp) {
  const Vertex n = g.order();
  // 0 = unassigned, 1 = clique, 2 = independent.
  std::vector<char> side(static_cast<std::size_t>(n) + 1, 0);
  for (const auto* part : {&sp.clique, &sp.independent}) {
    const char tag = part == &sp.clique ? 1 : 2;
    for (Vertex v : *part) {
      if (v < 1 || v > n || side[v] != 0) return false;
      side[v] = tag;
    }
  }
  if (sp.clique.size() + sp.independent.size() != static_cast<std::size_t>(n)) {
    return false;
  }
  for (Vertex k : sp.clique) {
    std::size_t in_clique = 0;
    bool sees_independent = false;
    for (Vertex w : g.neighbors(k)) {
      if (side[w] == 1) {
        ++in_clique;
      } else {
        sees_independent = true;
      }
    }
    if (in_clique + 1 != sp.clique.size()) return false;
    if (sp.normalized && !sees_independent) return false;
  }
  for (Vertex i : sp.independent) {
    for (Vertex w : g.neighbors(i)) {
      if (side[w] == 2) return false;
    }
    if (sp.normalized && g.degree(i) == 0) return false;
  }
  return true;
}

SplitPartition NormalizePartition(const Graph& g, SplitPartition sp) {
  if (g.has_isolated_vertex()) {
    throw PreconditionError("normalization requires a graph without isolated "
                            "vertices");
  }
  sp.normalized = false;
  if (!IsValidPartition(g, sp)) {
    throw PreconditionError("not a split partition of the graph");
  }

  std::vector<char> independent(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Vertex i : sp.independent) independent[i] = 1;
  auto lonely = [&](Vertex k) {
    return std::none_of(g.neighbors(k).begin(), g.neighbors(k).end(),
                        [&](Vertex w) { return independent[w] != 0; });
  };

  int moves = 0;
  for (Vertex k : sp.clique) {
    if (lonely(k)) ++moves;
  }
  if (moves > 0) {
    // Clique lists are sorted, so scanning from the back finds the highest id.
    auto it = std::find_if(sp.clique.rbegin(), sp.clique.rend(), lonely);
    const Vertex moved = *it;
    sp.clique.erase(std::next(it).base());
    independent[moved] = 1;
    sp.independent.insert(
        std::lower_bound(sp.independent.begin(), sp.independent.end(), moved),
        moved);
    // Every remaining clique vertex now sees `moved`.
    if (std::any_of(sp.clique.begin(), sp.clique.end(), lonely)) {
      throw std::logic_error("normalization needed more than one move");
    }
  }
  sp.normalized = true;
  return sp;
}

bool IsSplitOracle(const Graph& g) {
  const auto adj = AdjacencyMasks(g);
  const Vertex n = g.order();
  const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
  for (std::uint32_t clique = 0; clique <= full; ++clique) {
    const std::uint32_t independent = full & ~clique;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      const std::uint32_t bit = 1u << v;
      if (clique & bit) {
        ok = (clique & ~(adj[v] | bit)) == 0;
      } else {
        ok = (adj[v] & independent) == 0;
      }
    }
    if (ok) return true;
    if (clique == full) break;
  }
  return false;
}

std::optional<StructurePair> FindGeneralStructure(const Graph& g,
                                                  const SplitPartition& sp) {
  if (!sp.normalized || !IsValidPartition(g, sp)) {
    throw PreconditionError("structure search needs a normalized partition");
  }
  if (sp.independent.size() < 3 || sp.clique.size() < 2) {
    throw PreconditionError("structure search needs |I| >= 3 and |K| >= 2");
  }
  const int clique_size = static_cast<int>(sp.clique.size());
  for (Vertex x : sp.clique) {
    for (Vertex y : sp.independent) {
      const bool pendants_on_x = std::all_of(
          sp.independent.begin(), sp.independent.end(), [&](Vertex z) {
            return z == y || (g.degree(z) == 1 && g.neighbors(z)[0] == x);
          });
      if (!pendants_on_x) continue;
      // N(y) is a subset of K, so comparing degrees is enough.
      if (g.degree(y) == clique_size ||
          (g.degree(y) == clique_size - 1 && !g.adjacent(x, y))) {
        return StructurePair{x, y};
      }
    }
  }
  return std::nullopt;
}

}  // namespace equisplit
