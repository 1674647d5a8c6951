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

#include "equisplit/graph.h"

#include <algorithm>
#include <functional>
#include <string>

namespace equisplit {

Graph Graph::FromEdges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw GraphError("vertex id out of range in edge " +
                       std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    ++offsets[e.u];
    ++offsets[e.v];
  }
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];

  std::vector<Vertex> targets(offsets.back());
  const bool canonical =
      std::all_of(edges.begin(), edges.end(),
                  [](const Edge& e) { return e.u < e.v; }) &&
      std::adjacent_find(edges.begin(), edges.end(),
                         std::greater_equal<Edge>()) == edges.end();
  if (canonical) {
    // Strictly increasing u < v pairs: every list is its lower neighbors in
    // input order followed by its upper neighbors in input order, both
    // already sorted. One pass, no duplicates possible.
    std::vector<std::size_t> lower(offsets.begin(), offsets.end() - 1);
    std::vector<std::size_t> upper(lower);
    for (const Edge& e : edges) ++upper[e.v - 1];
    for (const Edge& e : edges) {
      targets[upper[e.u - 1]++] = e.v;
      targets[lower[e.v - 1]++] = e.u;
    }
    return Graph(std::move(offsets), std::move(targets));
  }

  // First pass scatters in input order. The second pass walks sources in
  // ascending order, so every target list comes out sorted without a
  // comparison sort.
  std::vector<Vertex> scattered(offsets.back());
  {
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (const Edge& e : edges) {
      scattered[fill[e.u - 1]++] = e.v;
      scattered[fill[e.v - 1]++] = e.u;
    }
  }
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (Vertex u = 1; u <= n; ++u) {
    for (std::size_t i = offsets[u - 1]; i < offsets[u]; ++i) {
      targets[fill[scattered[i] - 1]++] = u;
    }
  }

  for (Vertex u = 1; u <= n; ++u) {
    auto first = targets.begin() + static_cast<std::ptrdiff_t>(offsets[u - 1]);
    auto last = targets.begin() + static_cast<std::ptrdiff_t>(offsets[u]);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) {
      throw GraphError("duplicate edge " + std::to_string(std::min(u, *dup)) +
                       " " + std::to_string(std::max(u, *dup)));
    }
  }
  return Graph(std::move(offsets), std::move(targets));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const Vertex n = order();
  if (u < 1 || u > n || v < 1 || v > n) {
    throw GraphError("vertex id out of range");
  }
  if (degree(u) > degree(v)) std::swap(u, v);
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 1; u <= order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::has_isolated_vertex() const {
  for (Vertex v = 1; v <= order(); ++v) {
    if (degree(v) == 0) return true;
  }
  return false;
}

StrippedGraph StripIsolated(const Graph& g) {
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()) + 1, 0);
  Vertex next = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) > 0) relabel[v] = ++next;
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e = {relabel[e.u], relabel[e.v]};
  return {Graph::FromEdges(next, edges), g.order() - next};
}

}  // namespace equisplit
