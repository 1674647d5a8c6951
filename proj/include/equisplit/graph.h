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

#ifndef EQUISPLIT_GRAPH_H_
#define EQUISPLIT_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace equisplit {

// Vertices are dense 1-based ids in [1, n].
using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Raised for structurally invalid graphs: self-loops, duplicate edges and
// out-of-range vertex ids.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph in compressed sparse row form. Every
// adjacency list is strictly increasing.
class Graph {
 public:
  // The empty graph (n = 0).
  Graph() : offsets_(1, 0) {}

  // Builds the canonical graph in O(n + m). Edges may be given in either
  // orientation; self-loops, duplicates and ids outside [1, n] throw
  // GraphError.
  static Graph FromEdges(Vertex n, std::span<const Edge> edges);

  Vertex order() const { return static_cast<Vertex>(offsets_.size() - 1); }
  std::size_t size() const { return targets_.size() / 2; }

  int degree(Vertex v) const {
    return static_cast<int>(offsets_[v] - offsets_[v - 1]);
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v - 1],
            targets_.data() + offsets_[v]};
  }

  // True iff uv is an edge. Binary search on the shorter list. Throws
  // GraphError for ids outside [1, n].
  bool adjacent(Vertex u, Vertex v) const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_isolated_vertex() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::vector<std::size_t> offsets, std::vector<Vertex> targets)
      : offsets_(std::move(offsets)), targets_(std::move(targets)) {}

  // offsets_[v - 1] .. offsets_[v] delimit the neighbors of v.
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

struct StrippedGraph {
  Graph graph;
  int removed = 0;
};

// Induced subgraph on the vertices of positive degree, relabeled 1..n'
// preserving relative order.
StrippedGraph StripIsolated(const Graph& g);

}  // namespace equisplit

#endif  // EQUISPLIT_GRAPH_H_
