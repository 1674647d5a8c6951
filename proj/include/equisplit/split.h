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

#ifndef EQUISPLIT_SPLIT_H_
#define EQUISPLIT_SPLIT_H_

#include <optional>
#include <vector>

#include "equisplit/graph.h"
#include "equisplit/small_graph.h"

namespace equisplit {

// Clique/independent-set bipartition of the vertex set. Both sides are kept
// sorted by vertex id.
struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
  // Every clique vertex has a neighbor in the independent side.
  bool normalized = false;

  friend bool operator==(const SplitPartition&, const SplitPartition&) =
      default;
};

// Degree-sequence test: sort degrees non-increasing (ties by ascending id),
// let h be the largest i with d_i >= i - 1; the graph is split iff
// sum_{i<=h} d_i == h(h-1) + sum_{i>h} d_i, and then the first h vertices form
// the clique. O(n + m).
std::optional<SplitPartition> FindSplitPartition(const Graph& g);

// True iff the partition's sides cover V disjointly, the clique side is a
// clique and the independent side is independent. Checks `normalized` too
// when set.
bool IsValidPartition(const Graph& g, const SplitPartition& sp);

// Moves a clique vertex with no independent neighbor (the highest id one)
// to the independent side. At most one such move is ever needed. Throws
// PreconditionError if g has an isolated vertex or sp is not a split
// partition of g.
SplitPartition NormalizePartition(const Graph& g, SplitPartition sp);

// Exhaustive 2^n bipartition search. Throws OracleLimitError above
// kMaxBruteForceOrder vertices.
bool IsSplitOracle(const Graph& g);

struct StructurePair {
  Vertex x = 0;  // clique vertex shared by every independent vertex but y
  Vertex y = 0;

  friend bool operator==(const StructurePair&, const StructurePair&) = default;
};

// Searches for x in K and y in I with N(z) = {x} for every z in I - {y} and
// N(y) in {K - {x}, K}. Requires a normalized partition with |I| >= 3 and
// |K| >= 2. Candidates are tried in (x, y) id order; the first match wins.
std::optional<StructurePair> FindGeneralStructure(const Graph& g,
                                                  const SplitPartition& sp);

}  // namespace equisplit

#endif  // EQUISPLIT_SPLIT_H_
