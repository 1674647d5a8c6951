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

#ifndef EQUISPLIT_MATCHING_H_
#define EQUISPLIT_MATCHING_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "equisplit/graph.h"
#include "equisplit/small_graph.h"
#include "equisplit/split.h"

namespace equisplit {

// A set of edges, stored with u < v in lexicographic order. That order is
// also the canonical serialization used to pick deterministic witnesses.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  std::vector<Vertex> saturated() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

// "{1-2, 3-4}"
std::string ToString(const Matching& m);

// Edges of g, pairwise disjoint.
bool IsMatching(const Graph& g, const Matching& m);

// IsMatching and every edge of g has a saturated endpoint.
bool IsMaximalMatching(const Graph& g, const Matching& m);

// Visits every maximal matching of g exactly once. Branching: take the
// lowest-id free vertex u that still has a free neighbor, then try u-v for
// each free neighbor v in ascending order, then u left unmatched (its
// neighbors must all end up saturated, checked at the leaf). The visitor
// returns false to stop early. Isolated vertices are allowed and never
// matched. Throws OracleLimitError above kMaxBruteForceOrder vertices.
void ForEachMaximalMatching(
    const Graph& g, const std::function<bool(const Matching&)>& visit);

// Sorted set {|M| : M maximal matching of g}.
std::vector<int> MaximalMatchingSizes(const Graph& g);

// True iff all maximal matchings have the same size. With early_exit the
// enumeration stops at the second distinct size; the answer is the same.
bool IsEquimatchableOracle(const Graph& g, bool early_exit = true);

struct WitnessPair {
  Matching smaller;
  Matching larger;
};

// Absent iff g is equimatchable. Otherwise `smaller` is the
// lexicographically least maximal matching of minimum size and `larger`
// the lexicographically least one of maximum size.
std::optional<WitnessPair> FindWitnessMatchings(const Graph& g);

// Maximum number of pairwise disjoint clique-to-independent edges, by
// augmenting paths. Throws PreconditionError if sp is not a split
// partition of g.
int MaxCrossingMatching(const Graph& g, const SplitPartition& sp);

}  // namespace equisplit

#endif  // EQUISPLIT_MATCHING_H_
