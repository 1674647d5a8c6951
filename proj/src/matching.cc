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

#include "equisplit/matching.h"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace equisplit {
namespace {

class MaximalMatchingWalker {
 public:
  MaximalMatchingWalker(const Graph& g,
                        const std::function<bool(const Matching&)>& visit)
      : adj_(AdjacencyMasks(g)), visit_(visit) {}

  void Run(Vertex n) {
    const std::uint32_t all = n == 0 ? 0 : (1u << n) - 1;
    Walk(all, 0);
  }

 private:
  // Returns false once the visitor asked to stop.
  bool Walk(std::uint32_t free, std::uint32_t excluded) {
    std::uint32_t scan = free;
    while (scan != 0) {
      const int u = std::countr_zero(scan);
      scan &= scan - 1;
      std::uint32_t partners = adj_[u] & free;
      if (partners == 0) continue;

      const std::uint32_t rest = free & ~(1u << u);
      while (partners != 0) {
        const int v = std::countr_zero(partners);
        partners &= partners - 1;
        current_.edges.push_back({u + 1, v + 1});
        const bool go_on = Walk(rest & ~(1u << v), excluded);
        current_.edges.pop_back();
        if (!go_on) return false;
      }
      // Two unmatched neighbors can never both be covered.
      if ((adj_[u] & excluded) != 0) return true;
      return Walk(rest, excluded | (1u << u));
    }

    const std::uint32_t unsaturated = free | excluded;
    for (std::uint32_t x = excluded; x != 0; x &= x - 1) {
      if ((adj_[std::countr_zero(x)] & unsaturated) != 0) return true;
    }
    return visit_(current_);
  }

  std::vector<std::uint32_t> adj_;
  const std::function<bool(const Matching&)>& visit_;
  Matching current_;
};

}  // namespace

std::vector<Vertex> Matching::saturated() const {
  std::vector<Vertex> out;
  out.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ToString(const Matching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(m.edges[i].u) + "-" + std::to_string(m.edges[i].v);
  }
  return out + "}";
}

bool IsMatching(const Graph& g, const Matching& m) {
  std::vector<char> used(static_cast<std::size_t>(g.order()) + 1, 0);
  for (const Edge& e : m.edges) {
    if (e.u < 1 || e.u > g.order() || e.v < 1 || e.v > g.order()) return false;
    if (!g.adjacent(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

bool IsMaximalMatching(const Graph& g, const Matching& m) {
  if (!IsMatching(g, m)) return false;
  std::vector<char> used(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Vertex v : m.saturated()) used[v] = 1;
  for (const Edge& e : g.edges()) {
    if (!used[e.u] && !used[e.v]) return false;
  }
  return true;
}

void ForEachMaximalMatching(
    const Graph& g, const std::function<bool(const Matching&)>& visit) {
  MaximalMatchingWalker walker(g, visit);
  walker.Run(g.order());
}

std::vector<int> MaximalMatchingSizes(const Graph& g) {
  std::uint32_t seen = 0;
  ForEachMaximalMatching(g, [&](const Matching& m) {
    seen |= 1u << m.size();
    return true;
  });
  std::vector<int> sizes;
  for (int s = 0; s < 32; ++s) {
    if (seen & (1u << s)) sizes.push_back(s);
  }
  return sizes;
}

bool IsEquimatchableOracle(const Graph& g, bool early_exit) {
  if (!early_exit) return MaximalMatchingSizes(g).size() == 1;
  std::optional<std::size_t> first;
  bool equal = true;
  ForEachMaximalMatching(g, [&](const Matching& m) {
    if (!first) first = m.size();
    equal = *first == m.size();
    return equal;
  });
  return equal;
}

std::optional<WitnessPair> FindWitnessMatchings(const Graph& g) {
  std::optional<Matching> smallest;
  std::optional<Matching> largest;
  ForEachMaximalMatching(g, [&](const Matching& m) {
    if (!smallest || m.size() < smallest->size() ||
        (m.size() == smallest->size() && m < *smallest)) {
      smallest = m;
    }
    if (!largest || m.size() > largest->size() ||
        (m.size() == largest->size() && m < *largest)) {
      largest = m;
    }
    return true;
  });
  if (!smallest || smallest->size() == largest->size()) return std::nullopt;
  return WitnessPair{*std::move(smallest), *std::move(largest)};
}

int MaxCrossingMatching(const Graph& g, const SplitPartition& sp) {
  SplitPartition plain = sp;
  plain.normalized = false;
  if (!IsValidPartition(g, plain)) {
    throw PreconditionError("not a split partition of the graph");
  }
  const std::size_t slots = static_cast<std::size_t>(g.order()) + 1;
  std::vector<char> independent(slots, 0);
  for (Vertex i : sp.independent) independent[i] = 1;
  std::vector<Vertex> mate(slots, 0);  // independent vertex -> clique vertex
  std::vector<int> stamp(slots, -1);

  std::function<bool(Vertex, int)> augment = [&](Vertex k, int round) {
    for (Vertex i : g.neighbors(k)) {
      if (!independent[i] || stamp[i] == round) continue;
      stamp[i] = round;
      if (mate[i] == 0 || augment(mate[i], round)) {
        mate[i] = k;
        return true;
      }
    }
    return false;
  };

  int matched = 0;
  int round = 0;
  for (Vertex k : sp.clique) {
    if (augment(k, round++)) ++matched;
  }
  return matched;
}

}  // namespace equisplit
