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

#include "equisplit/generators.h"

#include <random>
#include <string>

namespace equisplit {
namespace {

double UnitReal(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

void Require(bool ok, const std::string& what) {
  if (!ok) throw GeneratorError(what);
}

void AddClique(std::vector<Edge>& edges, Vertex first, Vertex last) {
  for (Vertex u = first; u <= last; ++u) {
    for (Vertex v = u + 1; v <= last; ++v) edges.push_back({u, v});
  }
}

void RequirePendantFamily(Vertex n, int r) {
  Require(r >= 2, "pendant families need r >= 2");
  Require((n - r) % 2 == 0, "pendant families need n - r even");
  Require(n - r >= 4, "pendant families need n - r >= 4");
}

}  // namespace

void ValidateFamilySpec(const FamilySpec& spec) {
  switch (spec.family) {
    case Condition::kComplete:
      Require(spec.n >= 1, "complete graph needs n >= 1");
      return;
    case Condition::kStar:
      Require(spec.n >= 2, "star needs n >= 2");
      return;
    case Condition::kPendantsOnUniversal:
    case Condition::kPendantsOnNearUniversal:
      RequirePendantFamily(spec.n, spec.leaves);
      return;
    case Condition::kTwoIndependent:
      Require(spec.n >= 5 && spec.n % 2 == 1, "family v needs odd n >= 5");
      Require(spec.both >= 0 && spec.only_y >= 0 && spec.only_x >= 0,
              "family v sizes must be non-negative");
      Require(spec.both + spec.only_y + spec.only_x == spec.n - 2,
              "family v needs a + b + c = n - 2");
      Require(spec.both + spec.only_x >= 1, "x would be isolated");
      Require(spec.both + spec.only_y >= 1, "y would be isolated");
      return;
  }
}

Graph GenerateFamily(const FamilySpec& spec) {
  ValidateFamilySpec(spec);
  switch (spec.family) {
    case Condition::kComplete:
      return CompleteGraph(spec.n);
    case Condition::kStar:
      return StarGraph(spec.n);
    case Condition::kPendantsOnUniversal:
      return UniversalPendantGraph(spec.n, spec.leaves);
    case Condition::kPendantsOnNearUniversal:
      return NearUniversalPendantGraph(spec.n, spec.leaves);
    case Condition::kTwoIndependent:
      return TwoIndependentGraph(spec.n, spec.both, spec.only_y, spec.only_x);
  }
  throw GeneratorError("unknown family");
}

std::vector<FamilySpec> AllFamilySpecs(Vertex max_n) {
  std::vector<FamilySpec> specs;
  for (Vertex n = 4; n <= max_n; ++n) {
    specs.push_back({.family = Condition::kComplete, .n = n});
  }
  for (Vertex n = 4; n <= max_n; ++n) {
    specs.push_back({.family = Condition::kStar, .n = n});
  }
  for (Condition family : {Condition::kPendantsOnUniversal,
                           Condition::kPendantsOnNearUniversal}) {
    for (Vertex n = 6; n <= max_n; ++n) {
      for (int r = 2; n - r >= 4; ++r) {
        if ((n - r) % 2 != 0) continue;
        specs.push_back({.family = family, .n = n, .leaves = r});
      }
    }
  }
  for (Vertex n = 5; n <= max_n; n += 2) {
    for (int a = 0; a <= n - 2; ++a) {
      for (int b = 0; a + b <= n - 2; ++b) {
        const int c = n - 2 - a - b;
        if (a + c < 1 || a + b < 1) continue;
        specs.push_back({.family = Condition::kTwoIndependent,
                         .n = n,
                         .both = a,
                         .only_y = b,
                         .only_x = c});
      }
    }
  }
  return specs;
}

Graph CompleteGraph(Vertex n) {
  Require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  AddClique(edges, 1, n);
  return Graph::FromEdges(n, edges);
}

Graph StarGraph(Vertex n) {
  Require(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n; ++v) edges.push_back({1, v});
  return Graph::FromEdges(n, edges);
}

Graph UniversalPendantGraph(Vertex n, int r) {
  RequirePendantFamily(n, r);
  std::vector<Edge> edges;
  AddClique(edges, 1, n - r);
  for (Vertex leaf = n - r + 1; leaf <= n; ++leaf) edges.push_back({1, leaf});
  return Graph::FromEdges(n, edges);
}

Graph NearUniversalPendantGraph(Vertex n, int r) {
  RequirePendantFamily(n, r);
  const Vertex y = n - r;
  std::vector<Edge> edges;
  AddClique(edges, 1, y - 1);
  for (Vertex k = 2; k < y; ++k) edges.push_back({k, y});
  for (Vertex leaf = y + 1; leaf <= n; ++leaf) edges.push_back({1, leaf});
  return Graph::FromEdges(n, edges);
}

Graph TwoIndependentGraph(Vertex n, int a, int b, int c) {
  ValidateFamilySpec({.family = Condition::kTwoIndependent,
                      .n = n,
                      .both = a,
                      .only_y = b,
                      .only_x = c});
  const Vertex x = n - 1;
  const Vertex y = n;
  std::vector<Edge> edges;
  AddClique(edges, 1, n - 2);
  for (Vertex k = 1; k <= a; ++k) {
    edges.push_back({k, x});
    edges.push_back({k, y});
  }
  for (Vertex k = a + 1; k <= a + b; ++k) edges.push_back({k, y});
  for (Vertex k = a + b + 1; k <= n - 2; ++k) edges.push_back({k, x});
  return Graph::FromEdges(n, edges);
}

Graph RandomGraph(Vertex n, double edge_probability, std::uint64_t seed) {
  Require(n >= 0 && n <= 1 << 16, "random graph order out of range");
  Require(edge_probability >= 0.0 && edge_probability <= 1.0,
          "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (UnitReal(rng) < edge_probability) edges.push_back({u, v});
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph RandomSplitGraph(Vertex n, int clique_size, double attach_probability,
                       std::uint64_t seed) {
  Require(clique_size >= 1 && clique_size < n,
          "random split graph needs 1 <= clique size < n");
  Require(attach_probability >= 0.0 && attach_probability <= 1.0,
          "attach probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const Vertex k_last = clique_size;
  const int independent_size = n - clique_size;
  std::vector<Edge> edges;
  AddClique(edges, 1, k_last);

  std::vector<char> cross(static_cast<std::size_t>(clique_size) *
                              independent_size,
                          0);
  auto at = [&](Vertex k, Vertex i) -> char& {
    return cross[static_cast<std::size_t>(k - 1) * independent_size +
                 (i - k_last - 1)];
  };
  for (Vertex k = 1; k <= k_last; ++k) {
    for (Vertex i = k_last + 1; i <= n; ++i) {
      at(k, i) = UnitReal(rng) < attach_probability;
    }
  }
  for (Vertex i = k_last + 1; i <= n; ++i) {
    bool any = false;
    for (Vertex k = 1; k <= k_last; ++k) any = any || at(k, i);
    if (!any) at(static_cast<Vertex>(1 + UniformBelow(rng, clique_size)), i) = 1;
  }
  for (Vertex k = 1; k <= k_last; ++k) {
    bool any = false;
    for (Vertex i = k_last + 1; i <= n; ++i) any = any || at(k, i);
    if (!any) {
      at(k, static_cast<Vertex>(k_last + 1 +
                                UniformBelow(rng, independent_size))) = 1;
    }
  }
  for (Vertex k = 1; k <= k_last; ++k) {
    for (Vertex i = k_last + 1; i <= n; ++i) {
      if (at(k, i)) edges.push_back({k, i});
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph RandomCheckGraph(Vertex min_n, Vertex max_n, std::uint64_t seed,
                       std::uint64_t index) {
  Require(2 <= min_n && min_n <= max_n, "random check needs 2 <= min n <= max n");
  std::mt19937_64 rng(StreamSeed(seed, index));
  const Vertex n = min_n + static_cast<Vertex>(
                               UniformBelow(rng, max_n - min_n + 1));
  const double p = 0.1 + 0.8 * UnitReal(rng);
  for (;;) {
    Graph g = RandomGraph(n, p, rng());
    if (!g.has_isolated_vertex()) return g;
  }
}

Graph MutateEdge(const Graph& g, std::uint64_t seed) {
  const Vertex n = g.order();
  Require(n >= 2, "mutation needs at least two vertices");
  std::mt19937_64 rng(seed);
  const auto pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t index = UniformBelow(rng, pairs);
  Vertex u = 1;
  while (index >= static_cast<std::uint64_t>(n - u)) {
    index -= n - u;
    ++u;
  }
  const Vertex v = static_cast<Vertex>(u + 1 + index);

  std::vector<Edge> edges = g.edges();
  const Edge flipped{u, v};
  std::erase(edges, flipped);
  if (edges.size() == g.size()) edges.push_back(flipped);
  return Graph::FromEdges(n, edges);
}

Graph LabeledGraph(Vertex n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++bit) {
      if (mask >> bit & 1) edges.push_back({u, v});
    }
  }
  return Graph::FromEdges(n, edges);
}

std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace equisplit
