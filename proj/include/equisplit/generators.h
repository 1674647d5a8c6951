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

#ifndef EQUISPLIT_GENERATORS_H_
#define EQUISPLIT_GENERATORS_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "equisplit/graph.h"
#include "equisplit/recognizer.h"

namespace equisplit {

// Raised for generator parameters outside their documented range.
class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters of one member of a family. `leaves` applies to families iii and
// iv; `both`, `only_y`, `only_x` (the sizes of A, A_x, A_y) to family v.
struct FamilySpec {
  Condition family = Condition::kComplete;
  Vertex n = 0;
  int leaves = 0;
  int both = 0;    // clique vertices adjacent to x and y
  int only_y = 0;  // clique vertices that miss x
  int only_x = 0;  // clique vertices that miss y

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Throws GeneratorError unless spec satisfies its family's constraints.
void ValidateFamilySpec(const FamilySpec& spec);

// Dispatches to the generator of spec.family.
Graph GenerateFamily(const FamilySpec& spec);

// Every valid family member with 4 <= n <= max_n, families in order i..v.
std::vector<FamilySpec> AllFamilySpecs(Vertex max_n);

// K_n.
Graph CompleteGraph(Vertex n);

// K_{1,n-1} centered at vertex 1.
Graph StarGraph(Vertex n);

// Clique on 1..n-r with universal vertex 1; leaves n-r+1..n hang off 1.
// Requires r >= 2, n - r even and n - r >= 4.
Graph UniversalPendantGraph(Vertex n, int r);

// Clique on 1..n-r-1 with x = 1; y = n-r is adjacent to 2..n-r-1; leaves
// n-r+1..n hang off x. Requires r >= 2, n - r even and n - r >= 4.
Graph NearUniversalPendantGraph(Vertex n, int r);

// Clique on 1..n-2. x = n-1 sees A = 1..a and A_y = a+b+1..n-2; y = n sees
// A and A_x = a+1..a+b. Requires n odd, n >= 5, a + b + c = n - 2, a + c >= 1
// and a + b >= 1.
Graph TwoIndependentGraph(Vertex n, int a, int b, int c);

// G(n, p) with a deterministic 64-bit generator.
Graph RandomGraph(Vertex n, double edge_probability, std::uint64_t seed);

// Clique 1..clique_size, independent rest, crossing edges with probability
// attach_probability. Every independent vertex gets at least one clique
// neighbor and every clique vertex at least one independent neighbor.
// Requires 1 <= clique_size < n.
Graph RandomSplitGraph(Vertex n, int clique_size, double attach_probability,
                       std::uint64_t seed);

// Isolated-free G(n, p) sample with n uniform in [min_n, max_n] and p
// uniform in [0.1, 0.9], both drawn from StreamSeed(seed, index). Graphs
// with isolated vertices are redrawn from the same stream.
Graph RandomCheckGraph(Vertex min_n, Vertex max_n, std::uint64_t seed,
                       std::uint64_t index);

// Flips one vertex pair chosen uniformly from the seed. Applying it twice
// with the same seed restores g. May create isolated vertices.
Graph MutateEdge(const Graph& g, std::uint64_t seed);

// The labeled graph on n vertices whose edge set is given by the bits of
// mask over pairs (1,2), (1,3), ..., (1,n), (2,3), ... in that order.
Graph LabeledGraph(Vertex n, std::uint64_t mask);

// Mixes a base seed and an index into an independent stream seed.
std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace equisplit

#endif  // EQUISPLIT_GENERATORS_H_
