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

#include <random>

#include "doctest.h"
#include "equisplit/generators.h"
#include "equisplit/split.h"
#include "oracles.h"

namespace equisplit {
namespace {

using testing::G;

const char* kP4 = "4 3\n1 2\n2 3\n3 4";
const char* kC4 = "4 4\n1 2\n2 3\n3 4\n1 4";
const char* kC5 = "5 5\n1 2\n2 3\n3 4\n4 5\n1 5";

TEST_CASE("split partition by degree sequence") {
  const auto p4 = FindSplitPartition(G(kP4));
  REQUIRE(p4);
  CHECK(p4->clique == std::vector<Vertex>{2, 3});
  CHECK(p4->independent == std::vector<Vertex>{1, 4});
  CHECK(IsValidPartition(G(kP4), *p4));

  CHECK_FALSE(FindSplitPartition(G(kC4)));
  CHECK_FALSE(FindSplitPartition(G(kC5)));

  const auto k5 = FindSplitPartition(CompleteGraph(5));
  REQUIRE(k5);
  CHECK(k5->clique.size() == 5);
  CHECK(k5->independent.empty());
}

TEST_CASE("split oracle on small cases") {
  CHECK_FALSE(IsSplitOracle(G(kC4)));
  CHECK_FALSE(IsSplitOracle(G(kC5)));
  CHECK(IsSplitOracle(G(kP4)));
  CHECK(IsSplitOracle(Graph()));
  CHECK_THROWS_AS(IsSplitOracle(CompleteGraph(17)), OracleLimitError);
}

TEST_CASE("normalization examples") {
  const Graph k5 = CompleteGraph(5);
  const SplitPartition k5n = NormalizePartition(k5, *FindSplitPartition(k5));
  CHECK(k5n.clique == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(k5n.independent == std::vector<Vertex>{5});
  CHECK(k5n.normalized);

  const Graph p4 = G(kP4);
  const SplitPartition p4n = NormalizePartition(p4, *FindSplitPartition(p4));
  CHECK(p4n.clique == std::vector<Vertex>{2, 3});
  CHECK(p4n.independent == std::vector<Vertex>{1, 4});

  // Leaf 2 sits in the clique side and has no independent neighbor.
  const Graph star = StarGraph(4);
  const SplitPartition sn =
      NormalizePartition(star, {.clique = {1, 2}, .independent = {3, 4}});
  CHECK(sn.clique == std::vector<Vertex>{1});
  CHECK(sn.independent == std::vector<Vertex>{2, 3, 4});
}

TEST_CASE("normalization preconditions") {
  const Graph with_isolated = G("3 1\n1 2");
  CHECK_THROWS_AS(
      NormalizePartition(with_isolated, *FindSplitPartition(with_isolated)),
      PreconditionError);
  CHECK_THROWS_AS(
      NormalizePartition(G(kP4), {.clique = {1, 2, 3}, .independent = {4}}),
      PreconditionError);
}

TEST_CASE("split partition agrees with the oracle on every graph up to 6") {
  for (Vertex n = 1; n <= 6; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const Graph g = LabeledGraph(n, mask);
      const auto sp = FindSplitPartition(g);
      REQUIRE(sp.has_value() == IsSplitOracle(g));
      if (!sp) continue;
      REQUIRE(IsValidPartition(g, *sp));
      if (g.has_isolated_vertex()) continue;
      const SplitPartition once = NormalizePartition(g, *sp);
      REQUIRE(IsValidPartition(g, once));
      REQUIRE(NormalizePartition(g, once) == once);
    }
  }
}

TEST_CASE("split partition agrees with the oracle on random graphs up to 10") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 3000; ++trial) {
    const Vertex n = 7 + static_cast<Vertex>(rng() % 4);
    const Graph g =
        trial % 2 == 0
            ? RandomGraph(n, static_cast<double>(rng() % 101) / 100, rng())
            : RandomSplitGraph(n, 1 + static_cast<int>(rng() % (n - 1)),
                               static_cast<double>(rng() % 101) / 100, rng());
    const auto sp = FindSplitPartition(g);
    REQUIRE(sp.has_value() == IsSplitOracle(g));
    if (sp) REQUIRE(IsValidPartition(g, *sp));
  }
}

TEST_CASE("general structure pair") {
  const Graph iii = UniversalPendantGraph(6, 2);
  const SplitPartition iii_sp = NormalizePartition(iii, *FindSplitPartition(iii));
  CHECK(iii_sp.clique == std::vector<Vertex>{1, 2, 3});
  CHECK(iii_sp.independent == std::vector<Vertex>{4, 5, 6});
  CHECK(FindGeneralStructure(iii, iii_sp) == StructurePair{1, 4});

  const Graph iv = NearUniversalPendantGraph(8, 4);
  const SplitPartition iv_sp = NormalizePartition(iv, *FindSplitPartition(iv));
  const auto pair = FindGeneralStructure(iv, iv_sp);
  REQUIRE(pair);
  CHECK(*pair == StructurePair{1, 4});
  CHECK(iv.degree(pair->x) == 8 - 2);
  CHECK(iv.degree(pair->y) == 8 - 4 - 2);

  // Triangle with one private independent neighbor per clique vertex.
  const Graph three = G("6 6\n1 2\n1 3\n2 3\n1 4\n2 5\n3 6");
  const SplitPartition three_sp =
      NormalizePartition(three, *FindSplitPartition(three));
  CHECK(three_sp.clique == std::vector<Vertex>{1, 2, 3});
  CHECK_FALSE(FindGeneralStructure(three, three_sp));
}

TEST_CASE("general structure preconditions") {
  const Graph p4 = G(kP4);
  const SplitPartition sp = NormalizePartition(p4, *FindSplitPartition(p4));
  CHECK_THROWS_AS(FindGeneralStructure(p4, sp), PreconditionError);
  SplitPartition raw = *FindSplitPartition(UniversalPendantGraph(6, 2));
  CHECK_THROWS_AS(FindGeneralStructure(UniversalPendantGraph(6, 2), raw),
                  PreconditionError);
}

}  // namespace
}  // namespace equisplit
