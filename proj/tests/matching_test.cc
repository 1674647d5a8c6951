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
#include <set>

#include "doctest.h"
#include "equisplit/generators.h"
#include "equisplit/matching.h"
#include "equisplit/split.h"
#include "oracles.h"

namespace equisplit {
namespace {

using testing::G;

const char* kP4 = "4 3\n1 2\n2 3\n3 4";
const char* kC4 = "4 4\n1 2\n2 3\n3 4\n1 4";
const char* kC5 = "5 5\n1 2\n2 3\n3 4\n4 5\n1 5";

TEST_CASE("maximal matching sizes") {
  CHECK(MaximalMatchingSizes(G(kP4)) == std::vector<int>{1, 2});
  CHECK(MaximalMatchingSizes(G(kC4)) == std::vector<int>{2});
  CHECK(MaximalMatchingSizes(CompleteGraph(4)) == std::vector<int>{2});
  CHECK(MaximalMatchingSizes(StarGraph(6)) == std::vector<int>{1});
  CHECK(MaximalMatchingSizes(Graph()) == std::vector<int>{0});
}

TEST_CASE("equimatchability oracle") {
  CHECK_FALSE(IsEquimatchableOracle(G(kP4)));
  CHECK(IsEquimatchableOracle(G(kC5)));
  CHECK(IsEquimatchableOracle(StarGraph(6)));
  CHECK_FALSE(IsEquimatchableOracle(G("4 5\n1 3\n1 4\n2 3\n2 4\n3 4")));
  CHECK_THROWS_AS(IsEquimatchableOracle(StarGraph(17)), OracleLimitError);
  CHECK_THROWS_AS(FindWitnessMatchings(StarGraph(17)), OracleLimitError);
}

TEST_CASE("witness matchings") {
  const auto p4 = FindWitnessMatchings(G(kP4));
  REQUIRE(p4);
  CHECK(p4->smaller == Matching{{{2, 3}}});
  CHECK(p4->larger == Matching{{{1, 2}, {3, 4}}});
  CHECK(ToString(p4->larger) == "{1-2, 3-4}");
  CHECK_FALSE(FindWitnessMatchings(G(kC4)));

  int found = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = MutateEdge(UniversalPendantGraph(6, 2), seed);
    const auto w = FindWitnessMatchings(g);
    if (!w) continue;
    ++found;
    CHECK(w->smaller.size() < w->larger.size());
    CHECK(IsMaximalMatching(g, w->smaller));
    CHECK(IsMaximalMatching(g, w->larger));
  }
  CHECK(found > 0);
}

TEST_CASE("enumeration visits each maximal matching once") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 9);
    const Graph g = RandomGraph(n, static_cast<double>(rng() % 101) / 100, rng());
    std::set<Matching> seen;
    ForEachMaximalMatching(g, [&](const Matching& m) {
      CHECK(IsMaximalMatching(g, m));
      CHECK(std::is_sorted(m.edges.begin(), m.edges.end()));
      CHECK(seen.insert(m).second);
      return true;
    });
    CHECK(!seen.empty());
  }
}

TEST_CASE("enumeration agrees with subset filtering on every graph up to 6") {
  for (Vertex n = 1; n <= 6; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const Graph g = LabeledGraph(n, mask);
      const std::set<int> expected = testing::SubsetMaximalMatchingSizes(g);
      const std::vector<int> sizes = MaximalMatchingSizes(g);
      REQUIRE(std::set<int>(sizes.begin(), sizes.end()) == expected);
      const bool equi = expected.size() == 1;
      REQUIRE(IsEquimatchableOracle(g, true) == equi);
      REQUIRE(IsEquimatchableOracle(g, false) == equi);
      REQUIRE(FindWitnessMatchings(g).has_value() == !equi);
    }
  }
}

TEST_CASE("isolated vertices do not change matching sizes") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = RandomGraph(2 + static_cast<Vertex>(rng() % 5), 0.3, rng());
    CHECK(MaximalMatchingSizes(g) ==
          MaximalMatchingSizes(StripIsolated(g).graph));
  }
}

TEST_CASE("crossing matching") {
  const Graph iii = UniversalPendantGraph(6, 2);
  CHECK(MaxCrossingMatching(iii,
                            NormalizePartition(iii, *FindSplitPartition(iii))) ==
        2);

  const Graph three = G("6 6\n1 2\n1 3\n2 3\n1 4\n2 5\n3 6");
  CHECK(MaxCrossingMatching(three, {.clique = {1, 2, 3},
                                    .independent = {4, 5, 6}}) == 3);

  const Graph star = StarGraph(5);
  CHECK(MaxCrossingMatching(star, {.clique = {1},
                                   .independent = {2, 3, 4, 5}}) == 1);
  CHECK_THROWS_AS(
      MaxCrossingMatching(star, {.clique = {2, 3}, .independent = {1, 4, 5}}),
      PreconditionError);
}

TEST_CASE("crossing matching agrees with subset search") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex n = 3 + static_cast<Vertex>(rng() % 8);
    const int clique = 1 + static_cast<int>(rng() % (n - 1));
    const Graph g = RandomSplitGraph(
        n, clique, static_cast<double>(rng() % 101) / 100, rng());
    const SplitPartition sp = *FindSplitPartition(g);
    CHECK(MaxCrossingMatching(g, sp) == testing::SubsetCrossingMatching(g, sp));
  }
}

TEST_CASE("two independent vertices and an odd clique give equimatchable") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int clique = 1 + 2 * static_cast<int>(rng() % 5);
    const Graph g = RandomSplitGraph(clique + 2, clique,
                                     static_cast<double>(rng() % 101) / 100,
                                     rng());
    CHECK(IsEquimatchableOracle(g));
  }
}

}  // namespace
}  // namespace equisplit
