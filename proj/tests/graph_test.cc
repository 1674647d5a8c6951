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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "equisplit/degree_stats.h"
#include "equisplit/generators.h"
#include "equisplit/graph.h"
#include "equisplit/graph_io.h"
#include "oracles.h"

namespace equisplit {
namespace {

using testing::G;

constexpr const char* kK4 = "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4";

ParseErrorKind KindOf(const char* text, int* line = nullptr) {
  try {
    ParseGraph(text);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  FAIL("expected a parse error for: " << text);
  return ParseErrorKind::kMalformedHeader;
}

TEST_CASE("parse path and complete graph") {
  const Graph p3 = G("3 2\n1 2\n2 3");
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3.degree(2) == 2);
  CHECK(p3.adjacent(1, 2));
  CHECK_FALSE(p3.adjacent(1, 3));

  const Graph k4 = G(kK4);
  for (Vertex v = 1; v <= 4; ++v) CHECK(k4.degree(v) == 3);
  CHECK(k4.adjacent(1, 3));
}

TEST_CASE("parse accepts comments, CRLF, reversed pairs, no final newline") {
  const Graph g = G("# a path\r\n3 2\r\n# middle\r\n2 1\r\n3 2\r\n");
  CHECK(g == G("3 2\n1 2\n2 3\n"));
  CHECK(g.neighbors(2)[0] == 1);
  CHECK(g.neighbors(2)[1] == 3);
}

TEST_CASE("parse errors name kind and line") {
  int line = 0;
  CHECK(KindOf("2 1\n1 1", &line) == ParseErrorKind::kSelfLoop);
  CHECK(line == 2);
  CHECK(KindOf("3 2\n1 2\n2 1", &line) == ParseErrorKind::kDuplicateEdge);
  CHECK(line == 3);
  CHECK(KindOf("3 1\n1 4", &line) == ParseErrorKind::kVertexOutOfRange);
  CHECK(line == 2);
  CHECK(KindOf("3 1\n0 2") == ParseErrorKind::kVertexOutOfRange);
  CHECK(KindOf("3 2\n1 2", &line) == ParseErrorKind::kEdgeCountMismatch);
  CHECK(line == 3);
  CHECK(KindOf("3 1\n1 2\n2 3", &line) == ParseErrorKind::kEdgeCountMismatch);
  CHECK(line == 3);
  CHECK(KindOf("3  2\n1 2\n2 3") == ParseErrorKind::kMalformedHeader);
  CHECK(KindOf("x") == ParseErrorKind::kMalformedHeader);
  CHECK(KindOf("") == ParseErrorKind::kMalformedHeader);
  CHECK(KindOf("# only a comment\n") == ParseErrorKind::kMalformedHeader);
  CHECK(KindOf("3 1\n1\t2") == ParseErrorKind::kMalformedEdge);
  CHECK(KindOf("3 1\n1 2 3") == ParseErrorKind::kMalformedEdge);
  CHECK(KindOf("3 1\n\n1 2") == ParseErrorKind::kMalformedEdge);
  CHECK(KindOf("3 4\n") == ParseErrorKind::kEdgeCountMismatch);
}

TEST_CASE("FromEdges rejects invalid edge lists") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::FromEdges(2, loop), GraphError);
  const std::vector<Edge> dup{{1, 2}, {2, 1}};
  CHECK_THROWS_AS(Graph::FromEdges(2, dup), GraphError);
  const std::vector<Edge> range{{1, 3}};
  CHECK_THROWS_AS(Graph::FromEdges(2, range), GraphError);
}

TEST_CASE("sorted and shuffled edge lists build the same graph") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = RandomGraph(12, 0.4, 1000 + trial);
    std::vector<Edge> edges = g.edges();
    CHECK(Graph::FromEdges(12, edges) == g);
    std::shuffle(edges.begin(), edges.end(), rng);
    for (Edge& e : edges) {
      if (rng() & 1) std::swap(e.u, e.v);
    }
    CHECK(Graph::FromEdges(12, edges) == g);
  }
  const std::vector<Edge> dup = {{1, 2}, {1, 2}};
  CHECK_THROWS_AS(Graph::FromEdges(3, dup), GraphError);
  const std::vector<Edge> unsorted_dup = {{1, 3}, {1, 2}, {3, 1}};
  CHECK_THROWS_AS(Graph::FromEdges(3, unsorted_dup), GraphError);
}

TEST_CASE("adjacent is symmetric, irreflexive and range-checked") {
  const Graph g = RandomGraph(12, 0.4, 5);
  for (Vertex u = 1; u <= 12; ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (Vertex v = 1; v <= 12; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
  CHECK_THROWS_AS(g.adjacent(0, 1), GraphError);
  CHECK_THROWS_AS(g.adjacent(1, 13), GraphError);
}

TEST_CASE("canonical form invariants and text round trip") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = static_cast<Vertex>(rng() % 15);
    const Graph g = RandomGraph(n, static_cast<double>(rng() % 101) / 100, rng());
    std::size_t degree_sum = 0;
    for (Vertex v = 1; v <= n; ++v) {
      auto list = g.neighbors(v);
      CHECK(list.size() == static_cast<std::size_t>(g.degree(v)));
      CHECK(std::adjacent_find(list.begin(), list.end(),
                               [](Vertex a, Vertex b) { return a >= b; }) ==
            list.end());
      for (Vertex w : list) CHECK(g.adjacent(w, v));
      degree_sum += list.size();
    }
    CHECK(degree_sum == 2 * g.size());
    CHECK(ParseGraph(FormatGraph(g)) == g);
  }
}

TEST_CASE("strip isolated vertices") {
  const Graph k4_plus = G("5 6\n1 2\n1 3\n1 5\n2 3\n2 5\n3 5");
  const auto stripped = StripIsolated(k4_plus);
  CHECK(stripped.removed == 1);
  CHECK(stripped.graph == G(kK4));

  const auto empty = StripIsolated(G("3 0"));
  CHECK(empty.removed == 3);
  CHECK(empty.graph.order() == 0);

  const Graph p3 = G("3 2\n1 2\n2 3");
  CHECK(StripIsolated(p3).removed == 0);
  CHECK(StripIsolated(p3).graph == p3);
}

TEST_CASE("degree statistics") {
  const DegreeStats k4 = ComputeDegreeStats(G(kK4));
  CHECK(k4.universal == 4);
  CHECK(k4.leaves == 0);
  CHECK(k4.ordering == std::vector<Vertex>{1, 2, 3, 4});

  const DegreeStats star = ComputeDegreeStats(StarGraph(4));
  CHECK(star.universal == 1);
  CHECK(star.leaves == 3);
  CHECK(star.near == 0);
  CHECK(star.ordering == std::vector<Vertex>{2, 3, 4, 1});

  // Degrees (5, 3, 3, 3, 1, 1).
  const DegreeStats iii = ComputeDegreeStats(UniversalPendantGraph(6, 2));
  CHECK(iii.universal == 1);
  CHECK(iii.leaves == 2);
  CHECK(iii.near == 3);
  CHECK(iii.ordering == std::vector<Vertex>{5, 6, 2, 3, 4, 1});
}

TEST_CASE("degree ordering is a sorted permutation with id tie-break") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 20);
    const Graph g = RandomGraph(n, static_cast<double>(rng() % 101) / 100, rng());
    const DegreeStats s = ComputeDegreeStats(g);
    std::vector<char> seen(n + 1, 0);
    for (Vertex v : s.ordering) seen[v]++;
    for (Vertex v = 1; v <= n; ++v) CHECK(seen[v] == 1);
    for (int k = 1; k < n; ++k) {
      const Vertex a = s.ordering[k - 1];
      const Vertex b = s.ordering[k];
      CHECK((g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b)));
    }
    int p = 0, r = 0, q = 0;
    for (Vertex v = 1; v <= n; ++v) {
      p += g.degree(v) == n - 1;
      r += g.degree(v) == 1;
    }
    for (Vertex v = 1; v <= n; ++v) q += g.degree(v) == n - r - 1;
    CHECK(s.universal == p);
    CHECK(s.leaves == r);
    CHECK(s.near == q);
  }
}

}  // namespace
}  // namespace equisplit
