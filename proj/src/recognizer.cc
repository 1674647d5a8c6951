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

#include "equisplit/recognizer.h"

#include <stdexcept>
#include <vector>

#include "equisplit/matching.h"
#include "equisplit/small_graph.h"
#include "equisplit/split.h"

namespace equisplit {
namespace {

void RequireRecognizable(const Graph& g) {
  if (g.order() < 4) {
    throw PreconditionError("recognition needs at least 4 vertices");
  }
  if (g.has_isolated_vertex()) {
    throw PreconditionError("recognition needs a graph without isolated "
                            "vertices");
  }
}

RecognitionResult Yes(Condition c, DegreeStats stats) {
  RecognitionResult result;
  result.verdict = Verdict::kYes;
  result.condition = c;
  result.stats = std::move(stats);
  return result;
}

RecognitionResult No(Reason r, DegreeStats stats) {
  RecognitionResult result;
  result.reason = r;
  result.stats = std::move(stats);
  return result;
}

}  // namespace

std::string_view ToString(Condition c) {
  switch (c) {
    case Condition::kComplete:
      return "i";
    case Condition::kStar:
      return "ii";
    case Condition::kPendantsOnUniversal:
      return "iii";
    case Condition::kPendantsOnNearUniversal:
      return "iv";
    case Condition::kTwoIndependent:
      return "v";
  }
  return "?";
}

std::optional<Condition> ConditionFromString(std::string_view tag) {
  for (Condition c :
       {Condition::kComplete, Condition::kStar, Condition::kPendantsOnUniversal,
        Condition::kPendantsOnNearUniversal, Condition::kTwoIndependent}) {
    if (ToString(c) == tag) return c;
  }
  return std::nullopt;
}

std::string_view ToString(Reason r) {
  switch (r) {
    case Reason::kEvenOrder:
      return "n-even-in-clique-branch";
    case Reason::kThirdDegreeTooSmall:
      return "third-degree-below-n-minus-2";
    case Reason::kDegreeSumMismatch:
      return "degree-sum-mismatch";
    case Reason::kNoConditionMatched:
      return "no-condition-matched";
    case Reason::kSmallCaseOracle:
      return "small-case-oracle";
  }
  return "?";
}

RecognitionResult Recognize(const Graph& g) {
  RequireRecognizable(g);
  DegreeStats stats = ComputeDegreeStats(g);
  const int n = g.order();
  const int p = stats.universal;
  const int r = stats.leaves;
  const int q = stats.near;
  auto d = [&](int k) { return stats.degree_at(g, k); };
  auto v = [&](int k) { return stats.ordering[k - 1]; };

  if (d(2) == n - 1) return Yes(Condition::kComplete, std::move(stats));

  if (d(2) >= 2) {
    if (n % 2 == 0) return No(Reason::kEvenOrder, std::move(stats));
    if (d(3) < n - 2) return No(Reason::kThirdDegreeTooSmall, std::move(stats));
    if (d(1) + d(2) != p + n - 2) {
      return No(Reason::kDegreeSumMismatch, std::move(stats));
    }
    ConditionProfile profile{v(1), v(2)};
    RecognitionResult result = Yes(Condition::kTwoIndependent, std::move(stats));
    result.profile = profile;
    return result;
  }

  // From here on d(v2) = 1, so r >= 2.
  if (p == 1) {
    if (r == n - 1) return Yes(Condition::kStar, std::move(stats));
    if ((n - r) % 2 == 0 && q == n - r - 1) {
      return Yes(Condition::kPendantsOnUniversal, std::move(stats));
    }
  }
  if ((n - r) % 2 == 0 && r < n && d(r + 1) == n - r - 2 && q == n - r - 2 &&
      d(n) == n - 2 && !g.adjacent(v(r + 1), v(n))) {
    // d(v_n) = n - 2 rules out a universal vertex.
    if (p != 0 || r < 2) {
      throw std::logic_error("pendant branch reached with p > 0 or r < 2");
    }
    ConditionProfile profile{v(n), v(r + 1)};
    RecognitionResult result =
        Yes(Condition::kPendantsOnNearUniversal, std::move(stats));
    result.profile = profile;
    return result;
  }
  return No(Reason::kNoConditionMatched, std::move(stats));
}

std::optional<Condition> CheckCharacterization(const Graph& g) {
  RequireRecognizable(g);
  const int n = g.order();
  int p = 0;
  int r = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) == n - 1) ++p;
    if (g.degree(v) == 1) ++r;
  }
  auto all_degrees_in = [&](std::initializer_list<int> allowed) {
    for (Vertex v = 1; v <= n; ++v) {
      bool ok = false;
      for (int a : allowed) ok = ok || g.degree(v) == a;
      if (!ok) return false;
    }
    return true;
  };
  // Vertices whose degree falls outside `allowed`; a pair (x, y) qualifies
  // only if it covers all of them.
  auto outliers = [&](std::initializer_list<int> allowed) {
    std::vector<char> out(static_cast<std::size_t>(n) + 1, 0);
    int count = 0;
    for (Vertex v = 1; v <= n; ++v) {
      bool ok = false;
      for (int a : allowed) ok = ok || g.degree(v) == a;
      if (!ok) {
        out[v] = 1;
        ++count;
      }
    }
    return std::make_pair(out, count);
  };

  if (p == n) return Condition::kComplete;
  if (r == n - 1 && p == 1) return Condition::kStar;
  const bool pendant_parity = r >= 2 && (n - r) % 2 == 0;
  if (p == 1 && pendant_parity && all_degrees_in({1, n - r - 1, n - 1})) {
    return Condition::kPendantsOnUniversal;
  }
  if (p == 0 && pendant_parity) {
    auto [outlier, count] = outliers({1, n - r - 1});
    for (Vertex x = 1; x <= n; ++x) {
      if (g.degree(x) != n - 2) continue;
      for (Vertex y = 1; y <= n; ++y) {
        if (y == x || g.degree(y) != n - r - 2 || g.adjacent(x, y)) continue;
        if (count - outlier[x] - outlier[y] == 0) {
          return Condition::kPendantsOnNearUniversal;
        }
      }
    }
  }
  if (n % 2 == 1) {
    auto [outlier, count] = outliers({n - 1, n - 2});
    for (Vertex x = 1; x <= n; ++x) {
      for (Vertex y = x + 1; y <= n; ++y) {
        if (g.degree(x) + g.degree(y) == p + n - 2 &&
            count - outlier[x] - outlier[y] == 0) {
          return Condition::kTwoIndependent;
        }
      }
    }
  }
  return std::nullopt;
}

RecognitionResult SmallCase(const Graph& g) {
  if (g.order() < 1 || g.order() > 3) {
    throw PreconditionError("small case covers 1 to 3 vertices");
  }
  if (g.has_isolated_vertex()) {
    throw PreconditionError("small case needs a graph without isolated "
                            "vertices");
  }
  RecognitionResult result;
  result.verdict = IsSplitOracle(g) && IsEquimatchableOracle(g) ? Verdict::kYes
                                                                : Verdict::kNo;
  result.reason = Reason::kSmallCaseOracle;
  result.stats = ComputeDegreeStats(g);
  return result;
}

RecognitionResult Decide(const Graph& g) {
  return g.order() >= 4 ? Recognize(g) : SmallCase(g);
}

}  // namespace equisplit
