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

#ifndef EQUISPLIT_RECOGNIZER_H_
#define EQUISPLIT_RECOGNIZER_H_

#include <optional>
#include <string_view>

#include "equisplit/degree_stats.h"
#include "equisplit/graph.h"

namespace equisplit {

// The five equimatchable split families, in priority order (p: vertices of
// degree n-1, r: vertices of degree 1):
//
//   i    kComplete                 p = n
//   ii   kStar                     r = n - 1 and p = 1
//   iii  kPendantsOnUniversal      p = 1, r >= 2, n - r even, every degree
//                                  in {1, n-r-1, n-1}
//   iv   kPendantsOnNearUniversal  p = 0, r >= 2, n - r even, non-adjacent
//                                  x, y with d(x) = n-2, d(y) = n-r-2, all
//                                  other degrees in {1, n-r-1}
//   v    kTwoIndependent           n odd, some x, y with
//                                  d(x) + d(y) = p + n - 2, all other
//                                  degrees in {n-1, n-2}
enum class Condition {
  kComplete,
  kStar,
  kPendantsOnUniversal,
  kPendantsOnNearUniversal,
  kTwoIndependent,
};

// Roman tag "i".."v".
std::string_view ToString(Condition c);
std::optional<Condition> ConditionFromString(std::string_view tag);

enum class Verdict { kNo, kYes };

enum class Reason {
  kEvenOrder,            // d(v2) >= 2 and n even
  kThirdDegreeTooSmall,  // d(v2) >= 2 and d(v3) < n - 2
  kDegreeSumMismatch,    // d(v2) >= 2 and d(v1) + d(v2) != p + n - 2
  kNoConditionMatched,   // d(v2) = 1 and none of ii, iii, iv applies
  kSmallCaseOracle,      // n <= 3, decided by the exhaustive oracles
};

std::string_view ToString(Reason r);

// The distinguished pair of conditions iv (x = v_n, y = v_{r+1}) and
// v (x = v_1, y = v_2).
struct ConditionProfile {
  Vertex x = 0;
  Vertex y = 0;

  friend bool operator==(const ConditionProfile&,
                         const ConditionProfile&) = default;
};

struct RecognitionResult {
  Verdict verdict = Verdict::kNo;
  // Set on every YES from Recognize. SmallCase never sets it.
  std::optional<Condition> condition;
  // Set on every NO, and on small-case YES answers.
  std::optional<Reason> reason;
  std::optional<ConditionProfile> profile;
  DegreeStats stats;

  bool yes() const { return verdict == Verdict::kYes; }
};

// Linear-time decision: is g an equimatchable split graph? Reads only the
// degree ordering, the counters p, r, q, and performs at most one adjacency
// query. Requires n >= 4 and no isolated vertex (PreconditionError).
RecognitionResult Recognize(const Graph& g);

// Literal, independent evaluation of the five conditions; returns the first
// one that holds. The pair searches for iv and v are quadratic. Same
// preconditions as Recognize.
std::optional<Condition> CheckCharacterization(const Graph& g);

// Graphs on 1..3 vertices without isolated vertices, decided by the split
// and equimatchability oracles. reason is always kSmallCaseOracle.
RecognitionResult SmallCase(const Graph& g);

// Recognize for n >= 4, SmallCase below.
RecognitionResult Decide(const Graph& g);

}  // namespace equisplit

#endif  // EQUISPLIT_RECOGNIZER_H_
