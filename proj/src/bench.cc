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

#include "equisplit/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace equisplit {

FamilySpec BenchSpec(Condition family, Vertex n) {
  FamilySpec spec{.family = family, .n = n};
  switch (family) {
    case Condition::kComplete:
    case Condition::kStar:
      break;
    case Condition::kPendantsOnUniversal:
    case Condition::kPendantsOnNearUniversal: {
      int clique = 2 * static_cast<int>(std::lround(std::sqrt(n) / 2.0));
      clique = std::max(clique, 4);
      spec.leaves = n - clique;
      break;
    }
    case Condition::kTwoIndependent:
      spec.both = (n - 2) / 3;
      spec.only_y = (n - 2) / 3;
      spec.only_x = n - 2 - spec.both - spec.only_y;
      break;
  }
  ValidateFamilySpec(spec);
  return spec;
}

BenchRow BenchmarkRecognize(Condition family, Vertex n, double min_seconds) {
  using Clock = std::chrono::steady_clock;
  const FamilySpec spec = BenchSpec(family, n);
  const std::vector<Edge> edges = GenerateFamily(spec).edges();

  BenchRow row;
  row.n = n;
  row.m = edges.size();
  row.pipeline_seconds = std::numeric_limits<double>::infinity();
  row.recognize_seconds = std::numeric_limits<double>::infinity();

  const auto deadline_start = Clock::now();
  while (row.repetitions < 3 ||
         std::chrono::duration<double>(Clock::now() - deadline_start).count() <
             min_seconds) {
    const auto t0 = Clock::now();
    const Graph g = Graph::FromEdges(n, edges);
    const auto t1 = Clock::now();
    const RecognitionResult result = Recognize(g);
    const auto t2 = Clock::now();
    if (!result.yes()) {
      throw std::logic_error("benchmark instance was not recognized");
    }
    row.pipeline_seconds = std::min(
        row.pipeline_seconds, std::chrono::duration<double>(t2 - t0).count());
    row.recognize_seconds = std::min(
        row.recognize_seconds, std::chrono::duration<double>(t2 - t1).count());
    ++row.repetitions;
  }
  return row;
}

}  // namespace equisplit
