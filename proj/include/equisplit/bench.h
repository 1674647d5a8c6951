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

#ifndef EQUISPLIT_BENCH_H_
#define EQUISPLIT_BENCH_H_

#include <cstddef>

#include "equisplit/generators.h"
#include "equisplit/graph.h"
#include "equisplit/recognizer.h"

namespace equisplit {

// The benchmark instance of a family at order n. Families iii and iv use a
// clique of even size close to sqrt(n) (at least 4); family v needs odd n
// and splits the clique into near-equal A, A_x, A_y.
FamilySpec BenchSpec(Condition family, Vertex n);

struct BenchRow {
  Vertex n = 0;
  std::size_t m = 0;
  int repetitions = 0;
  // Best-of-repetitions wall time for building the graph from its in-memory
  // edge list and running Recognize on it.
  double pipeline_seconds = 0.0;
  // Best-of-repetitions wall time for Recognize alone.
  double recognize_seconds = 0.0;

  double pipeline_ns_per_element() const {
    return pipeline_seconds * 1e9 / static_cast<double>(n + m);
  }
  double recognize_ns_per_element() const {
    return recognize_seconds * 1e9 / static_cast<double>(n + m);
  }
};

// Repeats until min_seconds have been spent (and at least three times).
BenchRow BenchmarkRecognize(Condition family, Vertex n,
                            double min_seconds = 0.2);

}  // namespace equisplit

#endif  // EQUISPLIT_BENCH_H_
