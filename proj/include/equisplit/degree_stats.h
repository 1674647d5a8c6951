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

#ifndef EQUISPLIT_DEGREE_STATS_H_
#define EQUISPLIT_DEGREE_STATS_H_

#include <vector>

#include "equisplit/graph.h"

namespace equisplit {

// Non-decreasing degree ordering plus the degree-class counters used by the
// recognizer.
struct DegreeStats {
  // ordering[k - 1] is the k-th vertex; ties broken by ascending id.
  std::vector<Vertex> ordering;
  int universal = 0;  // p: vertices of degree n - 1
  int leaves = 0;     // r: vertices of degree 1
  int near = 0;       // q: vertices of degree n - r - 1

  // Degree of the k-th vertex of the ordering, 1-based.
  int degree_at(const Graph& g, int k) const { return g.degree(ordering[k - 1]); }
};

// Counting sort over degree values 0..n-1, O(n).
DegreeStats ComputeDegreeStats(const Graph& g);

}  // namespace equisplit

#endif  // EQUISPLIT_DEGREE_STATS_H_
