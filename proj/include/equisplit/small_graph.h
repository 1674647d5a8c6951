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

#ifndef EQUISPLIT_SMALL_GRAPH_H_
#define EQUISPLIT_SMALL_GRAPH_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "equisplit/graph.h"

namespace equisplit {

// Largest order accepted by the exhaustive oracles.
inline constexpr Vertex kMaxBruteForceOrder = 16;

// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the exponential oracles on graphs above kMaxBruteForceOrder.
class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Bit i - 1 of masks[v - 1] is set iff vi is an edge. Throws OracleLimitError
// when n > kMaxBruteForceOrder.
std::vector<std::uint32_t> AdjacencyMasks(const Graph& g);

}  // namespace equisplit

#endif  // EQUISPLIT_SMALL_GRAPH_H_
