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

#ifndef EQUISPLIT_CHECK_H_
#define EQUISPLIT_CHECK_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "equisplit/graph.h"
#include "json.hpp"

namespace equisplit {

// Batch equivalence check: for each graph, Decide (and, at n >= 4,
// CheckCharacterization) against IsSplitOracle && IsEquimatchableOracle.

struct CheckOptions {
  int workers = 1;
  // Compute witness matchings for every graph the oracle rejects as not
  // equimatchable; they are folded into the digest.
  bool witnesses = false;
  // Strip isolated vertices instead of skipping the graph. Graphs that
  // become empty are still skipped.
  bool strip_isolated = false;
};

struct Disagreement {
  std::uint64_t index = 0;
  std::string graph;  // FormatGraph encoding
  std::string detail;
};

struct CheckReport {
  std::string mode;
  std::uint64_t total = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
  std::uint64_t yes = 0;
  std::uint64_t no = 0;
  std::uint64_t disagreements = 0;
  // Both verdicts YES but recognized tag differs from the characterization.
  std::uint64_t tag_mismatches = 0;
  // Among all disagreements, the one with the lexicographically smallest
  // graph encoding (ties by index).
  std::optional<Disagreement> first_disagreement;
  // FNV-1a digest of every per-graph outcome line in index order.
  std::string digest;
};

// Returns the graph with the given index, 0 <= index < count.
using GraphSource = std::function<Graph(std::uint64_t index)>;

// The report is independent of options.workers.
CheckReport RunCheck(std::string mode, std::uint64_t count,
                     const GraphSource& source, const CheckOptions& options);

// Outcome line for one graph, as folded into the digest.
std::string DescribeOutcome(const Graph& g, bool witnesses);

nlohmann::json ToJson(const CheckReport& report);

}  // namespace equisplit

#endif  // EQUISPLIT_CHECK_H_
