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

#ifndef EQUISPLIT_REPORT_H_
#define EQUISPLIT_REPORT_H_

#include <optional>
#include <string>

#include "equisplit/graph.h"
#include "equisplit/matching.h"
#include "equisplit/recognizer.h"
#include "json.hpp"

namespace equisplit {

inline constexpr int kReportSchemaVersion = 1;

struct VerdictReport {
  std::string input = "-";
  Vertex n = 0;
  std::size_t m = 0;
  int removed_isolated = 0;
  bool split = false;
  RecognitionResult result;
  // NO answers on graphs within the oracle limit, when requested. Absent
  // for NO answers on equimatchable graphs that are not split.
  std::optional<WitnessPair> witness;
  double parse_seconds = 0.0;
  double recognize_seconds = 0.0;
};

// Runs split detection and Decide on g, timing the latter. Witness
// matchings are computed only when want_witness is set, the verdict is NO
// and n <= kMaxBruteForceOrder.
VerdictReport Analyze(const Graph& g, bool want_witness);

// "YES (condition iii)" or "NO (reason: no-condition-matched)".
std::string Headline(const VerdictReport& report);

nlohmann::json ToJson(const VerdictReport& report);

}  // namespace equisplit

#endif  // EQUISPLIT_REPORT_H_
