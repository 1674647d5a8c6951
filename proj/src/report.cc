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

#include "equisplit/report.h"

#include <chrono>
#include <stdexcept>

#include "equisplit/small_graph.h"
#include "equisplit/split.h"

namespace equisplit {
namespace {

nlohmann::json MatchingJson(const Matching& m) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : m.edges) edges.push_back({e.u, e.v});
  return edges;
}

}  // namespace

VerdictReport Analyze(const Graph& g, bool want_witness) {
  VerdictReport report;
  report.n = g.order();
  report.m = g.size();
  report.split = FindSplitPartition(g).has_value();

  const auto start = std::chrono::steady_clock::now();
  report.result = Decide(g);
  report.recognize_seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();

  if (report.result.yes() && !report.split) {
    throw std::logic_error("YES verdict on a graph that is not split");
  }
  if (want_witness && !report.result.yes() &&
      g.order() <= kMaxBruteForceOrder) {
    report.witness = FindWitnessMatchings(g);
  }
  return report;
}

std::string Headline(const VerdictReport& report) {
  const RecognitionResult& r = report.result;
  std::string line = r.yes() ? "YES" : "NO";
  if (r.condition) {
    line += " (condition " + std::string(ToString(*r.condition)) + ")";
  } else if (r.reason) {
    line += " (reason: " + std::string(ToString(*r.reason)) + ")";
  }
  return line;
}

nlohmann::json ToJson(const VerdictReport& report) {
  const RecognitionResult& r = report.result;
  nlohmann::json j;
  j["schema"] = kReportSchemaVersion;
  j["input"] = report.input;
  j["n"] = report.n;
  j["m"] = report.m;
  j["removed_isolated"] = report.removed_isolated;
  j["split"] = report.split;
  j["equimatchable_split"] = r.yes();
  j["condition"] =
      r.condition ? nlohmann::json(ToString(*r.condition)) : nlohmann::json();
  j["reason"] = r.reason ? nlohmann::json(ToString(*r.reason)) : nlohmann::json();
  if (report.witness) {
    j["witness"] = {{"kind", "matchings"},
                    {"smaller", MatchingJson(report.witness->smaller)},
                    {"larger", MatchingJson(report.witness->larger)}};
  } else if (r.profile) {
    j["witness"] = {{"kind", "pair"}, {"x", r.profile->x}, {"y", r.profile->y}};
  } else {
    j["witness"] = nullptr;
  }
  j["stats"] = {{"p", r.stats.universal},
                {"r", r.stats.leaves},
                {"q", r.stats.near}};
  j["timings"] = {{"parse_seconds", report.parse_seconds},
                  {"recognize_seconds", report.recognize_seconds}};
  return j;
}

}  // namespace equisplit
