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

#include "equisplit/check.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "equisplit/graph_io.h"
#include "equisplit/matching.h"
#include "equisplit/recognizer.h"
#include "equisplit/split.h"

namespace equisplit {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

std::uint64_t Fnv1a(std::string_view bytes, std::uint64_t h = kFnvOffset) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

struct Outcome {
  bool skipped = false;
  bool yes = false;
  bool disagrees = false;
  bool tag_mismatch = false;
  std::uint64_t line_hash = 0;
};

struct Evaluation {
  std::string line;
  bool yes = false;
  bool disagrees = false;
  bool tag_mismatch = false;
};

Evaluation Evaluate(const Graph& g, bool witnesses) {
  const RecognitionResult result = Decide(g);
  const bool split = IsSplitOracle(g);
  const bool equimatchable = IsEquimatchableOracle(g);
  const bool oracle = split && equimatchable;

  Evaluation ev;
  ev.yes = result.yes();
  ev.disagrees = ev.yes != oracle;
  std::string characterization = "-";
  if (g.order() >= 4) {
    const auto tag = CheckCharacterization(g);
    ev.disagrees = ev.disagrees || tag.has_value() != oracle;
    ev.tag_mismatch = ev.yes && tag && result.condition != tag;
    characterization = tag ? std::string(ToString(*tag)) : "none";
  }

  std::string& line = ev.line;
  line = "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size());
  line += ev.yes ? " YES" : " NO";
  if (result.condition) line += " cond=" + std::string(ToString(*result.condition));
  if (result.reason) line += " reason=" + std::string(ToString(*result.reason));
  line += " split=" + std::to_string(split);
  line += " equi=" + std::to_string(equimatchable);
  line += " char=" + characterization;
  if (witnesses && !equimatchable) {
    const auto pair = FindWitnessMatchings(g);
    line += " witness=" + ToString(pair->smaller) + "/" + ToString(pair->larger);
  }
  return ev;
}

}  // namespace

std::string DescribeOutcome(const Graph& g, bool witnesses) {
  return Evaluate(g, witnesses).line;
}

CheckReport RunCheck(std::string mode, std::uint64_t count,
                     const GraphSource& source, const CheckOptions& options) {
  std::vector<Outcome> outcomes(count);
  std::atomic<std::uint64_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto work = [&] {
    constexpr std::uint64_t kChunk = 64;
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= count) return;
      const std::uint64_t end = std::min(count, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        try {
          Graph g = source(i);
          if (g.has_isolated_vertex()) {
            if (options.strip_isolated) g = StripIsolated(g).graph;
            if (!options.strip_isolated || g.order() == 0) {
              outcomes[i].skipped = true;
              outcomes[i].line_hash = Fnv1a("skipped");
              continue;
            }
          }
          const Evaluation ev = Evaluate(g, options.witnesses);
          outcomes[i] = {false, ev.yes, ev.disagrees, ev.tag_mismatch,
                         Fnv1a(ev.line)};
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(count);
          return;
        }
      }
    }
  };

  const int workers = std::max(1, options.workers);
  std::vector<std::thread> threads;
  for (int t = 1; t < workers; ++t) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  CheckReport report;
  report.mode = std::move(mode);
  report.total = count;
  std::uint64_t digest = kFnvOffset;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Outcome& o = outcomes[i];
    for (int b = 0; b < 8; ++b) {
      digest ^= (o.line_hash >> (8 * b)) & 0xff;
      digest *= kFnvPrime;
    }
    if (o.skipped) {
      ++report.skipped;
      continue;
    }
    ++report.evaluated;
    ++(o.yes ? report.yes : report.no);
    if (o.tag_mismatch) ++report.tag_mismatches;
    if (!o.disagrees) continue;
    ++report.disagreements;
    Graph g = source(i);
    if (options.strip_isolated) g = StripIsolated(g).graph;
    std::string encoding = FormatGraph(g);
    if (!report.first_disagreement ||
        encoding < report.first_disagreement->graph) {
      report.first_disagreement =
          Disagreement{i, std::move(encoding), DescribeOutcome(g, false)};
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(digest));
  report.digest = hex;
  return report;
}

nlohmann::json ToJson(const CheckReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["mode"] = report.mode;
  j["total"] = report.total;
  j["evaluated"] = report.evaluated;
  j["skipped"] = report.skipped;
  j["yes"] = report.yes;
  j["no"] = report.no;
  j["disagreements"] = report.disagreements;
  j["tag_mismatches"] = report.tag_mismatches;
  if (report.first_disagreement) {
    j["first_disagreement"] = {
        {"index", report.first_disagreement->index},
        {"graph", report.first_disagreement->graph},
        {"detail", report.first_disagreement->detail},
    };
  } else {
    j["first_disagreement"] = nullptr;
  }
  j["digest"] = report.digest;
  return j;
}

}  // namespace equisplit
