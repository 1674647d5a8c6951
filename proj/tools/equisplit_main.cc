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

// equisplit: recognize equimatchable split graphs from the command line.
//
//   equisplit recognize GRAPH [--json] [--strip-isolated] [--exit-verdict]
//                             [--witness]
//   equisplit check [GRAPH...] [--all-n=K | --count=N --seed=S] [--workers=W]
//   equisplit gen FAMILY [--n N] [--r R] [--a A --b B --c C] ...
//   equisplit bench --family F --sizes N1,N2,...
//
// GRAPH "-" reads standard input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "equisplit/bench.h"
#include "equisplit/check.h"
#include "equisplit/generators.h"
#include "equisplit/graph.h"
#include "equisplit/graph_io.h"
#include "equisplit/report.h"
#include "json.hpp"

namespace {

using namespace equisplit;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct RecognizeArgs {
  std::string path;
  bool json = false;
  bool strip_isolated = false;
  bool exit_verdict = false;
  bool witness = false;
};

int RunRecognize(const RecognizeArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  Graph g = ParseGraph(ReadInput(args.path));
  const double parse_seconds = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
  int removed = 0;
  if (g.has_isolated_vertex()) {
    if (!args.strip_isolated) {
      throw std::runtime_error(
          "graph has isolated vertices (use --strip-isolated)");
    }
    auto stripped = StripIsolated(g);
    g = std::move(stripped.graph);
    removed = stripped.removed;
  }
  if (g.order() == 0) throw std::runtime_error("graph has no vertices left");

  VerdictReport report = Analyze(g, args.witness);
  report.input = args.path;
  report.removed_isolated = removed;
  report.parse_seconds = parse_seconds;

  if (args.json) {
    std::cerr << Headline(report) << "\n";
    std::cout << ToJson(report).dump() << "\n";
  } else {
    std::cout << Headline(report) << "\n";
    if (report.witness) {
      std::cout << "witness: " << ToString(report.witness->smaller) << " / "
                << ToString(report.witness->larger) << "\n";
    } else if (report.result.profile) {
      std::cout << "pair: x=" << report.result.profile->x
                << " y=" << report.result.profile->y << "\n";
    }
  }
  if (args.exit_verdict) return report.result.yes() ? kExitOk : kExitNo;
  return kExitOk;
}

struct CheckArgs {
  std::vector<std::string> paths;
  int all_n = 0;
  std::uint64_t count = 0;
  std::uint64_t seed = 1;
  int min_n = 7;
  int max_n = 12;
  int workers = 1;
  bool witness = false;
  bool strip_isolated = false;
  bool json = false;
};

int RunCheckCommand(const CheckArgs& args) {
  CheckOptions options{.workers = args.workers,
                       .witnesses = args.witness,
                       .strip_isolated = args.strip_isolated};
  CheckReport report;
  if (args.all_n > 0) {
    if (args.all_n > 7) throw std::runtime_error("--all-n is limited to 7");
    const int pairs = args.all_n * (args.all_n - 1) / 2;
    const Vertex n = args.all_n;
    report = RunCheck("all-n=" + std::to_string(n), std::uint64_t{1} << pairs,
                      [n](std::uint64_t mask) { return LabeledGraph(n, mask); },
                      options);
  } else if (args.count > 0) {
    const std::uint64_t seed = args.seed;
    const Vertex lo = args.min_n;
    const Vertex hi = args.max_n;
    report = RunCheck("random seed=" + std::to_string(seed), args.count,
                      [=](std::uint64_t i) {
                        return RandomCheckGraph(lo, hi, seed, i);
                      },
                      options);
  } else {
    if (args.paths.empty()) {
      throw std::runtime_error("check needs graph files, --all-n or --count");
    }
    std::vector<Graph> graphs;
    for (const std::string& path : args.paths) {
      graphs.push_back(ParseGraph(ReadInput(path)));
    }
    report = RunCheck("files", graphs.size(),
                      [&](std::uint64_t i) { return graphs[i]; }, options);
  }

  if (args.json) {
    std::cout << ToJson(report).dump() << "\n";
  } else {
    std::cout << report.mode << ": total=" << report.total
              << " evaluated=" << report.evaluated
              << " skipped=" << report.skipped << " yes=" << report.yes
              << " no=" << report.no
              << " disagreements=" << report.disagreements
              << " tag_mismatches=" << report.tag_mismatches
              << " digest=" << report.digest << "\n";
    if (report.first_disagreement) {
      std::cout << "first disagreement (index "
                << report.first_disagreement->index
                << "): " << report.first_disagreement->detail << "\n"
                << report.first_disagreement->graph;
    }
  }
  return report.disagreements == 0 && report.tag_mismatches == 0 ? kExitOk
                                                                  : kExitNo;
}

struct GenArgs {
  std::string family;
  int n = 0;
  int r = 0;
  int a = 0;
  int b = 0;
  int c = 0;
  double p = 0.5;
  int clique = 0;
  double q = 0.5;
  std::uint64_t seed = 1;
  std::string out = "-";
};

int RunGen(const GenArgs& args) {
  Graph g;
  if (args.family == "random") {
    g = RandomGraph(args.n, args.p, args.seed);
  } else if (args.family == "random-split") {
    g = RandomSplitGraph(args.n, args.clique, args.q, args.seed);
  } else {
    const auto family = ConditionFromString(args.family);
    if (!family) throw GeneratorError("unknown family " + args.family);
    g = GenerateFamily({.family = *family,
                        .n = args.n,
                        .leaves = args.r,
                        .both = args.a,
                        .only_y = args.b,
                        .only_x = args.c});
  }
  const std::string text = FormatGraph(g);
  if (args.out == "-") {
    std::cout << text;
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!(out << text)) throw std::runtime_error("cannot write " + args.out);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string family = "iii";
  std::vector<int> sizes;
  double min_seconds = 0.2;
  bool json = false;
};

int RunBench(const BenchArgs& args) {
  const auto family = ConditionFromString(args.family);
  if (!family) throw GeneratorError("unknown family " + args.family);
  nlohmann::json rows = nlohmann::json::array();
  if (!args.json) {
    std::cout << "n\tm\treps\tpipeline_ns_per_elem\trecognize_ns_per_elem\n";
  }
  for (int n : args.sizes) {
    const BenchRow row = BenchmarkRecognize(*family, n, args.min_seconds);
    if (args.json) {
      rows.push_back({{"n", row.n},
                      {"m", row.m},
                      {"repetitions", row.repetitions},
                      {"pipeline_seconds", row.pipeline_seconds},
                      {"recognize_seconds", row.recognize_seconds},
                      {"pipeline_ns_per_element", row.pipeline_ns_per_element()},
                      {"recognize_ns_per_element",
                       row.recognize_ns_per_element()}});
    } else {
      std::cout << row.n << "\t" << row.m << "\t" << row.repetitions << "\t"
                << row.pipeline_ns_per_element() << "\t"
                << row.recognize_ns_per_element() << "\n";
    }
  }
  if (args.json) {
    std::cout << nlohmann::json{{"family", args.family}, {"rows", rows}}.dump()
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-time recognition of equimatchable split graphs"};
  app.require_subcommand(1);

  RecognizeArgs recognize_args;
  auto* recognize = app.add_subcommand("recognize", "Decide one graph");
  recognize->add_option("graph", recognize_args.path, "Graph file or -")
      ->required();
  recognize->add_flag("--json", recognize_args.json, "Emit a JSON report");
  recognize->add_flag("--strip-isolated", recognize_args.strip_isolated,
                      "Drop isolated vertices instead of failing");
  recognize->add_flag("--exit-verdict", recognize_args.exit_verdict,
                      "Exit 0 on YES, 1 on NO, 2 on error");
  recognize->add_flag("--witness", recognize_args.witness,
                      "Compute witness matchings for NO answers (n <= 16)");

  CheckArgs check_args;
  check_args.workers =
      static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* check = app.add_subcommand(
      "check", "Cross-check the recognizer against exhaustive oracles");
  check->add_option("graphs", check_args.paths, "Graph files");
  check->add_option("--all-n", check_args.all_n,
                    "Enumerate every labeled graph on K vertices");
  check->add_option("--count", check_args.count, "Random graphs to draw");
  check->add_option("--seed", check_args.seed, "Random batch seed");
  check->add_option("--min-n", check_args.min_n, "Smallest random order")
      ->check(CLI::Range(2, 16));
  check->add_option("--max-n", check_args.max_n, "Largest random order")
      ->check(CLI::Range(2, 16));
  check->add_option("--workers", check_args.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  check->add_flag("--witness", check_args.witness,
                  "Fold witness matchings into the digest");
  check->add_flag("--strip-isolated", check_args.strip_isolated,
                  "Strip isolated vertices instead of skipping");
  check->add_flag("--json", check_args.json, "Emit a JSON report");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  gen->add_option("family", gen_args.family,
                  "i, ii, iii, iv, v, random or random-split")
      ->required();
  gen->add_option("--n", gen_args.n, "Order")->required();
  gen->add_option("--r", gen_args.r, "Leaves (families iii, iv)");
  gen->add_option("--a", gen_args.a, "|A| (family v)");
  gen->add_option("--b", gen_args.b, "|A_x| (family v)");
  gen->add_option("--c", gen_args.c, "|A_y| (family v)");
  gen->add_option("--p", gen_args.p, "Edge probability (random)");
  gen->add_option("--clique", gen_args.clique, "Clique size (random-split)");
  gen->add_option("--q", gen_args.q, "Attach probability (random-split)");
  gen->add_option("--seed", gen_args.seed, "Seed (random families)");
  gen->add_option("-o,--out", gen_args.out, "Output file or -");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time recognition on families");
  bench->add_option("--family", bench_args.family, "Family tag i..v");
  bench->add_option("--sizes", bench_args.sizes, "Orders to time")
      ->delimiter(',');
  bench->add_option("--min-seconds", bench_args.min_seconds,
                    "Time budget per size");
  bench->add_flag("--json", bench_args.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*recognize) return RunRecognize(recognize_args);
    if (*check) return RunCheckCommand(check_args);
    if (*gen) return RunGen(gen_args);
    if (*bench) return RunBench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
