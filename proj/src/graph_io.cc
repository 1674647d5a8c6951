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

#include "equisplit/graph_io.h"

#include <charconv>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

namespace equisplit {
namespace {

// Parses "a b" with exactly one space and no other characters.
std::optional<std::pair<std::int64_t, std::int64_t>> ParsePair(
    std::string_view line) {
  const std::size_t space = line.find(' ');
  if (space == std::string_view::npos) return std::nullopt;
  auto parse_one = [](std::string_view field) -> std::optional<std::int64_t> {
    if (field.empty() || field.front() == '+' || field.front() == '-') {
      return std::nullopt;
    }
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      return std::nullopt;
    }
    return value;
  };
  auto a = parse_one(line.substr(0, space));
  auto b = parse_one(line.substr(space + 1));
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

}  // namespace

const char* ToString(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader:
      return "malformed header";
    case ParseErrorKind::kMalformedEdge:
      return "malformed edge line";
    case ParseErrorKind::kVertexOutOfRange:
      return "vertex id out of range";
    case ParseErrorKind::kSelfLoop:
      return "self-loop";
    case ParseErrorKind::kDuplicateEdge:
      return "duplicate edge";
    case ParseErrorKind::kEdgeCountMismatch:
      return "edge count mismatch";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : std::runtime_error(std::string(ToString(kind)) + " at line " +
                         std::to_string(line) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line) {}

Graph ParseGraph(std::string_view text) {
  std::optional<std::int64_t> n;
  std::int64_t m = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  int line_no = 0;
  int last_line = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    last_line = line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;

    auto pair = ParsePair(line);
    if (!n) {
      if (!pair || pair->first < 0 || pair->second < 0 ||
          pair->first > INT32_MAX) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         std::string(line));
      }
      n = pair->first;
      m = pair->second;
      if (m > *n * (*n - 1) / 2) {
        throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                         "more edges declared than a simple graph allows");
      }
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (!pair) {
      throw ParseError(ParseErrorKind::kMalformedEdge, line_no,
                       std::string(line));
    }
    if (static_cast<std::int64_t>(edges.size()) == m) {
      throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                       "expected " + std::to_string(m) + " edges");
    }
    auto [a, b] = *pair;
    if (a < 1 || a > *n || b < 1 || b > *n) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                       std::string(line));
    }
    if (a == b) {
      throw ParseError(ParseErrorKind::kSelfLoop, line_no, std::string(line));
    }
    if (a > b) std::swap(a, b);
    const auto key = static_cast<std::uint64_t>(a) << 32 |
                     static_cast<std::uint64_t>(b);
    if (!seen.insert(key).second) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, line_no,
                       std::string(line));
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }

  if (!n) {
    throw ParseError(ParseErrorKind::kMalformedHeader, last_line + 1,
                     "missing header");
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, last_line + 1,
                     "expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph::FromEdges(static_cast<Vertex>(*n), edges);
}

std::string FormatGraph(const Graph& g) {
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace equisplit
