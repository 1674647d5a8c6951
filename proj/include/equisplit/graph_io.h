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

#ifndef EQUISPLIT_GRAPH_IO_H_
#define EQUISPLIT_GRAPH_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "equisplit/graph.h"

namespace equisplit {

// Edge-list text format:
//
//   # optional comment lines, anywhere
//   n m
//   u v        (exactly m lines, 1 <= u, v <= n, either orientation)
//
// Fields are separated by a single space. LF and CRLF line endings are both
// accepted and the final newline is optional.

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedEdge,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kEdgeCountMismatch,
};

const char* ToString(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  // 1-based line number of the offending line.
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

Graph ParseGraph(std::string_view text);

// Canonical serialization: header, then edges u < v in lexicographic order,
// LF-terminated. ParseGraph(FormatGraph(g)) == g.
std::string FormatGraph(const Graph& g);

}  // namespace equisplit

#endif  // EQUISPLIT_GRAPH_IO_H_
