// Copyright 2026 The pchcrit Authors
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

// Text formats for graphs.
//
// graph6 follows the standard definition: N(n) followed by the upper
// triangle of the adjacency matrix in column order (x(0,1), x(0,2), x(1,2),
// x(0,3), ...), packed six bits per byte, big end first, each byte offset by
// 63. An optional ">>graph6<<" prefix is accepted on input.
//
// The edge list format is "n m" on the first line followed by m lines "u v"
// with 0-based endpoints.

#ifndef PCHCRIT_GRAPH_IO_H_
#define PCHCRIT_GRAPH_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "pchcrit/graph.h"

namespace pchcrit {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { kGraph6, kEdgeList };

// Largest order accepted by the parsers.
inline constexpr int kMaxParsedOrder = 4096;

std::string format_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

std::string format_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// A first non-blank line starting with a digit is an edge list; anything
// else is graph6.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g, GraphFormat format);

}  // namespace pchcrit

#endif  // PCHCRIT_GRAPH_IO_H_
