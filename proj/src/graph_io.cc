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

#include "pchcrit/graph_io.h"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <vector>

namespace pchcrit {
namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kOffset;
  if (v < 0 || v > 63) {
    throw ParseError(std::string("graph6: invalid byte '") + c + "'");
  }
  return v;
}

}  // namespace

std::string format_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::int64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw ParseError("graph6: truncated size header");
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | sextet(text[k]);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | sextet(text[k]);
    pos = 4;
  }
  if (n < 1 || n > kMaxParsedOrder) {
    throw ParseError("graph6: order " + std::to_string(n) +
                     " outside supported range [1," +
                     std::to_string(kMaxParsedOrder) + "]");
  }
  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t bytes = (bits + 5) / 6;
  const std::string_view body = text.substr(pos);
  if (static_cast<std::int64_t>(body.size()) < bytes) {
    throw ParseError("graph6: truncated adjacency data");
  }
  if (static_cast<std::int64_t>(body.size()) > bytes) {
    throw ParseError("graph6: trailing data after adjacency bits");
  }
  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(body[k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((sextet(body.back()) & ((1 << pad) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits");
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " +
                    std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long long> numbers;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    long long value = 0;
    const auto [end, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() ||
        (end < text.data() + text.size() &&
         !std::isspace(static_cast<unsigned char>(*end)))) {
      throw ParseError("edge list: expected an integer near offset " +
                       std::to_string(i));
    }
    numbers.push_back(value);
    i = static_cast<std::size_t>(end - text.data());
  }
  if (numbers.size() < 2) throw ParseError("edge list: missing 'n m' header");
  const long long n = numbers[0];
  const long long m = numbers[1];
  if (n < 1 || n > kMaxParsedOrder) {
    throw ParseError("edge list: order " + std::to_string(n) +
                     " outside supported range");
  }
  if (m < 0 || static_cast<long long>(numbers.size()) != 2 + 2 * m) {
    throw ParseError("edge list: header says " + std::to_string(m) +
                     " edges but found " +
                     std::to_string((numbers.size() - 2) / 2.0));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long long e = 0; e < m; ++e) {
    const long long u = numbers[2 + 2 * e];
    const long long v = numbers[3 + 2 * e];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: endpoint out of range in edge " +
                       std::to_string(e));
    }
    if (u == v) throw ParseError("edge list: loop in edge " + std::to_string(e));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

GraphFormat detect_format(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && std::isdigit(static_cast<unsigned char>(t.front()))) {
    return GraphFormat::kEdgeList;
  }
  return GraphFormat::kGraph6;
}

Graph parse_graph(std::string_view text) {
  return detect_format(text) == GraphFormat::kEdgeList ? parse_edge_list(text)
                                                       : parse_graph6(text);
}

std::string format_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? format_edge_list(g)
                                          : format_graph6(g) + "\n";
}

}  // namespace pchcrit
