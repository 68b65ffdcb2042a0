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

#include "pchcrit/packing.h"

#include <algorithm>
#include <stdexcept>

namespace pchcrit {
namespace {

bool check(const DistanceMatrix& d, const PackingSequence& seq,
           const Coloring& c, bool allow_partial) {
  const int n = d.order();
  if (static_cast<int>(c.colors.size()) != n) {
    throw std::invalid_argument("coloring has " +
                                std::to_string(c.colors.size()) +
                                " entries for a graph of order " +
                                std::to_string(n));
  }
  for (int v = 0; v < n; ++v) {
    const int color = c.colors[v];
    if (color == 0 && allow_partial) continue;
    if (color == 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is uncolored");
    }
    if (color < 0 || color > seq.length()) {
      throw std::invalid_argument("color " + std::to_string(color) +
                                  " outside 1.." +
                                  std::to_string(seq.length()));
    }
  }
  for (int u = 0; u < n; ++u) {
    const int color = c.colors[u];
    if (color == 0) continue;
    for (int v = u + 1; v < n; ++v) {
      if (c.colors[v] == color && d(u, v) <= seq.bound(color)) return false;
    }
  }
  return true;
}

}  // namespace

PackingSequence::PackingSequence(std::vector<int> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("packing sequence must be nonempty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1) {
      throw std::invalid_argument("packing sequence entries must be positive");
    }
    if (i > 0 && values_[i] < values_[i - 1]) {
      throw std::invalid_argument("packing sequence must be nondecreasing");
    }
  }
}

PackingSequence PackingSequence::standard(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<int> values(k);
  for (int i = 0; i < k; ++i) values[i] = i + 1;
  return PackingSequence(std::move(values));
}

std::string PackingSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

int Coloring::max_color() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

bool verify_packing_coloring(const DistanceMatrix& d,
                             const PackingSequence& seq, const Coloring& c) {
  return check(d, seq, c, /*allow_partial=*/false);
}

bool verify_packing_coloring(const Graph& g, const PackingSequence& seq,
                             const Coloring& c) {
  return check(DistanceMatrix(g), seq, c, /*allow_partial=*/false);
}

bool verify_partial_packing_coloring(const Graph& g,
                                     const PackingSequence& seq,
                                     const Coloring& c) {
  return check(DistanceMatrix(g), seq, c, /*allow_partial=*/true);
}

Coloring lift_coloring(const Coloring& sub, const std::vector<int>& to_parent,
                       int parent_order) {
  Coloring out{std::vector<int>(parent_order, 0)};
  for (std::size_t i = 0; i < sub.colors.size(); ++i) {
    out.colors[to_parent[i]] = sub.colors[i];
  }
  return out;
}

}  // namespace pchcrit
