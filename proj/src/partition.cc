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

#include "partition.h"

#include <algorithm>
#include <map>

namespace pchcrit::internal {

Partition invariant_partition(const Graph& g, const DistanceMatrix& d) {
  const int n = g.order();
  std::map<std::vector<int>, std::vector<int>> by_key;
  for (int v = 0; v < n; ++v) {
    // Key: degree, then the count of vertices at each distance 1..n-1,
    // then the number of unreachable vertices.
    std::vector<int> key(n + 1, 0);
    key[0] = g.degree(v);
    for (int u = 0; u < n; ++u) {
      const int dist = d(v, u);
      if (dist == DistanceMatrix::kInfinite) {
        ++key[n];
      } else if (dist > 0) {
        ++key[dist];
      }
    }
    by_key[key].push_back(v);
  }
  Partition cells;
  cells.reserve(by_key.size());
  for (auto& [key, members] : by_key) cells.push_back(std::move(members));
  return cells;
}

void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      // Splitter as a bitmask over vertices.
      std::vector<std::uint64_t> splitter(g.words_per_row(), 0);
      for (int v : cells[s]) splitter[v >> 6] |= std::uint64_t{1} << (v & 63);
      for (std::size_t x = 0; x < cells.size(); ++x) {
        if (cells[x].size() == 1) continue;
        std::vector<std::pair<int, int>> counted;
        counted.reserve(cells[x].size());
        for (int v : cells[x]) {
          const auto row = g.row(v);
          int c = 0;
          for (std::size_t w = 0; w < splitter.size(); ++w) {
            c += std::popcount(row[w] & splitter[w]);
          }
          counted.emplace_back(c, v);
        }
        std::sort(counted.begin(), counted.end());
        if (counted.front().first == counted.back().first) continue;
        Partition parts;
        for (std::size_t i = 0; i < counted.size(); ++i) {
          if (i == 0 || counted[i].first != counted[i - 1].first) {
            parts.emplace_back();
          }
          parts.back().push_back(counted[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x),
                     parts.begin(), parts.end());
        changed = true;
        break;
      }
    }
  }
}

std::vector<int> cell_of(const Partition& cells, int n) {
  std::vector<int> out(n, -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int v : cells[c]) out[v] = static_cast<int>(c);
  }
  return out;
}

}  // namespace pchcrit::internal
