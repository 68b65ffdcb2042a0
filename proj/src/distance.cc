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

#include "pchcrit/distance.h"

#include <algorithm>

namespace pchcrit {

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()),
      d_(static_cast<std::size_t>(n_) * n_, kInfinite) {
  std::vector<int> queue(n_);
  for (int s = 0; s < n_; ++s) {
    int* dist = d_.data() + static_cast<std::size_t>(s) * n_;
    dist[s] = 0;
    int head = 0;
    int tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      for (int w : g.neighbors(u)) {
        if (dist[w] == kInfinite) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n_) connected_ = false;
  }
}

int DistanceMatrix::diameter() const {
  if (!connected_) {
    throw DisconnectedGraphError("diameter of a disconnected graph");
  }
  return n_ == 0 ? 0 : *std::max_element(d_.begin(), d_.end());
}

int DistanceMatrix::eccentricity(int v) const {
  const auto first = d_.begin() + static_cast<std::ptrdiff_t>(v) * n_;
  return *std::max_element(first, first + n_);
}

int diameter(const Graph& g) { return DistanceMatrix(g).diameter(); }

bool is_connected(const Graph& g) { return DistanceMatrix(g).connected(); }

}  // namespace pchcrit
