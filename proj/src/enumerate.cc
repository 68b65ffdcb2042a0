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

#include "pchcrit/enumerate.h"

#include <map>
#include <stdexcept>
#include <string>

#include "pchcrit/canonical.h"

namespace pchcrit {

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kEnumerateMaxOrder) {
    throw std::invalid_argument("enumerate_connected supports 1 <= n <= " +
                                std::to_string(kEnumerateMaxOrder));
  }
  std::vector<Graph> level{Graph(1, std::span<const Edge>{})};
  for (int m = 2; m <= n; ++m) {
    std::map<CanonicalForm, Graph> next;
    const int fresh = m - 1;
    for (const Graph& base : level) {
      const auto base_edges = base.edges();
      for (unsigned mask = 1; mask < (1u << fresh); ++mask) {
        std::vector<Edge> edges = base_edges;
        for (int v = 0; v < fresh; ++v) {
          if (mask >> v & 1) edges.emplace_back(v, fresh);
        }
        Graph g(m, edges);
        CanonicalForm form = canonical_form(g);
        if (next.contains(form)) continue;
        next.emplace(form, relabel(g, canonical_labeling(g)));
      }
    }
    level.clear();
    for (auto& [form, g] : next) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace pchcrit
