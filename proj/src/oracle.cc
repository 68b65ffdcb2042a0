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

#include "pchcrit/oracle.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pchcrit/packing.h"
#include "pchcrit/solver.h"

namespace pchcrit {
namespace {

struct Pair {
  int u;
  int v;
  int dist;
};

std::vector<Pair> close_pairs(const Graph& g) {
  const int n = g.order();
  constexpr int kFar = 1 << 20;
  std::vector<int> d(n * n, kFar);
  for (int v = 0; v < n; ++v) d[v * n + v] = 0;
  for (const auto& [u, v] : g.edges()) d[u * n + v] = d[v * n + u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
  }
  // Only pairs at finite distance can ever conflict. Nearest first so most
  // invalid assignments are rejected early.
  std::vector<Pair> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (d[u * n + v] < kFar) pairs.push_back({u, v, d[u * n + v]});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.dist < b.dist; });
  return pairs;
}

}  // namespace

int oracle_chi_rho(const Graph& g, std::uint64_t max_assignments) {
  const int n = g.order();
  if (n > kOracleMaxOrder) {
    throw std::invalid_argument("oracle supports at most " +
                                std::to_string(kOracleMaxOrder) + " vertices");
  }
  const std::vector<Pair> pairs = close_pairs(g);
  for (int k = 1;; ++k) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
      total *= static_cast<std::uint64_t>(k);
      if (total > max_assignments) {
        throw BudgetExhaustedError("oracle: " + std::to_string(k) + "^" +
                                   std::to_string(n) +
                                   " assignments exceed the budget");
      }
    }
    // Odometer over [1..k]^n.
    std::vector<int> colors(n, 1);
    for (std::uint64_t step = 0; step < total; ++step) {
      bool ok = true;
      for (const Pair& p : pairs) {
        // Color c must keep its vertices more than c apart.
        if (colors[p.u] == colors[p.v] && p.dist <= colors[p.u]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        if (!verify_packing_coloring(g, PackingSequence::standard(k),
                                     Coloring{colors})) {
          throw std::logic_error("oracle: distance routes disagree");
        }
        return k;
      }
      for (int i = 0; i < n; ++i) {
        if (++colors[i] <= k) break;
        colors[i] = 1;
      }
    }
  }
}

}  // namespace pchcrit
