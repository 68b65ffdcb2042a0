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

#ifndef PCHCRIT_INDEPENDENCE_H_
#define PCHCRIT_INDEPENDENCE_H_

#include <optional>
#include <vector>

#include "pchcrit/graph.h"

namespace pchcrit {

// Exact alpha(G) by branch and bound: greedy minimum-degree lower bound,
// greedy clique-cover upper bound at every node.
int independence_number(const Graph& g);

// A maximum independent set, sorted.
std::vector<int> maximum_independent_set(const Graph& g);

struct ChiBounds {
  int lower = 1;
  int upper = 1;
  // Lower bound for a Cartesian product G x H, present when factor data was
  // supplied: (chi(G) + 1) n(H) - diam(G x H) (n(H) - 1) - 1.
  std::optional<int> product_lower;
};

struct ProductFactors {
  int chi_first = 0;     // chi_rho of the first factor
  int order_second = 0;  // order of the second factor
};

// lower is 1, or 2 when G has an edge; upper is n - alpha + 1, which is
// exact when diam(G) = 2. Throws DisconnectedGraphError for disconnected G.
ChiBounds chi_rho_bounds(const Graph& g,
                         std::optional<ProductFactors> factors = {});

// The product lower bound on its own.
int cartesian_lower_bound(int chi_first, int order_second,
                          int product_diameter);

}  // namespace pchcrit

#endif  // PCHCRIT_INDEPENDENCE_H_
