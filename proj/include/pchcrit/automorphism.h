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

#ifndef PCHCRIT_AUTOMORPHISM_H_
#define PCHCRIT_AUTOMORPHISM_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pchcrit/graph.h"

namespace pchcrit {

inline constexpr std::uint64_t kAutomorphismNodeBudget = 1'000'000;

class AutomorphismBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An automorphism sigma with sigma[from] = to, if one exists. Source and
// image partitions start from the (degree, distance profile) classes with
// from and to individualized, are refined in lockstep, and branch on the
// first non-singleton cell; a pair of refinements whose cell sizes differ
// is pruned. Every search node counts against node_budget.
std::optional<std::vector<int>> find_automorphism(
    const Graph& g, int from, int to,
    std::uint64_t node_budget = kAutomorphismNodeBudget);

// Orbit index of each vertex, orbits numbered by their smallest vertex.
// Automorphisms found along the way are applied in full, so most vertex
// pairs are merged without a search of their own. The budget is shared by
// all searches; throws AutomorphismBudgetError when it runs out.
std::vector<int> vertex_orbits(
    const Graph& g, std::uint64_t node_budget = kAutomorphismNodeBudget);

bool is_vertex_transitive(const Graph& g,
                          std::uint64_t node_budget = kAutomorphismNodeBudget);

bool is_automorphism(const Graph& g, const std::vector<int>& sigma);

}  // namespace pchcrit

#endif  // PCHCRIT_AUTOMORPHISM_H_
