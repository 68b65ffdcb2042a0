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

#ifndef PCHCRIT_CANONICAL_H_
#define PCHCRIT_CANONICAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pchcrit/graph.h"

namespace pchcrit {

// Isomorphism-class key: the graph6 string of a canonically relabeled copy.
// graph6 strings of equal order compare like the underlying upper-triangle
// bitstrings, so ordering forms orders those bitstrings.
struct CanonicalForm {
  int order = 0;
  std::string graph6;

  auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr std::uint64_t kCanonicalLeafBudget = 2'000'000;

// Individualization-refinement: refine an invariant vertex partition to an
// equitable one, individualize each vertex of the first non-singleton cell
// in turn, recurse, and keep the smallest adjacency string over all
// discrete leaves. Exact for every order; the leaf budget guards highly
// symmetric inputs (throws std::runtime_error when exceeded).
CanonicalForm canonical_form(const Graph& g,
                             std::uint64_t leaf_budget = kCanonicalLeafBudget);

// Permutation realizing canonical_form: position i holds the original
// vertex relabeled to i.
std::vector<int> canonical_labeling(
    const Graph& g, std::uint64_t leaf_budget = kCanonicalLeafBudget);

// Lexicographically smallest adjacency string over all n! relabelings.
// Different key than canonical_form, same equivalence. Throws
// std::invalid_argument for n > 10.
CanonicalForm canonical_form_exhaustive(const Graph& g);

// g relabeled so that vertex perm[i] becomes i.
Graph relabel(const Graph& g, const std::vector<int>& perm);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace pchcrit

#endif  // PCHCRIT_CANONICAL_H_
