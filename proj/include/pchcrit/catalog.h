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

#ifndef PCHCRIT_CATALOG_H_
#define PCHCRIT_CATALOG_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pchcrit/generators.h"
#include "pchcrit/graph.h"

namespace pchcrit {

// A named graph with the properties it is known to have. Unset fields are
// not asserted.
struct CatalogEntry {
  std::string id = {};
  GraphFamilySpec spec = {};
  // When set, the graph is generate(spec) x generate(*second_factor).
  std::optional<GraphFamilySpec> second_factor = std::nullopt;
  int order = 0;
  std::optional<int> chi_rho = std::nullopt;
  std::optional<int> alpha = std::nullopt;
  std::optional<int> diameter = std::nullopt;
  std::optional<bool> critical = std::nullopt;
  std::optional<std::set<int>> delta_set = std::nullopt;
  // What the expected values say, in one line.
  std::string anchor = {};
  // Expected values were computed by this toolkit rather than taken from a
  // known result.
  bool derived = false;
  // Transcribed from a drawing whose exact shape is not pinned down.
  bool optional = false;
};

const std::vector<CatalogEntry>& catalog();

// nullptr when the id is unknown.
const CatalogEntry* find_entry(std::string_view id);

// sum_{j != i} s_j >= s_i - 1 for every i: the condition under which
// deleting the central vertex x_i of gadget(s) costs exactly s_i colors.
bool gadget_balanced(const std::vector<int>& s);

// Delta of gadget(s) (all s_i >= 2, r >= 2) predicted from
// chi_rho(gadget(s)) = 2 + sum s_i: deleting a non-central vertex of the
// largest clique gives 1, and x_i is a cut vertex leaving K_{s_i+1} and
// gadget(s without s_i). Equals {1} u {s_i} when gadget_balanced(s).
std::set<int> gadget_delta_prediction(const std::vector<int>& s);

// Throws std::invalid_argument for an unknown id.
Graph build_entry(const CatalogEntry& entry);
Graph build_entry(std::string_view id);

}  // namespace pchcrit

#endif  // PCHCRIT_CATALOG_H_
