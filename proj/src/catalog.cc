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

#include "pchcrit/catalog.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pchcrit {
namespace {

std::string join_params(const std::vector<int>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](CatalogEntry e) { out.push_back(std::move(e)); };

  for (int n = 3; n <= 20; ++n) {
    const bool three = n <= 4 || n % 4 == 0;
    add({.id = "cycle:" + std::to_string(n),
         .spec = {Family::kCycle, {n}},
         .order = n,
         .chi_rho = three ? 3 : 4,
         .diameter = n / 2,
         .critical = n <= 4 || n % 4 != 0,
         .anchor = "chi_rho(C_n) is 3 for n in {3,4} or n = 0 mod 4, else 4; "
                   "C_n is critical unless n >= 8 and n = 0 mod 4"});
  }
  for (int i = 0; i <= 4; ++i) {
    add({.id = "fig_order5:" + std::to_string(i),
         .spec = {Family::kFigOrder5, {i}},
         .order = 5,
         .chi_rho = 4,
         .critical = true,
         .anchor = "C_5 with this chord set is 4-critical"});
  }
  for (int j = 0; j <= 3; ++j) {
    add({.id = "c6_chords:" + std::to_string(j),
         .spec = {Family::kC6Chords, {j}},
         .order = 6,
         .chi_rho = 4,
         .critical = true,
         .anchor = "C_6 plus any number of main diagonals is 4-critical"});
  }
  add({.id = "net",
       .spec = {Family::kNet, {}},
       .order = 6,
       .chi_rho = 4,
       .critical = true,
       .anchor = "the net is 4-critical"});
  add({.id = "c4+leaves@dist1",
       .spec = {Family::kCycleWithLeaves, {4, 0, 1}},
       .order = 6,
       .chi_rho = 4,
       .critical = true,
       .anchor = "C_4 with leaves on two adjacent vertices is 4-critical"});
  add({.id = "c8+leaves@dist3",
       .spec = {Family::kCycleWithLeaves, {8, 0, 3}},
       .order = 10,
       .chi_rho = 4,
       .critical = true,
       .anchor = "C_8 with leaves on two vertices at distance 3 is 4-critical"});
  add({.id = "c8+leaves@dist1",
       .spec = {Family::kCycleWithLeaves, {8, 0, 1}},
       .order = 10,
       .critical = false,
       .anchor = "C_8 with leaves on two adjacent vertices is not critical"});
  for (int k = 3; k <= 8; ++k) {
    add({.id = "g2k:" + std::to_string(k),
         .spec = {Family::kG2k, {k}},
         .order = 2 * k + 2,
         .chi_rho = 4,
         .anchor = "P_2k with leaves on the two vertices at distance 2 from "
                   "an end has chi_rho 4"});
  }
  for (int k = 0; k <= 3; ++k) {
    add({.id = "h_odd:" + std::to_string(k),
         .spec = {Family::kHOdd, {k}},
         .order = 8 + 2 * k,
         .chi_rho = 4,
         .critical = true,
         .anchor = "two 4-cycles joined by a path of odd length form a "
                   "4-critical graph"});
  }
  add({.id = "caterpillar_t",
       .spec = {Family::kCaterpillarT, {}},
       .order = 31,
       .chi_rho = 6,
       .critical = true,
       .anchor = "the caterpillar T is 6-critical"});

  for (const std::vector<int>& s : std::vector<std::vector<int>>{
           {2, 3}, {2, 4}, {3, 3}, {2, 3, 4}}) {
    const int sum = std::accumulate(s.begin(), s.end(), 0);
    add({.id = "gadget:" + join_params(s),
         .spec = {Family::kGadget, s},
         .order = sum + 2 * static_cast<int>(s.size()),
         .chi_rho = 2 + sum,
         .critical = true,
         .delta_set = gadget_delta_prediction(s),
         .anchor = gadget_balanced(s)
                       ? "gadget(s) has chi_rho 2 + sum s_i and Delta {1} u {s_i}"
                       : "gadget(s) has chi_rho 2 + sum s_i; unbalanced, so "
                         "G - x_i keeps the K_{s_i+1} side"});
  }
  add({.id = "gadget:1,2,4",
       .spec = {Family::kGadget, {1, 2, 4}},
       .order = 13,
       .chi_rho = 9,
       .critical = true,
       .anchor = "gadget(1,2,4) has order 13; chi_rho and criticality "
                 "computed",
       .derived = true});
  for (int r = 3; r <= 4; ++r) {
    add({.id = "glued_cliques:" + std::to_string(r) + "," + std::to_string(r),
         .spec = {Family::kGluedCliques, {r, r}},
         .order = 2 * r - 1,
         .chi_rho = 2 * r - 2,
         .critical = true,
         .delta_set = std::set<int>{1, r - 1},
         .anchor = "K_r and K_s sharing a vertex have chi_rho r + s - 2 and "
                   "Delta {1, r - 1} when r = s"});
  }
  for (int n = 2; n <= 4; ++n) {
    add({.id = "complete_bipartite:" + std::to_string(n) + "," +
               std::to_string(n),
         .spec = {Family::kCompleteBipartite, {n, n}},
         .order = 2 * n,
         .chi_rho = n + 1,
         .diameter = 2,
         .critical = true,
         .delta_set = std::set<int>{1},
         .anchor = "K_{n,n} is (n+1)-critical with Delta {1}"});
  }
  add({.id = "petersen",
       .spec = {Family::kPetersen, {}},
       .order = 10,
       .chi_rho = 7,
       .alpha = 4,
       .diameter = 2,
       .critical = true,
       .delta_set = std::set<int>{2},
       .anchor = "Petersen graph: chi_rho 7, diameter 2, Delta {2}"});
  for (int d = 1; d <= 4; ++d) {
    CatalogEntry e{.id = "hypercube:" + std::to_string(d),
                   .spec = {Family::kHypercube, {d}},
                   .order = 1 << d,
                   .diameter = d,
                   .critical = true,
                   .anchor = "every hypercube Q_d is critical"};
    if (d == 1) e.chi_rho = 2;
    if (d == 2) e.chi_rho = 3;
    add(std::move(e));
  }
  add({.id = "k13xp3",
       .spec = {Family::kStar, {3}},
       .second_factor = GraphFamilySpec{Family::kPath, {3}},
       .order = 12,
       .chi_rho = 6,
       .alpha = 7,
       .diameter = 4,
       .critical = true,
       .anchor = "K_{1,3} x P_3 is 6-critical with alpha 7 and diameter 4, "
                 "although neither factor is critical"});
  add({.id = "c18xp2",
       .spec = {Family::kCycle, {18}},
       .second_factor = GraphFamilySpec{Family::kPath, {2}},
       .order = 36,
       .chi_rho = 5,
       .critical = false,
       .anchor = "C_18 x P_2 has chi_rho 5 and is not critical"});
  add({.id = "k3xc4",
       .spec = {Family::kComplete, {3}},
       .second_factor = GraphFamilySpec{Family::kCycle, {4}},
       .order = 12,
       .diameter = 3,
       .critical = true,
       .anchor = "K_3 x C_4: vertex-transitive with diam 3 <= chi_rho, "
                 "hence critical"});
  for (int i = 0; i <= 4; ++i) {
    add({.id = "fig_join_reducible:" + std::to_string(i),
         .spec = {Family::kFigJoinReducible, {i}},
         .order = i == 0 ? 4 : 5,
         .chi_rho = 4,
         .critical = true,
         .anchor = "join-reducible 4-critical graph"});
  }

  // Small critical caterpillars, leaf counts read off a drawing.
  const std::vector<std::pair<std::vector<int>, int>> caterpillars = {
      {{0, 0, 0, 0}, 3},
      {{1, 1, 1, 1}, 4},
      {{2, 1, 2}, 4},
      {{1, 1, 0, 0, 1, 1}, 4},
      {{2, 2, 2, 2, 2}, 5}};
  for (const auto& [leaves, chi] : caterpillars) {
    const int spine = static_cast<int>(leaves.size());
    add({.id = "caterpillar:" + join_params(leaves),
         .spec = {Family::kCaterpillar, leaves},
         .order = spine + std::accumulate(leaves.begin(), leaves.end(), 0),
         .chi_rho = chi,
         .critical = true,
         .anchor = "small " + std::to_string(chi) + "-critical caterpillar",
         .optional = true});
  }
  return out;
}

}  // namespace

bool gadget_balanced(const std::vector<int>& s) {
  const int sum = std::accumulate(s.begin(), s.end(), 0);
  return std::all_of(s.begin(), s.end(),
                     [&](int si) { return sum - si >= si - 1; });
}

std::set<int> gadget_delta_prediction(const std::vector<int>& s) {
  const int sum = std::accumulate(s.begin(), s.end(), 0);
  std::set<int> delta{1};
  for (int si : s) delta.insert(2 + sum - std::max(si + 1, 2 + sum - si));
  return delta;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view id) {
  for (const CatalogEntry& e : catalog()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Graph build_entry(const CatalogEntry& entry) {
  Graph g = generate(entry.spec);
  if (entry.second_factor) {
    g = cartesian_product(g, generate(*entry.second_factor));
  }
  return g.renamed(entry.id);
}

Graph build_entry(std::string_view id) {
  const CatalogEntry* e = find_entry(id);
  if (e == nullptr) {
    throw std::invalid_argument("unknown catalog id: " + std::string(id));
  }
  return build_entry(*e);
}

}  // namespace pchcrit
