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

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "pchcrit/catalog.h"
#include "pchcrit/criticality.h"
#include "pchcrit/distance.h"
#include "pchcrit/graph_io.h"
#include "pchcrit/independence.h"

namespace pchcrit {
namespace {

TEST(Catalog, IdsAreUniqueAndFindable) {
  std::set<std::string> ids;
  for (const auto& e : catalog()) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    EXPECT_EQ(find_entry(e.id), &e);
    EXPECT_FALSE(e.anchor.empty()) << e.id;
  }
  EXPECT_EQ(find_entry("no-such-graph"), nullptr);
  EXPECT_THROW(build_entry("no-such-graph"), std::invalid_argument);
}

TEST(Catalog, EveryEntryMatchesItsExpectations) {
  for (const auto& e : catalog()) {
    SCOPED_TRACE(e.id);
    const Graph g = build_entry(e);
    EXPECT_EQ(g.order(), e.order);
    EXPECT_EQ(parse_graph6(format_graph6(g)).edges(), g.edges());
    if (e.alpha) {
      EXPECT_EQ(independence_number(g), *e.alpha);
    }
    if (e.diameter) {
      EXPECT_EQ(diameter(g), *e.diameter);
    }
    if (!e.chi_rho && !e.critical && !e.delta_set) continue;
    const auto r = analyze_criticality(g);
    if (e.chi_rho) {
      EXPECT_EQ(r.chi_rho, *e.chi_rho);
    }
    if (e.critical) {
      EXPECT_EQ(r.critical, *e.critical);
    }
    if (e.delta_set) {
      EXPECT_EQ(r.delta_set, *e.delta_set);
    }
  }
}

TEST(Catalog, Products) {
  const auto* e = find_entry("k13xp3");
  ASSERT_NE(e, nullptr);
  ASSERT_TRUE(e->second_factor.has_value());
  EXPECT_EQ(build_entry(*e).size(), 3 * 3 + 4 * 2);
}

TEST(Gadget, Balance) {
  EXPECT_TRUE(gadget_balanced({2, 3}));
  EXPECT_TRUE(gadget_balanced({3, 3}));
  EXPECT_TRUE(gadget_balanced({2, 3, 4}));
  EXPECT_FALSE(gadget_balanced({2, 4}));
  EXPECT_FALSE(gadget_balanced({2, 5}));
}

TEST(Gadget, DeltaPrediction) {
  EXPECT_EQ(gadget_delta_prediction({2, 3}), (std::set<int>{1, 2, 3}));
  EXPECT_EQ(gadget_delta_prediction({3, 3}), (std::set<int>{1, 3}));
  EXPECT_EQ(gadget_delta_prediction({2, 3, 4}), (std::set<int>{1, 2, 3, 4}));
  // Deleting x_2 leaves K_5 and gadget(2), chi 5 and 4: drop 8 - 5 = 3.
  EXPECT_EQ(gadget_delta_prediction({2, 4}), (std::set<int>{1, 2, 3}));
}

}  // namespace
}  // namespace pchcrit
