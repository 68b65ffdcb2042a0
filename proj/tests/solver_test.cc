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

#include <algorithm>
#include <bit>
#include <vector>

#include "pchcrit/distance.h"
#include "pchcrit/enumerate.h"
#include "pchcrit/generators.h"
#include "pchcrit/independence.h"
#include "pchcrit/oracle.h"
#include "pchcrit/packing.h"
#include "pchcrit/random_graphs.h"
#include "pchcrit/solver.h"

namespace pchcrit {
namespace {

int chi(const Graph& g) { return packing_chromatic_number(g).chi; }

Verdict decide(const Graph& g, std::vector<int> seq) {
  const PackingSequence s(std::move(seq));
  const FeasibilityResult r = s_packing_decide(g, s);
  if (r.certificate) {
    EXPECT_TRUE(verify_packing_coloring(g, s, *r.certificate));
  }
  return r.verdict;
}

// C18 x P2 with the 5-coloring read off its drawing; row v at index 2g,
// row w at 2g + 1, column j = g + 1.
Coloring c18xp2_drawing() {
  Coloring c{std::vector<int>(36, 0)};
  for (int j = 1; j <= 18; ++j) {
    int v = 1, w = 1;
    if (j == 1 || j == 7 || j == 13) v = 2;
    if (j == 5 || j == 11 || j == 17) v = 3;
    if (j == 3 || j == 9 || j == 15) v = 4;
    if (j == 4 || j == 10 || j == 16) w = 2;
    if (j == 2 || j == 8 || j == 14) w = 3;
    if (j == 6 || j == 12 || j == 18) w = 5;
    c.colors[2 * (j - 1)] = v;
    c.colors[2 * (j - 1) + 1] = w;
  }
  return c;
}

TEST(PackingSequence, Validation) {
  EXPECT_THROW(PackingSequence({}), std::invalid_argument);
  EXPECT_THROW(PackingSequence({0, 1}), std::invalid_argument);
  EXPECT_THROW(PackingSequence({2, 1}), std::invalid_argument);
  EXPECT_EQ(PackingSequence::standard(3).values(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(PackingSequence({2, 2, 5}).to_string(), "(2,2,5)");
}

TEST(Verify, C18xP2Drawing) {
  const Graph g = cartesian_product(generate(Family::kCycle, {18}),
                                    generate(Family::kPath, {2}));
  EXPECT_TRUE(verify_packing_coloring(g, PackingSequence::standard(5),
                                      c18xp2_drawing()));
}

TEST(Verify, CaterpillarTSpineColoring) {
  const Graph t = generate(Family::kCaterpillarT);
  Coloring c{std::vector<int>(31, 1)};
  const std::vector<int> spine = {2, 3, 4, 2, 5, 3, 2, 4, 6};
  std::copy(spine.begin(), spine.end(), c.colors.begin());
  EXPECT_TRUE(verify_packing_coloring(t, PackingSequence::standard(6), c));
}

TEST(Verify, AdjacentSameColorFails) {
  EXPECT_FALSE(verify_packing_coloring(Graph(2, {{0, 1}}),
                                       PackingSequence::standard(2),
                                       Coloring{{1, 1}}));
}

TEST(Verify, DistanceBoundIsStrict) {
  // Color 2 on the ends of P3: distance 2 is not > 2.
  EXPECT_FALSE(verify_packing_coloring(generate(Family::kPath, {3}),
                                       PackingSequence::standard(2),
                                       Coloring{{2, 1, 2}}));
  EXPECT_TRUE(verify_packing_coloring(generate(Family::kPath, {4}),
                                      PackingSequence({1, 2, 3}),
                                      Coloring{{1, 2, 1, 3}}));
}

TEST(Verify, Errors) {
  const Graph g = generate(Family::kPath, {3});
  const PackingSequence s = PackingSequence::standard(2);
  EXPECT_THROW(verify_packing_coloring(g, s, Coloring{{1, 2}}), std::invalid_argument);
  EXPECT_THROW(verify_packing_coloring(g, s, Coloring{{1, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(verify_packing_coloring(g, s, Coloring{{1, 3, 1}}), std::invalid_argument);
  EXPECT_TRUE(verify_partial_packing_coloring(g, s, Coloring{{1, 0, 1}}));
}

TEST(Decide, P9Has_No2345Coloring) {
  EXPECT_EQ(decide(generate(Family::kPath, {9}), {2, 3, 4, 5}), Verdict::kInfeasible);
  EXPECT_EQ(decide(generate(Family::kPath, {8}), {2, 3, 4, 5}), Verdict::kFeasible);
}

TEST(Decide, P35HasNo23456Coloring) {
  EXPECT_EQ(decide(generate(Family::kPath, {35}), {2, 3, 4, 5, 6}),
            Verdict::kInfeasible);
  EXPECT_EQ(decide(generate(Family::kPath, {34}), {2, 3, 4, 5, 6}),
            Verdict::kFeasible);
}

TEST(Decide, P24With2To7AndPeriodicCertificate) {
  const Graph p = generate(Family::kPath, {24});
  EXPECT_EQ(decide(p, {2, 3, 4, 5, 6, 7}), Verdict::kFeasible);
  const int pattern[12] = {2, 4, 3, 2, 5, 6, 2, 4, 3, 2, 5, 7};
  Coloring c;
  for (int i = 0; i < 24; ++i) c.colors.push_back(pattern[i % 12] - 1);
  EXPECT_TRUE(verify_packing_coloring(p, PackingSequence({2, 3, 4, 5, 6, 7}), c));
}

TEST(Decide, BudgetIsNotInfeasible) {
  const FeasibilityResult r =
      s_packing_decide(generate(Family::kPath, {35}),
                       PackingSequence({2, 3, 4, 5, 6}), SolverOptions{10});
  EXPECT_EQ(r.verdict, Verdict::kBudgetExhausted);
  EXPECT_FALSE(r.certificate.has_value());
  EXPECT_THROW(packing_chromatic_number(generate(Family::kPetersen),
                                        SolverOptions{3}),
               BudgetExhaustedError);
  EXPECT_STREQ(verdict_name(Verdict::kBudgetExhausted), "budget-exhausted");
}

TEST(ChiRho, Examples) {
  EXPECT_EQ(chi(generate(Family::kPetersen)), 7);
  EXPECT_EQ(chi(generate(Family::kCaterpillarT)), 6);
  EXPECT_EQ(chi(Graph(1, {})), 1);
  EXPECT_EQ(chi(generate(Family::kCycle, {5})), 4);
  EXPECT_EQ(chi(generate(Family::kCompleteBipartite, {3, 3})), 4);
}

TEST(ChiRho, EdgelessAndDisconnected) {
  EXPECT_EQ(chi(Graph(4, {})), 1);
  // Max over components: C5 needs 4, K2 needs 2.
  const Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}});
  const ChiResult r = packing_chromatic_number(g);
  EXPECT_EQ(r.chi, 4);
  EXPECT_TRUE(verify_packing_coloring(g, PackingSequence::standard(4), r.certificate));
}

// C4 and P4 take 1,2,1,3 and admit no (1,2)-coloring;
// the net needs 4. The oracle reaches these by enumerating all 3^4, 3^4 and
// 4^6 assignments.
TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_chi_rho(generate(Family::kCycle, {4})), 3);
  EXPECT_EQ(oracle_chi_rho(generate(Family::kPath, {4})), 3);
  EXPECT_EQ(oracle_chi_rho(generate(Family::kNet)), 4);
  EXPECT_EQ(chi(generate(Family::kCycle, {4})), 3);
  EXPECT_EQ(chi(generate(Family::kPath, {4})), 3);
  EXPECT_EQ(chi(generate(Family::kNet)), 4);
}

TEST(Oracle, Limits) {
  EXPECT_THROW(oracle_chi_rho(generate(Family::kPath, {10})), std::invalid_argument);
  EXPECT_THROW(oracle_chi_rho(generate(Family::kComplete, {9}), 1000),
               BudgetExhaustedError);
}

TEST(Properties, OracleEquivalenceAllConnectedUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      EXPECT_EQ(chi(g), oracle_chi_rho(g));
    }
  }
}

TEST(Properties, OracleEquivalenceRandomDisconnected) {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(1 + t % 8, 0.3, rng);
    EXPECT_EQ(chi(g), oracle_chi_rho(g));
  }
}

TEST(Properties, CertificatesVerifyAndLargeColorsAreSingletons) {
  Rng rng(22);
  for (int t = 0; t < 150; ++t) {
    const Graph g = random_connected_graph(2 + t % 14, 0.3, rng);
    const ChiResult r = packing_chromatic_number(g);
    const PackingSequence s = PackingSequence::standard(r.chi);
    ASSERT_TRUE(verify_packing_coloring(g, s, r.certificate));
    const int diam = diameter(g);
    for (int color = diam; color <= r.chi; ++color) {
      EXPECT_LE(std::count(r.certificate.colors.begin(),
                           r.certificate.colors.end(), color),
                1);
    }
  }
}

TEST(Properties, ArbitrarySequencesGiveVerifiedCertificates) {
  Rng rng(23);
  for (int t = 0; t < 150; ++t) {
    const Graph g = random_graph(2 + t % 12, 0.3, rng);
    std::vector<int> seq;
    int s = 1 + static_cast<int>(rng() % 2);
    for (int i = 0, k = 2 + static_cast<int>(rng() % 5); i < k; ++i) {
      seq.push_back(s);
      s += static_cast<int>(rng() % 2);
    }
    decide(g, seq);  // checks any certificate
  }
}

TEST(Properties, SubgraphMonotonicity) {
  Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 9;
    const Graph g = random_graph(n, 0.45, rng);
    const int base = chi(g);
    EXPECT_LE(chi(delete_vertex(g, static_cast<int>(rng() % n))), base);
    const auto edges = g.edges();
    if (!edges.empty()) {
      const std::vector<Edge> f = {edges[rng() % edges.size()]};
      EXPECT_LE(chi(delete_edges(g, f)), base);
    }
  }
}

TEST(Properties, LeafSandwich) {
  Rng rng(25);
  for (int t = 0; t < 200; ++t) {
    const Graph tree = random_tree(2 + t % 13, rng);
    const int base = chi(tree);
    for (int x = 0; x < tree.order(); ++x) {
      if (tree.degree(x) != 1) continue;
      const int after = chi(delete_vertex(tree, x));
      EXPECT_GE(after, base - 1);
      EXPECT_LE(after, base);
    }
  }
}

TEST(Properties, AlphaUpperBoundTightAtDiameterTwo) {
  Rng rng(26);
  int diameter_two = 0;
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_connected_graph(2 + t % 11, 0.55, rng);
    const int n = g.order();
    const int bound = n - independence_number(g) + 1;
    const int value = chi(g);
    EXPECT_LE(value, bound);
    if (diameter(g) == 2) {
      ++diameter_two;
      EXPECT_EQ(value, bound);
    }
  }
  EXPECT_GT(diameter_two, 20);
}

TEST(Properties, SequenceDominanceWithPrefixExtension) {
  Rng rng(27);
  for (int t = 0; t < 150; ++t) {
    const Graph g = random_graph(2 + t % 10, 0.35, rng);
    std::vector<int> seq;
    int s = 1;
    for (int i = 0, k = 1 + static_cast<int>(rng() % 4); i < k; ++i) {
      s += static_cast<int>(rng() % 2);
      seq.push_back(s);
    }
    // Lower some entries while staying nondecreasing, then append colors.
    std::vector<int> weaker = seq;
    for (int& x : weaker) x = std::max(1, x - static_cast<int>(rng() % 2));
    std::sort(weaker.begin(), weaker.end());
    for (std::size_t i = 0; i < weaker.size(); ++i) weaker[i] = std::min(weaker[i], seq[i]);
    weaker.push_back(weaker.back() + static_cast<int>(rng() % 3));
    if (decide(g, seq) == Verdict::kFeasible) {
      EXPECT_EQ(decide(g, weaker), Verdict::kFeasible);
    }
  }
}

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number(cartesian_product(generate(Family::kStar, {3}),
                                                  generate(Family::kPath, {3}))),
            7);
  EXPECT_EQ(independence_number(generate(Family::kPetersen)), 4);
  EXPECT_EQ(independence_number(generate(Family::kComplete, {5})), 1);
}

int brute_alpha(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

TEST(Independence, MatchesSubsetEnumeration) {
  Rng rng(28);
  for (int t = 0; t < 120; ++t) {
    const Graph g = random_graph(1 + t % 15, (t % 7 + 1) / 8.0, rng);
    EXPECT_EQ(independence_number(g), brute_alpha(g));
    const auto set = maximum_independent_set(g);
    EXPECT_EQ(static_cast<int>(set.size()), brute_alpha(g));
    for (int a : set) {
      for (int b : set) EXPECT_FALSE(g.has_edge(a, b));
    }
  }
}

TEST(Bounds, Examples) {
  const ChiBounds p = chi_rho_bounds(generate(Family::kPetersen));
  EXPECT_EQ(p.upper, 7);
  EXPECT_EQ(p.lower, 2);
  const ChiBounds k = chi_rho_bounds(cartesian_product(
      generate(Family::kStar, {3}), generate(Family::kPath, {3})));
  EXPECT_EQ(k.upper, 6);
  const ChiBounds one = chi_rho_bounds(Graph(1, {}));
  EXPECT_EQ(one.lower, 1);
  EXPECT_EQ(one.upper, 1);
  EXPECT_THROW(chi_rho_bounds(Graph(2, {})), DisconnectedGraphError);
}

TEST(Bounds, ProductLowerBound) {
  // K_{1,3} x P_3: (chi(K_{1,3}) + 1) * 3 - 4 * 2 - 1 = 0.
  EXPECT_EQ(cartesian_lower_bound(2, 3, 4), 0);
  // K_3 x C_4: (3 + 1) * 4 - 3 * 3 - 1 = 6.
  EXPECT_EQ(cartesian_lower_bound(3, 4, 3), 6);
  const Graph k3c4 = cartesian_product(generate(Family::kComplete, {3}),
                                       generate(Family::kCycle, {4}));
  const ChiBounds b = chi_rho_bounds(k3c4, ProductFactors{3, 4});
  ASSERT_TRUE(b.product_lower.has_value());
  EXPECT_EQ(*b.product_lower, 6);
  EXPECT_GE(b.lower, 6);
  EXPECT_GE(chi(k3c4), 6);
}

}  // namespace
}  // namespace pchcrit
