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

#include <bit>
#include <stdexcept>
#include <vector>

#include "pchcrit/canonical.h"
#include "pchcrit/distance.h"
#include "pchcrit/generators.h"
#include "pchcrit/graph.h"
#include "pchcrit/random_graphs.h"

namespace pchcrit {
namespace {

TEST(BuildGraph, Triangle) {
  const Graph g = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g, generate(Family::kCycle, {3}));
}

TEST(BuildGraph, SingleVertex) {
  const Graph g(1, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0);
}

TEST(BuildGraph, FourCycle) {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(g, generate(Family::kCycle, {4}));
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(BuildGraph, DuplicatesCollapse) {
  const Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(BuildGraph, RejectsBadInput) {
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{-1, 2}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(0, {}), std::invalid_argument);
}

TEST(BuildGraph, AdjacencyIsSymmetricAndDegreeSumMatches) {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(1 + t % 70, 0.3, rng);
    int degree_sum = 0;
    for (int u = 0; u < g.order(); ++u) {
      degree_sum += g.degree(u);
      EXPECT_FALSE(g.has_edge(u, u));
      for (int v = 0; v < g.order(); ++v) {
        EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.size());
  }
}

TEST(Generate, GadgetOneTwoFourHasOrderThirteen) {
  const Graph g = generate(Family::kGadget, {1, 2, 4});
  EXPECT_EQ(g.order(), 13);
  // K_3 center plus cliques K_3, K_4, K_6 sharing one vertex each.
  EXPECT_EQ(g.size(), 3 + 3 + 6 + 15);
}

TEST(Generate, Net) {
  const Graph g = generate(Family::kNet);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 6);
  int leaves = 0;
  for (int v = 0; v < 6; ++v) leaves += g.degree(v) == 1;
  EXPECT_EQ(leaves, 3);
}

TEST(Generate, CaterpillarT) {
  const Graph g = generate(Family::kCaterpillarT);
  EXPECT_EQ(g.order(), 31);
  EXPECT_TRUE(is_tree(g));
  const int leaves_per_spine[9] = {3, 2, 2, 3, 2, 3, 2, 2, 3};
  for (int s = 0; s < 9; ++s) {
    int leaves = 0;
    for (int u : g.neighbors(s)) leaves += g.degree(u) == 1;
    EXPECT_EQ(leaves, leaves_per_spine[s]) << "spine " << kCaterpillarTSpine[s];
  }
}

TEST(Generate, G2kLeavesSitAtDistanceTwoFromEnds) {
  for (int k = 3; k <= 8; ++k) {
    const Graph g = generate(Family::kG2k, {k});
    EXPECT_EQ(g.order(), 2 * k + 2);
    EXPECT_TRUE(g.has_edge(2, 2 * k));
    EXPECT_TRUE(g.has_edge(2 * k - 3, 2 * k + 1));
    EXPECT_TRUE(is_tree(g));
  }
}

TEST(Generate, HOddPathLength) {
  for (int k = 0; k <= 3; ++k) {
    const Graph g = generate(Family::kHOdd, {k});
    EXPECT_EQ(g.order(), 8 + 2 * k);
    EXPECT_EQ(DistanceMatrix(g)(0, 4), 2 * k + 1);
  }
}

TEST(Generate, C6ChordsEndsAtK33) {
  EXPECT_TRUE(are_isomorphic(generate(Family::kC6Chords, {3}),
                             generate(Family::kCompleteBipartite, {3, 3})));
  for (int j = 0; j <= 3; ++j) {
    EXPECT_EQ(generate(Family::kC6Chords, {j}).size(), 6 + j);
  }
}

TEST(Generate, FigOrder5ChordCounts) {
  const int chords[5] = {0, 1, 2, 2, 3};
  for (int i = 0; i <= 4; ++i) {
    EXPECT_EQ(generate(Family::kFigOrder5, {i}).size(), 5 + chords[i]);
  }
  // The two two-chord graphs differ: crossing vs. sharing an endpoint.
  EXPECT_FALSE(are_isomorphic(generate(Family::kFigOrder5, {2}),
                              generate(Family::kFigOrder5, {3})));
}

TEST(Generate, JoinReducibleShapes) {
  EXPECT_EQ(generate(Family::kFigJoinReducible, {0}),
            generate(Family::kComplete, {4}));
  const int sizes[5] = {6, 6, 7, 7, 8};
  for (int i = 0; i <= 4; ++i) {
    EXPECT_EQ(generate(Family::kFigJoinReducible, {i}).size(), sizes[i]);
  }
}

TEST(Generate, PetersenIsCubicWithGirthFive) {
  const Graph g = generate(Family::kPetersen);
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 15);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3);
  for (const auto& [u, v] : g.edges()) {
    for (int w : g.neighbors(u)) EXPECT_FALSE(g.has_edge(v, w));
  }
}

TEST(Generate, HypercubeEdgesAreHammingOne) {
  const Graph g = generate(Family::kHypercube, {4});
  EXPECT_EQ(g.size(), 32);
  for (const auto& [u, v] : g.edges()) EXPECT_EQ(std::popcount(unsigned(u ^ v)), 1);
}

TEST(Generate, AllFamiliesConnected) {
  const std::vector<GraphFamilySpec> specs = {
      {Family::kPath, {5}},           {Family::kCycle, {7}},
      {Family::kComplete, {5}},       {Family::kCompleteBipartite, {2, 3}},
      {Family::kStar, {4}},           {Family::kHypercube, {3}},
      {Family::kPetersen, {}},        {Family::kNet, {}},
      {Family::kCaterpillar, {2, 0, 1}}, {Family::kGluedCliques, {3, 4}},
      {Family::kGadget, {2, 3}},      {Family::kG2k, {4}},
      {Family::kHOdd, {2}},           {Family::kCaterpillarT, {}},
      {Family::kFigOrder5, {4}},      {Family::kC6Chords, {2}},
      {Family::kCycleWithLeaves, {8, 0, 3}},
      {Family::kFigJoinReducible, {3}}};
  for (const auto& spec : specs) {
    EXPECT_TRUE(is_connected(generate(spec))) << family_name(spec.family);
  }
}

TEST(Generate, RejectsOutOfDomain) {
  EXPECT_THROW(generate(Family::kCycle, {2}), std::invalid_argument);
  EXPECT_THROW(generate(Family::kG2k, {2}), std::invalid_argument);
  EXPECT_THROW(generate(Family::kFigOrder5, {5}), std::invalid_argument);
  EXPECT_THROW(generate(Family::kGluedCliques, {1, 3}), std::invalid_argument);
  EXPECT_THROW(generate(Family::kPath, {}), std::invalid_argument);
  EXPECT_THROW(parse_family("dodecahedron"), std::invalid_argument);
}

TEST(Generate, FamilyNamesRoundTrip) {
  for (int f = 0; f <= static_cast<int>(Family::kFigJoinReducible); ++f) {
    const auto family = static_cast<Family>(f);
    EXPECT_EQ(parse_family(family_name(family)), family);
  }
}

TEST(CartesianProduct, K2SquaredIsC4) {
  const Graph k2 = generate(Family::kComplete, {2});
  EXPECT_TRUE(are_isomorphic(cartesian_product(k2, k2),
                             generate(Family::kCycle, {4})));
}

TEST(CartesianProduct, K13TimesP3) {
  const Graph g = cartesian_product(generate(Family::kStar, {3}),
                                    generate(Family::kPath, {3}));
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(diameter(g), 4);
}

TEST(CartesianProduct, IteratedK2IsQ3) {
  const Graph k2 = generate(Family::kComplete, {2});
  EXPECT_TRUE(are_isomorphic(cartesian_product(cartesian_product(k2, k2), k2),
                             generate(Family::kHypercube, {3})));
}

TEST(CartesianProduct, IndexLayout) {
  const Graph g = generate(Family::kPath, {3});
  const Graph h = generate(Family::kPath, {2});
  const Graph p = cartesian_product(g, h);
  // (g, h) -> 2g + h.
  EXPECT_TRUE(p.has_edge(0, 1));
  EXPECT_TRUE(p.has_edge(0, 2));
  EXPECT_FALSE(p.has_edge(0, 3));
}

TEST(CartesianProduct, DiameterAdds) {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_connected_graph(2 + t % 6, 0.5, rng);
    const Graph h = random_connected_graph(1 + t % 5, 0.5, rng);
    EXPECT_EQ(diameter(cartesian_product(g, h)), diameter(g) + diameter(h));
  }
}

TEST(DeleteVertex, CycleBecomesPath) {
  for (int x = 0; x < 5; ++x) {
    EXPECT_TRUE(are_isomorphic(delete_vertex(generate(Family::kCycle, {5}), x),
                               generate(Family::kPath, {4})));
  }
}

TEST(DeleteVertex, GluedCliquesSplit) {
  const Graph g = delete_vertex(generate(Family::kGluedCliques, {3, 4}), 0);
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].graph, generate(Family::kComplete, {2}));
  EXPECT_EQ(comps[1].graph, generate(Family::kComplete, {3}));
}

TEST(DeleteVertex, StarLeaf) {
  EXPECT_EQ(delete_vertex(generate(Family::kStar, {3}), 3),
            generate(Family::kStar, {2}));
}

TEST(DeleteVertex, MapIsOrderPreserving) {
  const InducedSubgraph s = delete_vertex_mapped(generate(Family::kPath, {5}), 2);
  EXPECT_EQ(s.to_parent, (std::vector<int>{0, 1, 3, 4}));
  EXPECT_EQ(s.graph.size(), 2);
}

TEST(DeleteVertex, Errors) {
  EXPECT_THROW(delete_vertex(generate(Family::kPath, {3}), 3), std::out_of_range);
  EXPECT_THROW(delete_vertex(Graph(1, {}), 0), std::invalid_argument);
}

TEST(DeleteVertex, DistancesNeverShrink) {
  Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_connected_graph(3 + t % 8, 0.35, rng);
    const DistanceMatrix d(g);
    for (int x = 0; x < g.order(); ++x) {
      const InducedSubgraph s = delete_vertex_mapped(g, x);
      const DistanceMatrix ds(s.graph);
      for (int a = 0; a < s.graph.order(); ++a) {
        for (int b = 0; b < s.graph.order(); ++b) {
          EXPECT_GE(ds(a, b), d(s.to_parent[a], s.to_parent[b]));
        }
      }
    }
  }
}

TEST(DeleteEdges, K33MinusMatchingEdge) {
  const Graph k33 = generate(Family::kCompleteBipartite, {3, 3});
  const std::vector<Edge> f = {{0, 3}};
  EXPECT_EQ(delete_edges(k33, f).size(), 8);
}

TEST(DeleteEdges, EmptySetIsIdentity) {
  const Graph g = generate(Family::kPetersen);
  EXPECT_EQ(delete_edges(g, std::vector<Edge>{}), g);
}

TEST(DeleteEdges, C4MinusEdgeIsP4) {
  const std::vector<Edge> f = {{3, 0}};
  EXPECT_EQ(delete_edges(generate(Family::kCycle, {4}), f),
            generate(Family::kPath, {4}));
}

TEST(DeleteEdges, AbsentEdgeRejected) {
  const std::vector<Edge> f = {{0, 2}};
  EXPECT_THROW(delete_edges(generate(Family::kCycle, {4}), f),
               std::invalid_argument);
}

TEST(Structure, TreesAndJoins) {
  EXPECT_TRUE(is_tree(generate(Family::kStar, {4})));
  EXPECT_FALSE(is_tree(generate(Family::kCycle, {4})));
  EXPECT_FALSE(is_tree(Graph(3, {{0, 1}})));
  // K_2 join independent set of size 3 is K_{1,1,3}.
  EXPECT_TRUE(is_k2_join_independent(
      Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})));
  EXPECT_FALSE(is_k2_join_independent(generate(Family::kComplete, {4})));
  EXPECT_FALSE(is_k2_join_independent(generate(Family::kCycle, {4})));
}

}  // namespace
}  // namespace pchcrit
