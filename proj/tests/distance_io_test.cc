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

#include <string>
#include <vector>

#include "pchcrit/catalog.h"
#include "pchcrit/distance.h"
#include "pchcrit/generators.h"
#include "pchcrit/graph_io.h"
#include "pchcrit/random_graphs.h"

namespace pchcrit {
namespace {

TEST(Distances, Examples) {
  EXPECT_EQ(diameter(generate(Family::kPetersen)), 2);
  EXPECT_EQ(diameter(cartesian_product(generate(Family::kStar, {3}),
                                       generate(Family::kPath, {3}))),
            4);
  EXPECT_EQ(diameter(generate(Family::kPath, {9})), 8);
  EXPECT_EQ(diameter(Graph(1, {})), 0);
}

TEST(Distances, DisconnectedHasDistinctError) {
  const Graph g(4, {{0, 1}, {2, 3}});
  const DistanceMatrix d(g);
  EXPECT_FALSE(d.connected());
  EXPECT_EQ(d(0, 2), DistanceMatrix::kInfinite);
  EXPECT_THROW(diameter(g), DisconnectedGraphError);
  EXPECT_FALSE(is_connected(g));
}

TEST(Distances, MetricInvariants) {
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(2 + t % 12, 0.25, rng);
    const DistanceMatrix d(g);
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
      EXPECT_EQ(d(u, u), 0);
      for (int v = 0; v < n; ++v) {
        EXPECT_EQ(d(u, v), d(v, u));
        EXPECT_EQ(d(u, v) == 1, g.has_edge(u, v));
        for (int w = 0; w < n; ++w) {
          if (d(u, w) == DistanceMatrix::kInfinite ||
              d(w, v) == DistanceMatrix::kInfinite) {
            continue;
          }
          EXPECT_LE(d(u, v), d(u, w) + d(w, v));
        }
      }
    }
  }
}

// graph6 by hand: K1 is N(1) = chr(63 + 1) with no adjacency bytes; P2 adds
// the single bit x(0,1) = 1 padded to 100000b = 32, chr(63 + 32) = '_'.
TEST(Graph6, HandEncodedSmallGraphs) {
  EXPECT_EQ(format_graph6(Graph(1, {})), "@");
  EXPECT_EQ(format_graph6(Graph(2, {{0, 1}})), "A_");
  EXPECT_EQ(parse_graph6("@"), Graph(1, {}));
  EXPECT_EQ(parse_graph6("A_"), Graph(2, {{0, 1}}));
  EXPECT_EQ(parse_graph6(">>graph6<<A_"), Graph(2, {{0, 1}}));
}

// Bit order check with C4: pairs (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) give
// 1,0,1,1,0,1 -> 101101b = 45 -> 'l'.
TEST(Graph6, ColumnMajorBitOrder) {
  EXPECT_EQ(format_graph6(generate(Family::kCycle, {4})), "Cl");
}

TEST(Graph6, RoundTripRandomGraphs) {
  Rng rng(1234);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 20;
    const Graph g = random_graph(n, (t % 9 + 1) / 10.0, rng);
    EXPECT_EQ(parse_graph6(format_graph6(g)), g);
  }
}

TEST(Graph6, RoundTripLargeOrders) {
  Rng rng(5);
  for (int n : {62, 63, 100, 300}) {
    const Graph g = random_graph(n, 0.1, rng);
    const std::string s = format_graph6(g);
    if (n >= 63) {
      EXPECT_EQ(s[0], '~');
    }
    EXPECT_EQ(parse_graph6(s), g);
  }
}

TEST(Graph6, RoundTripCatalog) {
  for (const CatalogEntry& e : catalog()) {
    const Graph g = build_entry(e);
    EXPECT_EQ(parse_graph6(format_graph6(g)), g) << e.id;
    EXPECT_EQ(parse_edge_list(format_edge_list(g)), g) << e.id;
  }
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);      // truncated
  EXPECT_THROW(parse_graph6("Cll"), ParseError);    // trailing data
  EXPECT_THROW(parse_graph6("A`"), ParseError);     // nonzero padding
  EXPECT_THROW(parse_graph6("C\x01"), ParseError);  // invalid byte
  EXPECT_THROW(parse_graph6("?"), ParseError);      // n = 0
}

TEST(EdgeList, ParseAndFormat) {
  const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(g, generate(Family::kPath, {4}));
  EXPECT_EQ(format_edge_list(g), "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 x\n"), ParseError);
}

TEST(AutoDetect, LeadingDigitMeansEdgeList) {
  EXPECT_EQ(detect_format("  \n4 0\n"), GraphFormat::kEdgeList);
  EXPECT_EQ(detect_format("Cl\n"), GraphFormat::kGraph6);
  EXPECT_EQ(parse_graph("Cl\n"), generate(Family::kCycle, {4}));
  EXPECT_EQ(parse_graph("2 1\n0 1\n"), Graph(2, {{0, 1}}));
}

}  // namespace
}  // namespace pchcrit
