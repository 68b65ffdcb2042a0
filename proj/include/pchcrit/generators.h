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

#ifndef PCHCRIT_GENERATORS_H_
#define PCHCRIT_GENERATORS_H_

#include <string>
#include <string_view>
#include <vector>

#include "pchcrit/graph.h"

namespace pchcrit {

enum class Family {
  kPath,               // (n >= 1)
  kCycle,              // (n >= 3)
  kComplete,           // (n >= 1)
  kCompleteBipartite,  // (a >= 1, b >= 1)
  kStar,               // K_{1,k} (k >= 1), center 0
  kHypercube,          // (d in 1..16)
  kPetersen,           // ()
  kNet,                // ()
  kCaterpillar,        // (leaf count per spine vertex ...)
  kGluedCliques,       // (r >= 2, s >= 2)
  kGadget,             // (s_1 >= 1, ..., s_r >= 1), r >= 1
  kG2k,                // (k >= 3)
  kHOdd,               // (k >= 0)
  kCaterpillarT,       // ()
  kFigOrder5,          // (i in 0..4)
  kC6Chords,           // (j in 0..3)
  kCycleWithLeaves,    // (n >= 3, position ...)
  kFigJoinReducible,   // (i in 0..4)
};

struct GraphFamilySpec {
  Family family;
  std::vector<int> params = {};
};

// Canonical lowercase family name ("path", "glued_cliques", ...).
std::string_view family_name(Family family);

// Throws std::invalid_argument for an unknown name.
Family parse_family(std::string_view name);

// Builds the named graph. Throws std::invalid_argument when the parameters
// are outside the family's domain.
//
// Vertex layouts the rest of the toolkit relies on:
//   path/cycle         0..n-1 in order
//   complete_bipartite parts {0..a-1} and {a..a+b-1}
//   star               center 0, leaves 1..k
//   hypercube          vertex = bit string, neighbors differ in one bit
//   petersen           2-subsets of {0..4} in lexicographic order,
//                      adjacent iff disjoint
//   net                triangle 0,1,2; leaf 3+i on vertex i
//   caterpillar        spine 0..m-1, then the leaves of spine vertex 0,
//                      of spine vertex 1, ...
//   glued_cliques      shared vertex 0, K_r on 0..r-1, K_s on 0,r..r+s-2
//   gadget             central K_r on 0..r-1; vertex i lies in a clique
//                      X_i of order s_i + 2 whose other vertices follow in
//                      order i = 0..r-1
//   g2k                path 0..2k-1, leaf 2k on vertex 2, leaf 2k+1 on
//                      vertex 2k-3
//   h_odd              4-cycles 0-1-2-3 and 4-5-6-7, path of length 2k+1
//                      from 0 through 8..8+2k-1 to 4
//   caterpillar_t      caterpillar with leaf counts (3,2,2,3,2,3,2,2,3)
//   fig_order5         5-cycle 0..4 plus chords (see generators.cc)
//   c6_chords          6-cycle 0..5 plus the first j of 03, 14, 25
//   cycle_with_leaves  cycle 0..n-1, one leaf per listed position
//   fig_join_reducible K4, or a diamond on a=0,b=1,c=2,d=3 plus x=4
Graph generate(const GraphFamilySpec& spec);

// Convenience for literal call sites: generate({family, params}).
Graph generate(Family family, std::vector<int> params = {});

// Names of the spine vertices of caterpillar_t in spine order.
inline constexpr std::string_view kCaterpillarTSpine = "rstuvwxyz";

}  // namespace pchcrit

#endif  // PCHCRIT_GENERATORS_H_
