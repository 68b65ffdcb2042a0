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

// Ordered vertex partitions shared by canonical labeling and automorphism
// search. Every step depends only on isomorphism-invariant data, never on
// vertex numbering, so isomorphic graphs refine to corresponding partitions.

#ifndef PCHCRIT_SRC_PARTITION_H_
#define PCHCRIT_SRC_PARTITION_H_

#include <vector>

#include "pchcrit/distance.h"
#include "pchcrit/graph.h"

namespace pchcrit::internal {

using Partition = std::vector<std::vector<int>>;

// Cells ordered by (degree, number of vertices at each distance).
Partition invariant_partition(const Graph& g, const DistanceMatrix& d);

// Refines to the coarsest equitable partition below `cells`: afterwards
// every vertex of a cell has the same number of neighbors in each cell.
// Split cells are replaced in place by their parts, ordered by neighbor
// count.
void refine(const Graph& g, Partition& cells);

// Cell index of each vertex.
std::vector<int> cell_of(const Partition& cells, int n);

}  // namespace pchcrit::internal

#endif  // PCHCRIT_SRC_PARTITION_H_
