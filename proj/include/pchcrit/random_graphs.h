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

// Seeded random instances for property checks.

#ifndef PCHCRIT_RANDOM_GRAPHS_H_
#define PCHCRIT_RANDOM_GRAPHS_H_

#include <random>

#include "pchcrit/graph.h"

namespace pchcrit {

using Rng = std::mt19937_64;

// G(n, p): each pair independently with probability p.
Graph random_graph(int n, double p, Rng& rng);

// G(n, p) resampled until connected.
Graph random_connected_graph(int n, double p, Rng& rng);

// Uniform labeled tree from a random Pruefer sequence.
Graph random_tree(int n, Rng& rng);

}  // namespace pchcrit

#endif  // PCHCRIT_RANDOM_GRAPHS_H_
