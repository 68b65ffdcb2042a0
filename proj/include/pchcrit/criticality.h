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

#ifndef PCHCRIT_CRITICALITY_H_
#define PCHCRIT_CRITICALITY_H_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "pchcrit/automorphism.h"
#include "pchcrit/graph.h"
#include "pchcrit/solver.h"

namespace pchcrit {

struct CriticalityOptions {
  SolverOptions solver;
  // Threads for the independent vertex-deleted solves.
  int workers = 1;
  // Solve one deleted vertex per automorphism orbit. Falls back to every
  // vertex when the orbit search runs out of budget.
  bool use_orbits = true;
  std::uint64_t automorphism_budget = kAutomorphismNodeBudget;
  // For disconnected input, still compute per_vertex and delta_set.
  bool disconnected_details = false;
};

struct CriticalityReport {
  int chi_rho = 0;
  // chi_rho(G - x) for each vertex x; chi_rho of the empty graph is 0.
  std::vector<int> per_vertex;
  bool critical = false;
  // {chi_rho - per_vertex[x]}.
  std::set<int> delta_set;
  bool used_orbit_reduction = false;
};

// Exact chi_rho of G and of every G - x. A disconnected graph is reported
// non-critical; its per-vertex data is left empty unless requested.
// Throws BudgetExhaustedError.
CriticalityReport analyze_criticality(const Graph& g,
                                      const CriticalityOptions& options = {});

// chi_rho(G) == k and chi_rho(G - x) < k for every x. Asks only the
// decision questions "is G (k-1)-colorable", "is G k-colorable" and "is
// G - x (k-1)-colorable", stopping at the first vertex that fails.
// Throws BudgetExhaustedError.
bool check_k_critical(const Graph& g, int k,
                      const CriticalityOptions& options = {});

struct CriticalTree {
  Graph tree;
  std::vector<int> to_original;
};

// Shrinks a tree T with chi_rho(T) >= k to a k-critical subtree: first
// delete leaves (deepest from vertex 0 first, ties by lower index) while
// chi_rho exceeds k, which lowers chi_rho by at most one per step; then,
// while some vertex x (lowest index first) has chi_rho(T - x) = k, move to
// the first component of T - x that still needs k colors. The result is
// checked with check_k_critical before it is returned.
// Throws std::invalid_argument if T is not a tree or chi_rho(T) < k.
CriticalTree descend_to_critical_tree(const Graph& tree, int k,
                                      const CriticalityOptions& options = {});

// Lowest x such that G - x is the join of K_2 and an edgeless graph.
std::optional<int> join_reducing_vertex(const Graph& g);

}  // namespace pchcrit

#endif  // PCHCRIT_CRITICALITY_H_
