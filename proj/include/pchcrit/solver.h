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

// Exact S-packing colorability and packing chromatic number.
//
// The decision procedure is a complete backtracking search, run separately
// on each connected component:
//
//  * Colors whose distance bound reaches the component's diameter can hold
//    at most one vertex each and are otherwise interchangeable, so they are
//    pooled: the search only decides which vertices take "some large color"
//    and how many such vertices remain available.
//  * The remaining colors are tracked as per-vertex domains. Placing color
//    i on v removes i from every vertex within distance s_i of v (forward
//    checking over the distance matrix). A vertex whose domain empties must
//    go to the pool; the branch dies once those outnumber the pool.
//  * The next vertex is the one with the fewest options, ties broken by
//    higher degree and then lower index.
//
// The search is deterministic. A node budget turns an unfinished search into
// Verdict::kBudgetExhausted; it is never reported as infeasible.

#ifndef PCHCRIT_SOLVER_H_
#define PCHCRIT_SOLVER_H_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "pchcrit/graph.h"
#include "pchcrit/packing.h"

namespace pchcrit {

struct SolverOptions {
  // Search nodes allowed per decision; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

enum class Verdict { kFeasible, kInfeasible, kBudgetExhausted };

const char* verdict_name(Verdict v);

struct FeasibilityResult {
  Verdict verdict = Verdict::kInfeasible;
  // Present iff verdict == kFeasible; always passes verification.
  std::optional<Coloring> certificate;
  std::uint64_t nodes = 0;
};

// Thrown by the optimizing entry points when a decision runs out of budget.
class BudgetExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FeasibilityResult s_packing_decide(const Graph& g, const PackingSequence& seq,
                                   const SolverOptions& options = {});

// Is chi_rho(G) <= k?
FeasibilityResult decide_packing_colorable(const Graph& g, int k,
                                           const SolverOptions& options = {});

struct ChiResult {
  int chi = 0;
  Coloring certificate;  // a (1, ..., chi)-packing coloring
  std::uint64_t nodes = 0;
};

// Components are solved separately and chi_rho is their maximum. Within a
// component k ascends from the trivial lower bound, so the last infeasible
// decision proves optimality. Throws BudgetExhaustedError.
ChiResult packing_chromatic_number(const Graph& g,
                                   const SolverOptions& options = {});

}  // namespace pchcrit

#endif  // PCHCRIT_SOLVER_H_
