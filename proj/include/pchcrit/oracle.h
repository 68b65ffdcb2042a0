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

// Brute-force packing chromatic number, kept free of any search logic so it
// can cross-check the backtracking solver on small graphs.

#ifndef PCHCRIT_ORACLE_H_
#define PCHCRIT_ORACLE_H_

#include <cstdint>

#include "pchcrit/graph.h"

namespace pchcrit {

inline constexpr int kOracleMaxOrder = 9;
inline constexpr std::uint64_t kOracleDefaultBudget = 50'000'000;

// Tries k = 1, 2, ... and enumerates all k^n assignments for each k. Each
// assignment is checked pairwise against Floyd-Warshall distances (not the
// BFS matrix used elsewhere); the first valid one is also confirmed with
// verify_packing_coloring.
//
// Throws std::invalid_argument when n > kOracleMaxOrder and
// BudgetExhaustedError when some k^n exceeds `max_assignments`.
int oracle_chi_rho(const Graph& g,
                   std::uint64_t max_assignments = kOracleDefaultBudget);

}  // namespace pchcrit

#endif  // PCHCRIT_ORACLE_H_
