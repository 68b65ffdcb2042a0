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

// Registry of named, machine-checked claims about packing colorings, each
// a deterministic predicate over solver and criticality results.

#ifndef PCHCRIT_HARNESS_H_
#define PCHCRIT_HARNESS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace pchcrit {

enum class ClaimStatus { kPass, kFail, kSkippedBudget };

const char* claim_status_name(ClaimStatus s);  // "pass", "fail", "skipped-budget"

enum class SuiteFilter { kFast, kSlow, kAll };

// Throws std::invalid_argument for anything but "fast", "slow", "all".
SuiteFilter parse_suite_filter(std::string_view name);

struct ClaimInfo {
  std::string id;
  std::string anchor;
  bool slow = false;
};

struct HarnessOptions {
  // Claims run concurrently on this many threads in run_suite; a single
  // claim uses them for its vertex-deleted solves.
  int workers = 1;
  // Per-decision solver node budget, 0 for unlimited. Running out marks
  // the claim skipped-budget.
  std::uint64_t node_budget = 0;
};

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::kFail;
  std::string anchor;
  nlohmann::json measured;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  std::string version;
  double wall_seconds = 0;
};

// All claims in registration order.
const std::vector<ClaimInfo>& claim_registry();

// Throws std::invalid_argument for an unknown id.
ClaimResult run_claim(std::string_view id, const HarnessOptions& options = {});

// Runs the claims matching the filter; results keep registry order.
VerificationReport run_suite(SuiteFilter filter,
                             const HarnessOptions& options = {});

nlohmann::json claim_json(const ClaimResult& result);

// {"claims":[...], "summary":{"pass","fail","skipped"}, "version",
//  "wall_seconds"}.
nlohmann::json report_json(const VerificationReport& report);

}  // namespace pchcrit

#endif  // PCHCRIT_HARNESS_H_
