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

#include "pchcrit/json_io.h"

#include <vector>

namespace pchcrit {

nlohmann::json certificate_json(const PackingSequence& seq,
                                const Coloring& coloring) {
  return {{"sequence", seq.values()}, {"colors", coloring.colors}};
}

nlohmann::json criticality_json(const CriticalityReport& report) {
  return {{"chi_rho", report.chi_rho},
          {"per_vertex", report.per_vertex},
          {"critical", report.critical},
          {"delta_set",
           std::vector<int>(report.delta_set.begin(), report.delta_set.end())}};
}

}  // namespace pchcrit
