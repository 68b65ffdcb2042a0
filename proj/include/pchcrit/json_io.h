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

#ifndef PCHCRIT_JSON_IO_H_
#define PCHCRIT_JSON_IO_H_

#include "json.hpp"
#include "pchcrit/criticality.h"
#include "pchcrit/packing.h"

namespace pchcrit {

// {"sequence":[s_1,...], "colors":[c(0),...]}, colors 1-based.
nlohmann::json certificate_json(const PackingSequence& seq,
                                const Coloring& coloring);

// {"chi_rho":k, "per_vertex":[...], "critical":bool, "delta_set":[...]}.
nlohmann::json criticality_json(const CriticalityReport& report);

}  // namespace pchcrit

#endif  // PCHCRIT_JSON_IO_H_
