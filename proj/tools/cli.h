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

#ifndef PCHCRIT_TOOLS_CLI_H_
#define PCHCRIT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pchcrit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Graph inputs named
// "-" are read from `in`. Environment variables PCHCRIT_WORKERS and
// PCHCRIT_BUDGET supply defaults that explicit flags override.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace pchcrit

#endif  // PCHCRIT_TOOLS_CLI_H_
