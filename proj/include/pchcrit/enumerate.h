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

#ifndef PCHCRIT_ENUMERATE_H_
#define PCHCRIT_ENUMERATE_H_

#include <vector>

#include "pchcrit/graph.h"

namespace pchcrit {

inline constexpr int kEnumerateMaxOrder = 7;

// One canonically labeled representative per isomorphism class of connected
// graphs on n vertices, sorted by canonical form. Built by attaching a new
// vertex, with every nonempty neighborhood, to each class on n - 1
// vertices: every connected graph has a vertex whose removal keeps it
// connected, so nothing is missed. Throws std::invalid_argument unless
// 1 <= n <= kEnumerateMaxOrder.
std::vector<Graph> enumerate_connected(int n);

}  // namespace pchcrit

#endif  // PCHCRIT_ENUMERATE_H_
