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

#ifndef PCHCRIT_DISTANCE_H_
#define PCHCRIT_DISTANCE_H_

#include <limits>
#include <stdexcept>
#include <vector>

#include "pchcrit/graph.h"

namespace pchcrit {

// Raised when an operation needs a connected graph.
class DisconnectedGraphError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// All-pairs hop counts. Unreachable pairs hold kInfinite, which compares
// greater than every finite distance.
class DistanceMatrix {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  int operator()(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool connected() const { return connected_; }

  // Largest finite entry; throws DisconnectedGraphError when some pair is
  // unreachable.
  int diameter() const;
  int eccentricity(int v) const;

 private:
  int n_;
  bool connected_ = true;
  std::vector<int> d_;
};

inline DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }
int diameter(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace pchcrit

#endif  // PCHCRIT_DISTANCE_H_
