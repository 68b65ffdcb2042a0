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

#ifndef PCHCRIT_PACKING_H_
#define PCHCRIT_PACKING_H_

#include <string>
#include <vector>

#include "pchcrit/distance.h"
#include "pchcrit/graph.h"

namespace pchcrit {

// Nondecreasing sequence (s_1, ..., s_k) of positive integers. Color i
// (1-based) must be an s_i-packing: two vertices of color i are at distance
// greater than s_i.
class PackingSequence {
 public:
  // Throws std::invalid_argument unless nonempty, positive, nondecreasing.
  explicit PackingSequence(std::vector<int> values);

  // (1, 2, ..., k): the sequence behind the packing chromatic number.
  static PackingSequence standard(int k);

  int length() const { return static_cast<int>(values_.size()); }
  // Distance bound of color `color` (1-based).
  int bound(int color) const { return values_[color - 1]; }
  const std::vector<int>& values() const { return values_; }

  std::string to_string() const;
  bool operator==(const PackingSequence&) const = default;

 private:
  std::vector<int> values_;
};

// Vertex -> color in 1..k. A zero entry marks an uncolored vertex, which
// only the partial verifier accepts.
struct Coloring {
  std::vector<int> colors;

  int max_color() const;
  bool operator==(const Coloring&) const = default;
};

// True iff every color class c^{-1}(i) is an s_i-packing. Throws
// std::invalid_argument when the coloring has the wrong length, leaves a
// vertex uncolored, or uses a color outside 1..|S|.
bool verify_packing_coloring(const Graph& g, const PackingSequence& seq,
                             const Coloring& c);
bool verify_packing_coloring(const DistanceMatrix& d,
                             const PackingSequence& seq, const Coloring& c);

// As above but zero entries are skipped.
bool verify_partial_packing_coloring(const Graph& g,
                                     const PackingSequence& seq,
                                     const Coloring& c);

// Carries a coloring of a subgraph back to the parent's numbering; vertices
// outside the subgraph get 0.
Coloring lift_coloring(const Coloring& sub, const std::vector<int>& to_parent,
                       int parent_order);

}  // namespace pchcrit

#endif  // PCHCRIT_PACKING_H_
