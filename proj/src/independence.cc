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

#include "pchcrit/independence.h"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "pchcrit/distance.h"

namespace pchcrit {
namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w; });
}

int count(const Bits& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

int first(const Bits& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) return static_cast<int>(i * 64) + std::countr_zero(b[i]);
  }
  return -1;
}

void reset(Bits& b, int v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

int count_and(const Bits& a, std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const Graph& g) : g_(g), w_(g.words_per_row()) {}

  std::vector<int> solve() {
    best_ = greedy();
    Bits all(w_, 0);
    for (int v = 0; v < g_.order(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<int> current;
    expand(all, current);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Repeatedly take a vertex of minimum remaining degree.
  std::vector<int> greedy() const {
    Bits left(w_, 0);
    for (int v = 0; v < g_.order(); ++v) left[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<int> chosen;
    while (any(left)) {
      int pick = -1;
      int pick_degree = 0;
      for (int v = 0; v < g_.order(); ++v) {
        if (!((left[v >> 6] >> (v & 63)) & 1)) continue;
        const int d = count_and(left, g_.row(v));
        if (pick < 0 || d < pick_degree) {
          pick = v;
          pick_degree = d;
        }
      }
      chosen.push_back(pick);
      reset(left, pick);
      const auto row = g_.row(pick);
      for (int i = 0; i < w_; ++i) left[i] &= ~row[i];
    }
    return chosen;
  }

  // Number of cliques in a greedy clique cover of `p`; each clique holds at
  // most one vertex of an independent set.
  int clique_cover(Bits p) const {
    int cliques = 0;
    while (any(p)) {
      ++cliques;
      const int v = first(p);
      reset(p, v);
      Bits common(g_.row(v).begin(), g_.row(v).end());
      for (int i = 0; i < w_; ++i) common[i] &= p[i];
      while (any(common)) {
        const int u = first(common);
        reset(p, u);
        reset(common, u);
        const auto row = g_.row(u);
        for (int i = 0; i < w_; ++i) common[i] &= row[i];
      }
    }
    return cliques;
  }

  void expand(const Bits& p, std::vector<int>& current) {
    if (!any(p)) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (static_cast<int>(current.size()) + count(p) <=
        static_cast<int>(best_.size())) {
      return;
    }
    if (static_cast<int>(current.size()) + clique_cover(p) <=
        static_cast<int>(best_.size())) {
      return;
    }
    // A vertex with at most one neighbor in p lies in some maximum
    // independent set of p, so it is taken without branching. Otherwise
    // branch on a vertex of maximum degree.
    int branch = -1;
    int branch_degree = -1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::uint64_t word = p[i];
      while (word) {
        const int v = static_cast<int>(i * 64) + std::countr_zero(word);
        word &= word - 1;
        const int d = count_and(p, g_.row(v));
        if (d <= 1) {
          branch = v;
          branch_degree = -2;
          break;
        }
        if (d > branch_degree) {
          branch = v;
          branch_degree = d;
        }
      }
      if (branch_degree == -2) break;
    }
    const auto row = g_.row(branch);
    Bits with = p;
    reset(with, branch);
    for (int i = 0; i < w_; ++i) with[i] &= ~row[i];
    current.push_back(branch);
    expand(with, current);
    current.pop_back();
    if (branch_degree == -2) return;
    Bits without = p;
    reset(without, branch);
    expand(without, current);
  }

  const Graph& g_;
  int w_;
  std::vector<int> best_;
};

}  // namespace

std::vector<int> maximum_independent_set(const Graph& g) {
  return MaxIndependentSet(g).solve();
}

int independence_number(const Graph& g) {
  return static_cast<int>(maximum_independent_set(g).size());
}

int cartesian_lower_bound(int chi_first, int order_second,
                          int product_diameter) {
  return (chi_first + 1) * order_second -
         product_diameter * (order_second - 1) - 1;
}

ChiBounds chi_rho_bounds(const Graph& g, std::optional<ProductFactors> factors) {
  const DistanceMatrix d(g);
  if (!d.connected()) {
    throw DisconnectedGraphError("chi_rho bounds need a connected graph");
  }
  ChiBounds bounds;
  bounds.lower = g.size() > 0 ? 2 : 1;
  bounds.upper = g.order() - independence_number(g) + 1;
  if (factors) {
    bounds.product_lower = cartesian_lower_bound(
        factors->chi_first, factors->order_second, d.diameter());
    bounds.lower = std::max(bounds.lower, *bounds.product_lower);
  }
  return bounds;
}

}  // namespace pchcrit
