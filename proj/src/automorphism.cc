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

#include "pchcrit/automorphism.h"

#include <algorithm>
#include <numeric>

#include "partition.h"
#include "pchcrit/distance.h"

namespace pchcrit {
namespace {

using internal::Partition;

bool same_shape(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
  }
  return true;
}

// Moves v out of cell c into a singleton placed just before the rest.
Partition individualize(const Partition& cells, std::size_t c, int v) {
  Partition out;
  out.reserve(cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != c) {
      out.push_back(cells[i]);
      continue;
    }
    out.push_back({v});
    std::vector<int> rest;
    for (int u : cells[i]) {
      if (u != v) rest.push_back(u);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

std::size_t find_cell(const Partition& cells, int v) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (std::find(cells[i].begin(), cells[i].end(), v) != cells[i].end()) {
      return i;
    }
  }
  return cells.size();
}

class PairSearch {
 public:
  PairSearch(const Graph& g, std::uint64_t& nodes, std::uint64_t budget)
      : g_(g), nodes_(nodes), budget_(budget) {}

  std::optional<std::vector<int>> run(Partition left, Partition right) {
    if (search(std::move(left), std::move(right))) return found_;
    return std::nullopt;
  }

 private:
  bool search(Partition left, Partition right) {
    if (budget_ != 0 && ++nodes_ > budget_) {
      throw AutomorphismBudgetError("automorphism search: node budget exceeded");
    }
    internal::refine(g_, left);
    internal::refine(g_, right);
    if (!same_shape(left, right)) return false;
    auto target = std::find_if(left.begin(), left.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == left.end()) {
      std::vector<int> sigma(g_.order());
      for (std::size_t i = 0; i < left.size(); ++i) {
        sigma[left[i].front()] = right[i].front();
      }
      if (!is_automorphism(g_, sigma)) return false;
      found_ = std::move(sigma);
      return true;
    }
    const std::size_t c = static_cast<std::size_t>(target - left.begin());
    const int v = left[c].front();
    Partition next_left = individualize(left, c, v);
    for (int w : right[c]) {
      if (search(next_left, individualize(right, c, w))) return true;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<int> found_;
};

std::optional<std::vector<int>> find_with_counter(const Graph& g,
                                                  const Partition& start,
                                                  int from, int to,
                                                  std::uint64_t& nodes,
                                                  std::uint64_t budget) {
  const std::size_t cf = find_cell(start, from);
  const std::size_t ct = find_cell(start, to);
  if (cf != ct) return std::nullopt;
  return PairSearch(g, nodes, budget)
      .run(individualize(start, cf, from), individualize(start, ct, to));
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  // The smaller vertex stays root, so roots are orbit minima.
  if (a < b) {
    parent[b] = a;
  } else if (b < a) {
    parent[a] = b;
  }
}

std::vector<int> orbits_impl(const Graph& g, std::uint64_t budget,
                             bool first_vertex_only) {
  const int n = g.order();
  const DistanceMatrix d(g);
  const Partition start = internal::invariant_partition(g, d);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::uint64_t nodes = 0;
  for (const auto& cell : start) {
    for (std::size_t i = 0; i < cell.size(); ++i) {
      const int v = cell[i];
      if (find_root(parent, v) != v) continue;
      for (std::size_t j = i + 1; j < cell.size(); ++j) {
        const int w = cell[j];
        if (find_root(parent, w) == v) continue;
        auto sigma = find_with_counter(g, start, v, w, nodes, budget);
        if (!sigma) continue;
        for (int x = 0; x < n; ++x) unite(parent, x, (*sigma)[x]);
      }
      if (first_vertex_only) break;
    }
    if (first_vertex_only) break;
  }
  std::vector<int> orbit(n);
  for (int v = 0; v < n; ++v) orbit[v] = find_root(parent, v);
  return orbit;
}

}  // namespace

bool is_automorphism(const Graph& g, const std::vector<int>& sigma) {
  const int n = g.order();
  if (static_cast<int>(sigma.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int x : sigma) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(sigma[u], sigma[v])) return false;
  }
  return true;
}

std::optional<std::vector<int>> find_automorphism(const Graph& g, int from,
                                                  int to,
                                                  std::uint64_t node_budget) {
  if (from < 0 || from >= g.order() || to < 0 || to >= g.order()) {
    throw std::out_of_range("find_automorphism: vertex out of range");
  }
  const DistanceMatrix d(g);
  const Partition start = internal::invariant_partition(g, d);
  std::uint64_t nodes = 0;
  return find_with_counter(g, start, from, to, nodes, node_budget);
}

std::vector<int> vertex_orbits(const Graph& g, std::uint64_t node_budget) {
  return orbits_impl(g, node_budget, false);
}

bool is_vertex_transitive(const Graph& g, std::uint64_t node_budget) {
  const DistanceMatrix d(g);
  if (internal::invariant_partition(g, d).size() > 1) return false;
  const auto orbit = orbits_impl(g, node_budget, true);
  return std::all_of(orbit.begin(), orbit.end(),
                     [](int o) { return o == 0; });
}

}  // namespace pchcrit
