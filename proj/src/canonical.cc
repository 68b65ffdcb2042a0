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

#include "pchcrit/canonical.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "partition.h"
#include "pchcrit/distance.h"
#include "pchcrit/graph_io.h"

namespace pchcrit {
namespace {

using internal::Partition;

// graph6 body of g under `perm` without building the relabeled graph.
std::string encode(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::string out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 12 + 1);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(perm[i], perm[j]) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

class LabelingSearch {
 public:
  LabelingSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::vector<int> run() {
    const DistanceMatrix d(g_);
    Partition cells = internal::invariant_partition(g_, d);
    search(std::move(cells));
    return best_perm_;
  }

 private:
  void search(Partition cells) {
    internal::refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      if (++leaves_ > budget_) {
        throw std::runtime_error("canonical labeling: leaf budget exceeded");
      }
      std::vector<int> perm;
      perm.reserve(g_.order());
      for (const auto& c : cells) perm.push_back(c.front());
      std::string code = encode(g_, perm);
      if (best_perm_.empty() || code < best_code_) {
        best_code_ = std::move(code);
        best_perm_ = std::move(perm);
      }
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int> members = cells[t];
    for (int v : members) {
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + t);
      child.push_back({v});
      std::vector<int> rest;
      for (int u : members) {
        if (u != v) rest.push_back(u);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + t + 1, cells.end());
      search(std::move(child));
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t leaves_ = 0;
  std::string best_code_;
  std::vector<int> best_perm_;
};

std::string size_prefix(int n) {
  // Same header bytes format_graph6 writes.
  return format_graph6(Graph(n, std::span<const Edge>{})).substr(
      0, n <= 62 ? 1 : 4);
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, std::uint64_t leaf_budget) {
  return LabelingSearch(g, leaf_budget).run();
}

CanonicalForm canonical_form(const Graph& g, std::uint64_t leaf_budget) {
  const auto perm = canonical_labeling(g, leaf_budget);
  return {g.order(), size_prefix(g.order()) + encode(g, perm)};
}

CanonicalForm canonical_form_exhaustive(const Graph& g) {
  if (g.order() > 10) {
    throw std::invalid_argument("exhaustive canonical form supports n <= 10");
  }
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = encode(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::string code = encode(g, perm);
    if (code < best) best = std::move(code);
  }
  return {g.order(), size_prefix(g.order()) + best};
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<int> position(g.order());
  for (int i = 0; i < g.order(); ++i) position[perm[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return Graph(g.order(), edges, g.name());
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace pchcrit
