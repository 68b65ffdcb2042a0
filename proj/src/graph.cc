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

#include "pchcrit/graph.h"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace pchcrit {

Graph::Graph(int n, std::span<const Edge> edges, std::string name)
    : n_(n), words_((n + 63) / 64), name_(std::move(name)) {
  if (n < 1) {
    throw std::invalid_argument("graph must have at least one vertex");
  }
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") with n=" + std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }
    bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }
  neighbors_.resize(n);
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[row_offset(v) + w];
      while (word != 0) {
        neighbors_[v].push_back(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
    degree_sum += static_cast<int>(neighbors_[v].size());
  }
  num_edges_ = degree_sum / 2;
}

Graph Graph::renamed(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges, std::string name) {
  return Graph(n, edges, std::move(name));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
  if (keep.empty()) {
    throw std::invalid_argument("induced subgraph needs at least one vertex");
  }
  std::vector<int> to_child(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const int v = keep[i];
    if (v < 0 || v >= g.order()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    if (to_child[v] != -1) {
      throw std::invalid_argument("duplicate vertex " + std::to_string(v));
    }
    to_child[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (to_child[u] >= 0 && to_child[v] >= 0) {
      edges.emplace_back(to_child[u], to_child[v]);
    }
  }
  return {Graph(static_cast<int>(keep.size()), edges),
          std::vector<int>(keep.begin(), keep.end())};
}

InducedSubgraph delete_vertex_mapped(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  if (g.order() == 1) {
    throw std::invalid_argument("cannot delete the only vertex");
  }
  std::vector<int> keep;
  keep.reserve(g.order() - 1);
  for (int u = 0; u < g.order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

Graph delete_vertex(const Graph& g, int v) {
  return delete_vertex_mapped(g, v).graph;
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop;
  for (auto [u, v] : removed) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() ||
        u == v || !g.has_edge(u, v)) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") is not in the graph");
    }
    drop.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(g.order(), kept, g.name());
}

Graph add_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) {
    throw std::invalid_argument("invalid edge endpoints");
  }
  if (g.has_edge(u, v)) {
    throw std::invalid_argument("edge already present");
  }
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.order(), edges, g.name());
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int nh = h.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.size()) * nh +
                static_cast<std::size_t>(h.size()) * g.order());
  for (const auto& [a, b] : g.edges()) {
    for (int y = 0; y < nh; ++y) edges.emplace_back(a * nh + y, b * nh + y);
  }
  for (int x = 0; x < g.order(); ++x) {
    for (const auto& [a, b] : h.edges()) {
      edges.emplace_back(x * nh + a, x * nh + b);
    }
  }
  std::string name;
  if (!g.name().empty() && !h.name().empty()) {
    name = g.name() + "x" + h.name();
  }
  return Graph(g.order() * nh, edges, std::move(name));
}

std::vector<InducedSubgraph> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::queue<int> queue;
    queue.push(s);
    comp[s] = id;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int w : g.neighbors(u)) {
        if (comp[w] == -1) {
          comp[w] = id;
          queue.push(w);
        }
      }
    }
  }
  for (int v = 0; v < g.order(); ++v) members[comp[v]].push_back(v);
  std::vector<InducedSubgraph> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(induced_subgraph(g, m));
  return out;
}

bool is_tree(const Graph& g) {
  return g.size() == g.order() - 1 && connected_components(g).size() == 1;
}

bool is_k2_join_independent(const Graph& g) {
  const int n = g.order();
  if (n < 2) return false;
  // Two universal vertices cover 2n - 3 edges; any further edge would lie
  // inside the remaining set.
  int universal = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) ++universal;
  }
  return universal >= 2 && g.size() == 2 * n - 3;
}

}  // namespace pchcrit
