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

#ifndef PCHCRIT_GRAPH_H_
#define PCHCRIT_GRAPH_H_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pchcrit {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is kept twice: as packed bitrows (one row of words per vertex)
// for set operations, and as sorted neighbor lists for iteration. Both are
// built once in the constructor.
class Graph {
 public:
  // Throws std::invalid_argument on n < 1, an out-of-range endpoint, or a
  // loop. Duplicate edges (in either orientation) collapse.
  Graph(int n, std::span<const Edge> edges, std::string name = {});
  Graph(int n, std::initializer_list<Edge> edges, std::string name = {})
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()),
              std::move(name)) {}

  int order() const { return n_; }
  int size() const { return num_edges_; }
  const std::string& name() const { return name_; }
  Graph renamed(std::string name) const;

  bool has_edge(int u, int v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u;
  }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }

  // Bitrow of N(v); bit u of word u/64 is set iff uv is an edge.
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }
  int words_per_row() const { return words_; }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  // Equality ignores the name.
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  std::size_t row_offset(int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

  int n_ = 0;
  int words_ = 0;
  int num_edges_ = 0;
  std::string name_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> neighbors_;
};

// Same as the Graph constructor; the free-function spelling reads better at
// call sites that build from computed edge lists.
Graph build_graph(int n, std::span<const Edge> edges, std::string name = {});

// Result of taking an induced subgraph: `to_parent[i]` is the vertex of the
// parent graph that became vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;
};

// Induced subgraph on `keep` (which must be distinct, in range, nonempty).
// Vertices are renumbered in the order given.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep);

// G - v with the remaining vertices renumbered order-preservingly.
// Throws std::out_of_range if v is not a vertex and std::invalid_argument
// if G has a single vertex.
Graph delete_vertex(const Graph& g, int v);
InducedSubgraph delete_vertex_mapped(const Graph& g, int v);

// G - F. Throws std::invalid_argument if some edge of F is not in G.
Graph delete_edges(const Graph& g, std::span<const Edge> removed);

// G + uv for a non-edge uv.
Graph add_edge(const Graph& g, int u, int v);

// Vertex (g, h) maps to g * n(H) + h.
Graph cartesian_product(const Graph& g, const Graph& h);

// Components in order of their smallest vertex; each component keeps the
// relative vertex order of the parent.
std::vector<InducedSubgraph> connected_components(const Graph& g);

bool is_tree(const Graph& g);

// Join of K2 and an independent set (the independent set may be empty).
bool is_k2_join_independent(const Graph& g);

}  // namespace pchcrit

#endif  // PCHCRIT_GRAPH_H_
