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

#include "pchcrit/generators.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace pchcrit {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 18> kFamilyNames = {{
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kComplete, "complete"},
    {Family::kCompleteBipartite, "complete_bipartite"},
    {Family::kStar, "star"},
    {Family::kHypercube, "hypercube"},
    {Family::kPetersen, "petersen"},
    {Family::kNet, "net"},
    {Family::kCaterpillar, "caterpillar"},
    {Family::kGluedCliques, "glued_cliques"},
    {Family::kGadget, "gadget"},
    {Family::kG2k, "g2k"},
    {Family::kHOdd, "h_odd"},
    {Family::kCaterpillarT, "caterpillar_t"},
    {Family::kFigOrder5, "fig_order5"},
    {Family::kC6Chords, "c6_chords"},
    {Family::kCycleWithLeaves, "cycle_with_leaves"},
    {Family::kFigJoinReducible, "fig_join_reducible"},
}};

[[noreturn]] void bad_params(Family family, const std::string& why) {
  throw std::invalid_argument(std::string(family_name(family)) + ": " + why);
}

void expect_count(const GraphFamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    bad_params(spec.family, "expected " + std::to_string(count) +
                                " parameter(s), got " +
                                std::to_string(spec.params.size()));
  }
}

void expect_range(Family family, int value, int lo, int hi,
                  const char* what) {
  if (value < lo || value > hi) {
    bad_params(family, std::string(what) + "=" + std::to_string(value) +
                           " outside [" + std::to_string(lo) + "," +
                           std::to_string(hi) + "]");
  }
}

constexpr int kMaxOrder = 4096;

void add_clique(std::vector<Edge>& edges, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      edges.emplace_back(vs[i], vs[j]);
    }
  }
}

void add_cycle(std::vector<Edge>& edges, int first, int n) {
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(first + i, first + (i + 1) % n);
  }
}

Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges, "P" + std::to_string(n));
}

Graph make_cycle(int n) {
  std::vector<Edge> edges;
  add_cycle(edges, 0, n);
  return Graph(n, edges, "C" + std::to_string(n));
}

Graph make_caterpillar(const std::vector<int>& leaf_counts, std::string name) {
  const int spine = static_cast<int>(leaf_counts.size());
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < spine; ++i) {
    for (int j = 0; j < leaf_counts[i]; ++j) edges.emplace_back(i, next++);
  }
  return Graph(next, edges, std::move(name));
}

std::string joined(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, known] : kFamilyNames) {
    if (known == name) return f;
  }
  throw std::invalid_argument("unknown graph family: " + std::string(name));
}

Graph generate(Family family, std::vector<int> params) {
  return generate(GraphFamilySpec{family, std::move(params)});
}

Graph generate(const GraphFamilySpec& spec) {
  const auto& p = spec.params;
  const Family f = spec.family;
  std::vector<Edge> edges;
  switch (f) {
    case Family::kPath:
      expect_count(spec, 1);
      expect_range(f, p[0], 1, kMaxOrder, "n");
      return make_path(p[0]);

    case Family::kCycle:
      expect_count(spec, 1);
      expect_range(f, p[0], 3, kMaxOrder, "n");
      return make_cycle(p[0]);

    case Family::kComplete: {
      expect_count(spec, 1);
      expect_range(f, p[0], 1, kMaxOrder, "n");
      std::vector<int> all(p[0]);
      for (int i = 0; i < p[0]; ++i) all[i] = i;
      add_clique(edges, all);
      return Graph(p[0], edges, "K" + std::to_string(p[0]));
    }

    case Family::kCompleteBipartite: {
      expect_count(spec, 2);
      expect_range(f, p[0], 1, kMaxOrder, "a");
      expect_range(f, p[1], 1, kMaxOrder - p[0], "b");
      for (int i = 0; i < p[0]; ++i) {
        for (int j = 0; j < p[1]; ++j) edges.emplace_back(i, p[0] + j);
      }
      return Graph(p[0] + p[1], edges,
                   "K" + std::to_string(p[0]) + "," + std::to_string(p[1]));
    }

    case Family::kStar:
      expect_count(spec, 1);
      expect_range(f, p[0], 1, kMaxOrder - 1, "k");
      for (int i = 1; i <= p[0]; ++i) edges.emplace_back(0, i);
      return Graph(p[0] + 1, edges, "K1," + std::to_string(p[0]));

    case Family::kHypercube: {
      expect_count(spec, 1);
      expect_range(f, p[0], 1, 12, "d");
      const int n = 1 << p[0];
      for (int v = 0; v < n; ++v) {
        for (int b = 0; b < p[0]; ++b) {
          const int w = v ^ (1 << b);
          if (v < w) edges.emplace_back(v, w);
        }
      }
      return Graph(n, edges, "Q" + std::to_string(p[0]));
    }

    case Family::kPetersen: {
      expect_count(spec, 0);
      std::vector<int> masks;
      for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) masks.push_back((1 << a) | (1 << b));
      }
      for (int i = 0; i < 10; ++i) {
        for (int j = i + 1; j < 10; ++j) {
          if ((masks[i] & masks[j]) == 0) edges.emplace_back(i, j);
        }
      }
      return Graph(10, edges, "Petersen");
    }

    case Family::kNet:
      expect_count(spec, 0);
      return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}, "net");

    case Family::kCaterpillar: {
      if (p.empty()) bad_params(f, "needs at least one spine vertex");
      int total = static_cast<int>(p.size());
      for (int c : p) {
        expect_range(f, c, 0, kMaxOrder, "leaf count");
        total += c;
      }
      if (total > kMaxOrder) bad_params(f, "graph too large");
      return make_caterpillar(p, "caterpillar(" + joined(p) + ")");
    }

    case Family::kGluedCliques: {
      expect_count(spec, 2);
      expect_range(f, p[0], 2, kMaxOrder / 2, "r");
      expect_range(f, p[1], 2, kMaxOrder / 2, "s");
      const int r = p[0];
      const int s = p[1];
      std::vector<int> first(r);
      for (int i = 0; i < r; ++i) first[i] = i;
      std::vector<int> second{0};
      for (int i = 0; i + 1 < s; ++i) second.push_back(r + i);
      add_clique(edges, first);
      add_clique(edges, second);
      return Graph(r + s - 1, edges,
                   "K" + std::to_string(r) + "." + "K" + std::to_string(s));
    }

    case Family::kGadget: {
      if (p.empty()) bad_params(f, "needs at least one clique size");
      const int r = static_cast<int>(p.size());
      int total = r;
      for (int s : p) {
        expect_range(f, s, 1, kMaxOrder, "s_i");
        total += s + 1;
      }
      if (total > kMaxOrder) bad_params(f, "graph too large");
      std::vector<int> center(r);
      for (int i = 0; i < r; ++i) center[i] = i;
      add_clique(edges, center);
      int next = r;
      for (int i = 0; i < r; ++i) {
        std::vector<int> clique{i};
        for (int j = 0; j < p[i] + 1; ++j) clique.push_back(next++);
        add_clique(edges, clique);
      }
      return Graph(total, edges, "G(" + joined(p) + ")");
    }

    case Family::kG2k: {
      expect_count(spec, 1);
      expect_range(f, p[0], 3, kMaxOrder / 2 - 1, "k");
      const int len = 2 * p[0];
      for (int i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, len);
      edges.emplace_back(len - 3, len + 1);
      return Graph(len + 2, edges, "G" + std::to_string(len));
    }

    case Family::kHOdd: {
      expect_count(spec, 1);
      expect_range(f, p[0], 0, kMaxOrder / 2 - 8, "k");
      const int inner = 2 * p[0];
      add_cycle(edges, 0, 4);
      add_cycle(edges, 4, 4);
      int prev = 0;
      for (int i = 0; i < inner; ++i) {
        edges.emplace_back(prev, 8 + i);
        prev = 8 + i;
      }
      edges.emplace_back(prev, 4);
      return Graph(8 + inner, edges, "H" + std::to_string(inner + 1));
    }

    case Family::kCaterpillarT:
      expect_count(spec, 0);
      return make_caterpillar({3, 2, 2, 3, 2, 3, 2, 2, 3}, "T");

    case Family::kFigOrder5: {
      expect_count(spec, 1);
      expect_range(f, p[0], 0, 4, "i");
      // Drawn cycle 1-2-3-4-5 becomes 0-1-2-3-4; chord sets {}, {35},
      // {35,14}, {35,13}, {35,13,24}.
      static const std::vector<Edge> kChords[5] = {
          {},
          {{2, 4}},
          {{2, 4}, {0, 3}},
          {{2, 4}, {0, 2}},
          {{2, 4}, {0, 2}, {1, 3}},
      };
      add_cycle(edges, 0, 5);
      edges.insert(edges.end(), kChords[p[0]].begin(), kChords[p[0]].end());
      return Graph(5, edges, "C5+chords#" + std::to_string(p[0]));
    }

    case Family::kC6Chords: {
      expect_count(spec, 1);
      expect_range(f, p[0], 0, 3, "j");
      add_cycle(edges, 0, 6);
      for (int i = 0; i < p[0]; ++i) edges.emplace_back(i, i + 3);
      return Graph(6, edges, "C6+" + std::to_string(p[0]) + "diag");
    }

    case Family::kCycleWithLeaves: {
      if (p.empty()) bad_params(f, "needs the cycle length");
      const int n = p[0];
      expect_range(f, n, 3, kMaxOrder / 2, "n");
      std::vector<int> positions(p.begin() + 1, p.end());
      for (int pos : positions) expect_range(f, pos, 0, n - 1, "position");
      std::vector<int> sorted = positions;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        bad_params(f, "positions must be distinct");
      }
      add_cycle(edges, 0, n);
      int next = n;
      for (int pos : positions) edges.emplace_back(pos, next++);
      return Graph(next, edges,
                   "C" + std::to_string(n) + "+leaves(" + joined(positions) +
                       ")");
    }

    case Family::kFigJoinReducible: {
      expect_count(spec, 1);
      expect_range(f, p[0], 0, 4, "i");
      const std::string name = "join_reducible#" + std::to_string(p[0]);
      if (p[0] == 0) {
        return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, name);
      }
      if (p[0] == 1) {
        // Diamond with b, c the degree-3 pair; pendant x on a.
        return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {4, 0}},
                     name);
      }
      // K4 - ab: a, b are the nonadjacent pair.
      edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      if (p[0] == 2) {
        edges.insert(edges.end(), {{4, 0}, {4, 1}});
      } else if (p[0] == 3) {
        edges.insert(edges.end(), {{4, 0}, {4, 2}});
      } else {
        edges.insert(edges.end(), {{4, 0}, {4, 1}, {4, 2}});
      }
      return Graph(5, edges, name);
    }
  }
  bad_params(f, "unhandled family");
}

}  // namespace pchcrit
