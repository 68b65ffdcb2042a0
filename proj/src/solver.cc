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

#include "pchcrit/solver.h"

#include <algorithm>
#include <bit>
#include <climits>
#include <vector>

#include "pchcrit/distance.h"

namespace pchcrit {
namespace {

constexpr int kMaxSmallColors = 64;

// Backtracking search on one connected component.
class ComponentSearch {
 public:
  ComponentSearch(const Graph& g, const DistanceMatrix& d,
                  const PackingSequence& seq, std::uint64_t budget)
      : n_(g.order()), budget_(budget) {
    const int diam = d.diameter();
    small_ = 0;
    while (small_ < seq.length() && seq.values()[small_] < diam) ++small_;
    if (small_ > kMaxSmallColors) {
      throw std::invalid_argument(
          "more than 64 colors with bound below the diameter");
    }
    pool_left_ = seq.length() - small_;

    // One ball list per distinct bound among the small colors.
    std::vector<int> radii;
    for (int c = 0; c < small_; ++c) {
      const int r = seq.values()[c];
      if (radii.empty() || radii.back() != r) radii.push_back(r);
      ball_of_color_.push_back(static_cast<int>(radii.size()) - 1);
    }
    ball_start_.resize(radii.size());
    for (std::size_t b = 0; b < radii.size(); ++b) {
      auto& start = ball_start_[b];
      start.reserve(n_ + 1);
      for (int v = 0; v < n_; ++v) {
        start.push_back(static_cast<int>(ball_data_.size()));
        for (int u = 0; u < n_; ++u) {
          if (u != v && d(u, v) <= radii[b]) ball_data_.push_back(u);
        }
      }
      start.push_back(static_cast<int>(ball_data_.size()));
    }

    const std::uint64_t all =
        small_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << small_) - 1;
    domain_.assign(n_, all);
    color_.assign(n_, -1);
    degree_.resize(n_);
    for (int v = 0; v < n_; ++v) degree_[v] = g.degree(v);
    empty_count_ = small_ == 0 ? n_ : 0;
  }

  Verdict run() {
    if (empty_count_ > pool_left_) return Verdict::kInfeasible;
    if (search()) return Verdict::kFeasible;
    return exhausted_ ? Verdict::kBudgetExhausted : Verdict::kInfeasible;
  }

  // 1-based colors; pooled vertices get the large colors in vertex order.
  std::vector<int> colors() const {
    std::vector<int> out(n_);
    int next_large = small_ + 1;
    for (int v = 0; v < n_; ++v) {
      out[v] = color_[v] < small_ ? color_[v] + 1 : next_large++;
    }
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  int select() const {
    int best = -1;
    int best_size = INT_MAX;
    const int pool_option = pool_left_ > 0 ? 1 : 0;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      const int size = std::popcount(domain_[v]) + pool_option;
      if (size < best_size ||
          (size == best_size && degree_[v] > degree_[best])) {
        best = v;
        best_size = size;
      }
    }
    return best;
  }

  bool search() {
    if (budget_ != 0 && nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    const int v = select();
    if (v < 0) return true;

    std::uint64_t options = domain_[v];
    while (options != 0) {
      const int c = std::countr_zero(options);
      options &= options - 1;
      const std::uint64_t bit = std::uint64_t{1} << c;
      const std::size_t mark = trail_.size();
      color_[v] = c;
      const auto& start = ball_start_[ball_of_color_[c]];
      for (int i = start[v]; i < start[v + 1]; ++i) {
        const int u = ball_data_[i];
        if (color_[u] < 0 && (domain_[u] & bit)) {
          domain_[u] &= ~bit;
          trail_.push_back(u);
          if (domain_[u] == 0) ++empty_count_;
        }
      }
      if (empty_count_ <= pool_left_ && search()) return true;
      while (trail_.size() > mark) {
        const int u = trail_.back();
        trail_.pop_back();
        if (domain_[u] == 0) --empty_count_;
        domain_[u] |= bit;
      }
      color_[v] = -1;
      if (exhausted_) return false;
    }

    if (pool_left_ > 0) {
      color_[v] = small_;
      --pool_left_;
      const bool was_empty = domain_[v] == 0;
      if (was_empty) --empty_count_;
      if (empty_count_ <= pool_left_ && search()) return true;
      if (was_empty) ++empty_count_;
      ++pool_left_;
      color_[v] = -1;
    }
    return false;
  }

  int n_;
  int small_ = 0;
  int pool_left_ = 0;
  int empty_count_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;

  std::vector<int> ball_of_color_;
  std::vector<std::vector<int>> ball_start_;
  std::vector<int> ball_data_;

  std::vector<std::uint64_t> domain_;
  std::vector<int> color_;
  std::vector<int> degree_;
  std::vector<int> trail_;
};

std::uint64_t remaining(std::uint64_t budget, std::uint64_t used) {
  if (budget == 0) return 0;
  return used >= budget ? 1 : budget - used;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kFeasible:
      return "feasible";
    case Verdict::kInfeasible:
      return "infeasible";
    case Verdict::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

FeasibilityResult s_packing_decide(const Graph& g, const PackingSequence& seq,
                                   const SolverOptions& options) {
  FeasibilityResult result;
  Coloring coloring{std::vector<int>(g.order(), 0)};
  for (const InducedSubgraph& comp : connected_components(g)) {
    const DistanceMatrix d(comp.graph);
    ComponentSearch search(comp.graph, d, seq,
                           remaining(options.node_budget, result.nodes));
    const Verdict verdict = search.run();
    result.nodes += search.nodes();
    if (verdict != Verdict::kFeasible) {
      result.verdict = verdict;
      return result;
    }
    const auto colors = search.colors();
    for (std::size_t i = 0; i < colors.size(); ++i) {
      coloring.colors[comp.to_parent[i]] = colors[i];
    }
  }
  result.verdict = Verdict::kFeasible;
  result.certificate = std::move(coloring);
  return result;
}

FeasibilityResult decide_packing_colorable(const Graph& g, int k,
                                           const SolverOptions& options) {
  return s_packing_decide(g, PackingSequence::standard(k), options);
}

ChiResult packing_chromatic_number(const Graph& g,
                                   const SolverOptions& options) {
  ChiResult result;
  result.certificate.colors.assign(g.order(), 0);
  for (const InducedSubgraph& comp : connected_components(g)) {
    const DistanceMatrix d(comp.graph);
    for (int k = comp.graph.size() > 0 ? 2 : 1;; ++k) {
      ComponentSearch search(comp.graph, d, PackingSequence::standard(k),
                             options.node_budget);
      const Verdict verdict = search.run();
      result.nodes += search.nodes();
      if (verdict == Verdict::kBudgetExhausted) {
        throw BudgetExhaustedError("node budget exhausted deciding k=" +
                                   std::to_string(k));
      }
      if (verdict == Verdict::kFeasible) {
        result.chi = std::max(result.chi, k);
        const auto colors = search.colors();
        for (std::size_t i = 0; i < colors.size(); ++i) {
          result.certificate.colors[comp.to_parent[i]] = colors[i];
        }
        break;
      }
    }
  }
  return result;
}

}  // namespace pchcrit
