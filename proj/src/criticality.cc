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

#include "pchcrit/criticality.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "pchcrit/distance.h"

namespace pchcrit {
namespace {

// Runs job(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any job is rethrown after all threads join.
void parallel_for(int count, int workers, const std::function<void(int)>& job) {
  workers = std::clamp(workers, 1, std::max(count, 1));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (int i = next++; i < count && !failed; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

// One representative per orbit (the smallest vertex), plus the orbit index
// of every vertex. Without reduction every vertex is its own orbit.
struct OrbitPlan {
  std::vector<int> representatives;
  std::vector<int> orbit;
  bool reduced = false;
};

OrbitPlan plan_orbits(const Graph& g, const CriticalityOptions& options) {
  OrbitPlan plan;
  const int n = g.order();
  plan.orbit.resize(n);
  for (int v = 0; v < n; ++v) plan.orbit[v] = v;
  if (options.use_orbits) {
    try {
      plan.orbit = vertex_orbits(g, options.automorphism_budget);
    } catch (const AutomorphismBudgetError&) {
      // keep the identity plan
    }
  }
  for (int v = 0; v < n; ++v) {
    if (plan.orbit[v] == v) plan.representatives.push_back(v);
  }
  plan.reduced = static_cast<int>(plan.representatives.size()) < n;
  return plan;
}

bool decide_or_throw(const Graph& g, int k, const SolverOptions& options) {
  if (k <= 0) return false;
  const FeasibilityResult r = decide_packing_colorable(g, k, options);
  if (r.verdict == Verdict::kBudgetExhausted) {
    throw BudgetExhaustedError("decision for k = " + std::to_string(k) +
                               " ran out of budget");
  }
  return r.verdict == Verdict::kFeasible;
}

int chi_of_deleted(const Graph& g, int x, const SolverOptions& options) {
  if (g.order() == 1) return 0;
  return packing_chromatic_number(delete_vertex(g, x), options).chi;
}

}  // namespace

CriticalityReport analyze_criticality(const Graph& g,
                                      const CriticalityOptions& options) {
  CriticalityReport report;
  report.chi_rho = packing_chromatic_number(g, options.solver).chi;
  const bool connected = is_connected(g);
  if (!connected && !options.disconnected_details) return report;

  const int n = g.order();
  const OrbitPlan plan = plan_orbits(g, options);
  report.used_orbit_reduction = plan.reduced;
  std::vector<int> rep_value(n, -1);
  parallel_for(static_cast<int>(plan.representatives.size()), options.workers,
               [&](int i) {
                 const int x = plan.representatives[i];
                 rep_value[x] = chi_of_deleted(g, x, options.solver);
               });
  report.per_vertex.resize(n);
  for (int x = 0; x < n; ++x) {
    report.per_vertex[x] = rep_value[plan.orbit[x]];
    report.delta_set.insert(report.chi_rho - report.per_vertex[x]);
  }
  report.critical =
      connected && std::all_of(report.per_vertex.begin(),
                               report.per_vertex.end(),
                               [&](int v) { return v < report.chi_rho; });
  return report;
}

bool check_k_critical(const Graph& g, int k,
                      const CriticalityOptions& options) {
  if (k < 1) throw std::invalid_argument("check_k_critical: k must be >= 1");
  if (g.order() == 1) return k == 1;
  if (decide_or_throw(g, k - 1, options.solver)) return false;
  if (!decide_or_throw(g, k, options.solver)) return false;

  const OrbitPlan plan = plan_orbits(g, options);
  std::atomic<bool> ok{true};
  parallel_for(static_cast<int>(plan.representatives.size()), options.workers,
               [&](int i) {
                 if (!ok) return;
                 const Graph h = delete_vertex(g, plan.representatives[i]);
                 if (!decide_or_throw(h, k - 1, options.solver)) ok = false;
               });
  return ok;
}

CriticalTree descend_to_critical_tree(const Graph& tree, int k,
                                      const CriticalityOptions& options) {
  if (!is_tree(tree)) {
    throw std::invalid_argument("descend_to_critical_tree: input is not a tree");
  }
  if (k < 1) throw std::invalid_argument("descend_to_critical_tree: k < 1");
  CriticalTree cur{tree, std::vector<int>(tree.order())};
  for (int v = 0; v < tree.order(); ++v) cur.to_original[v] = v;

  int chi = packing_chromatic_number(cur.tree, options.solver).chi;
  if (chi < k) {
    throw std::invalid_argument("descend_to_critical_tree: chi_rho(T) < k");
  }
  auto step_into = [&](InducedSubgraph sub) {
    std::vector<int> mapped(sub.to_parent.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) {
      mapped[i] = cur.to_original[sub.to_parent[i]];
    }
    cur.tree = std::move(sub.graph);
    cur.to_original = std::move(mapped);
  };

  while (chi > k) {
    const DistanceMatrix d(cur.tree);
    int leaf = -1;
    for (int v = 0; v < cur.tree.order(); ++v) {
      if (cur.tree.degree(v) != 1) continue;
      if (leaf < 0 || d(0, v) > d(0, leaf)) leaf = v;
    }
    step_into(delete_vertex_mapped(cur.tree, leaf));
    chi = packing_chromatic_number(cur.tree, options.solver).chi;
  }

  for (bool moved = true; moved && cur.tree.order() > 1;) {
    moved = false;
    for (int x = 0; x < cur.tree.order() && !moved; ++x) {
      InducedSubgraph rest = delete_vertex_mapped(cur.tree, x);
      if (decide_or_throw(rest.graph, k - 1, options.solver)) continue;
      for (InducedSubgraph& comp : connected_components(rest.graph)) {
        if (decide_or_throw(comp.graph, k - 1, options.solver)) continue;
        for (int& v : comp.to_parent) v = rest.to_parent[v];
        step_into(std::move(comp));
        moved = true;
        break;
      }
    }
  }

  if (!check_k_critical(cur.tree, k, options)) {
    throw std::logic_error("descend_to_critical_tree: result is not k-critical");
  }
  return cur;
}

std::optional<int> join_reducing_vertex(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  for (int x = 0; x < g.order(); ++x) {
    if (is_k2_join_independent(delete_vertex(g, x))) return x;
  }
  return std::nullopt;
}

}  // namespace pchcrit
