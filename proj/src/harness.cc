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

#include "pchcrit/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "pchcrit/automorphism.h"
#include "pchcrit/canonical.h"
#include "pchcrit/catalog.h"
#include "pchcrit/criticality.h"
#include "pchcrit/distance.h"
#include "pchcrit/enumerate.h"
#include "pchcrit/generators.h"
#include "pchcrit/independence.h"
#include "pchcrit/oracle.h"
#include "pchcrit/packing.h"
#include "pchcrit/random_graphs.h"
#include "pchcrit/solver.h"
#include "pchcrit/version.h"

namespace pchcrit {
namespace {

using nlohmann::json;

struct Context {
  SolverOptions solver;
  CriticalityOptions crit;
};

struct Outcome {
  bool pass = false;
  json measured = json::object();
};

using ClaimFn = std::function<Outcome(const Context&)>;

struct Claim {
  ClaimInfo info;
  ClaimFn run;
};

int chi(const Graph& g, const Context& ctx) {
  return packing_chromatic_number(g, ctx.solver).chi;
}

bool colorable(const Graph& g, int k, const Context& ctx) {
  const FeasibilityResult r = decide_packing_colorable(g, k, ctx.solver);
  if (r.verdict == Verdict::kBudgetExhausted) {
    throw BudgetExhaustedError("decision ran out of budget");
  }
  return r.verdict == Verdict::kFeasible;
}

bool feasible(const Graph& g, const PackingSequence& seq, const Context& ctx,
              json* nodes = nullptr) {
  const FeasibilityResult r = s_packing_decide(g, seq, ctx.solver);
  if (r.verdict == Verdict::kBudgetExhausted) {
    throw BudgetExhaustedError("decision ran out of budget");
  }
  if (nodes != nullptr) *nodes = r.nodes;
  return r.verdict == Verdict::kFeasible;
}

json set_json(const std::set<int>& s) { return std::vector<int>(s.begin(), s.end()); }

Graph cycle(int n) { return generate(Family::kCycle, {n}); }
Graph path(int n) { return generate(Family::kPath, {n}); }

bool expected_cycle_three(int n) { return n <= 4 || n % 4 == 0; }
bool expected_cycle_critical(int n) { return n <= 4 || n % 4 != 0; }

// ---- cycles --------------------------------------------------------------

Outcome cycles_chi(const Context& ctx) {
  Outcome o{true};
  for (int n = 3; n <= 20; ++n) {
    const int value = chi(cycle(n), ctx);
    o.measured[std::to_string(n)] = value;
    o.pass &= value == (expected_cycle_three(n) ? 3 : 4);
  }
  return o;
}

Outcome cycles_critical(const Context& ctx) {
  Outcome o{true};
  for (int n = 3; n <= 20; ++n) {
    const bool critical = analyze_criticality(cycle(n), ctx.crit).critical;
    o.measured[std::to_string(n)] = critical;
    o.pass &= critical == expected_cycle_critical(n);
  }
  return o;
}

// ---- small 3-critical graphs ---------------------------------------------

Outcome three_critical(int max_n, const Context& ctx) {
  const std::set<CanonicalForm> expected = {
      canonical_form(cycle(3)), canonical_form(path(4)),
      canonical_form(cycle(4))};
  std::set<CanonicalForm> found;
  int examined = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      ++examined;
      if (check_k_critical(g, 3, ctx.crit)) found.insert(canonical_form(g));
    }
  }
  Outcome o{found == expected};
  o.measured["graphs_examined"] = examined;
  json list = json::array();
  for (const auto& f : found) list.push_back(f.graph6);
  o.measured["three_critical"] = list;
  return o;
}

// ---- Petersen, K_{n,n}, gadgets ------------------------------------------

Outcome petersen(const Context& ctx) {
  const Graph g = generate(Family::kPetersen);
  const CriticalityReport r = analyze_criticality(g, ctx.crit);
  const int alpha = independence_number(g);
  const int diam = diameter(g);
  Outcome o;
  o.measured = {{"chi_rho", r.chi_rho}, {"alpha", alpha}, {"diameter", diam},
                {"delta_set", set_json(r.delta_set)}, {"critical", r.critical}};
  o.pass = r.chi_rho == 7 && alpha == 4 && diam == 2 &&
           r.delta_set == std::set<int>{2} && r.critical;
  return o;
}

Outcome complete_bipartite(const Context& ctx) {
  Outcome o{true};
  for (int n = 2; n <= 4; ++n) {
    const Graph g = generate(Family::kCompleteBipartite, {n, n});
    const CriticalityReport r = analyze_criticality(g, ctx.crit);
    const bool k_critical = check_k_critical(g, n + 1, ctx.crit);
    o.measured["K" + std::to_string(n) + "," + std::to_string(n)] = {
        {"chi_rho", r.chi_rho}, {"delta_set", set_json(r.delta_set)},
        {"k_critical", k_critical}};
    o.pass &= k_critical && r.chi_rho == n + 1 &&
              r.delta_set == std::set<int>{1};
  }
  return o;
}

// chi_rho = 2 + sum s_i for every tuple. Delta is {1} u {s_i} for balanced
// tuples; (2,4) is not balanced and is held to the cut-vertex prediction.
Outcome gadgets(const Context& ctx) {
  Outcome o{true};
  for (const std::vector<int>& s : std::vector<std::vector<int>>{
           {2, 3}, {2, 4}, {3, 3}, {2, 3, 4}}) {
    const Graph g = generate(Family::kGadget, s);
    const CriticalityReport r = analyze_criticality(g, ctx.crit);
    int sum = 0;
    std::set<int> one_and_s{1};
    for (int x : s) {
      sum += x;
      one_and_s.insert(x);
    }
    const bool balanced = gadget_balanced(s);
    const std::set<int> expected =
        balanced ? one_and_s : gadget_delta_prediction(s);
    std::string key = "gadget";
    for (int x : s) key += ":" + std::to_string(x);
    o.measured[key] = {{"chi_rho", r.chi_rho},
                       {"delta_set", set_json(r.delta_set)},
                       {"balanced", balanced},
                       {"delta_equals_1_and_s", r.delta_set == one_and_s}};
    o.pass &= r.chi_rho == 2 + sum && r.delta_set == expected;
  }
  return o;
}

Outcome glued_cliques(const Context& ctx) {
  Outcome o{true};
  for (int s = 2; s <= 3; ++s) {
    const Graph g = generate(Family::kGluedCliques, {s + 1, s + 1});
    const CriticalityReport r = analyze_criticality(g, ctx.crit);
    o.measured["s=" + std::to_string(s)] = {
        {"chi_rho", r.chi_rho}, {"delta_set", set_json(r.delta_set)}};
    o.pass &= r.delta_set == std::set<int>{1, s};
  }
  return o;
}

// ---- 4-critical graphs around cycles -------------------------------------

Outcome all_k_critical(const std::vector<std::pair<std::string, Graph>>& graphs,
                       int k, const Context& ctx) {
  Outcome o{true};
  for (const auto& [name, g] : graphs) {
    const bool ok = check_k_critical(g, k, ctx.crit);
    o.measured[name] = ok;
    o.pass &= ok;
  }
  return o;
}

Outcome fig_order5(const Context& ctx) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (int i = 0; i <= 4; ++i) {
    graphs.emplace_back("fig_order5:" + std::to_string(i),
                        generate(Family::kFigOrder5, {i}));
  }
  return all_k_critical(graphs, 4, ctx);
}

Outcome c6_chords(const Context& ctx) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (int j = 0; j <= 3; ++j) {
    graphs.emplace_back("c6_chords:" + std::to_string(j),
                        generate(Family::kC6Chords, {j}));
  }
  return all_k_critical(graphs, 4, ctx);
}

Outcome larger_cycles(const Context& ctx) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (int n : {7, 9, 10, 11}) graphs.emplace_back("C" + std::to_string(n), cycle(n));
  return all_k_critical(graphs, 4, ctx);
}

// Every chord subset of C_5: 4-critical exactly for the listed shapes.
Outcome c5_chord_subsets(const Context& ctx) {
  const std::vector<Edge> chords = {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
  std::set<CanonicalForm> listed;
  for (int i = 0; i <= 4; ++i) {
    listed.insert(canonical_form(generate(Family::kFigOrder5, {i})));
  }
  std::set<CanonicalForm> critical_classes;
  std::set<CanonicalForm> all_classes;
  bool pass = true;
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<Edge> edges = cycle(5).edges();
    for (int c = 0; c < 5; ++c) {
      if (mask >> c & 1) edges.push_back(chords[c]);
    }
    const Graph g(5, edges);
    const CanonicalForm form = canonical_form(g);
    all_classes.insert(form);
    const bool critical = check_k_critical(g, 4, ctx.crit);
    if (critical) critical_classes.insert(form);
    pass &= critical == listed.contains(form);
  }
  Outcome o{pass && critical_classes == listed};
  o.measured = {{"subsets", 32},
                {"isomorphism_classes", all_classes.size()},
                {"four_critical_classes", critical_classes.size()}};
  return o;
}

Outcome cycle_leaf_witnesses(const Context& ctx) {
  Outcome o = all_k_critical(
      {{"net", generate(Family::kNet)},
       {"c4+leaves@dist1", generate(Family::kCycleWithLeaves, {4, 0, 1})},
       {"c8+leaves@dist3", generate(Family::kCycleWithLeaves, {8, 0, 3})}},
      4, ctx);
  const bool dist1 =
      check_k_critical(generate(Family::kCycleWithLeaves, {8, 0, 1}), 4, ctx.crit);
  o.measured["c8+leaves@dist1"] = dist1;
  o.pass &= !dist1;
  return o;
}

Outcome g2k_chi(const Context& ctx) {
  Outcome o{true};
  for (int k = 3; k <= 8; ++k) {
    const int value = chi(generate(Family::kG2k, {k}), ctx);
    o.measured["k=" + std::to_string(k)] = value;
    o.pass &= value == 4;
  }
  return o;
}

Outcome h_odd_critical(const Context& ctx) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (int k = 0; k <= 3; ++k) {
    graphs.emplace_back("k=" + std::to_string(k), generate(Family::kHOdd, {k}));
  }
  return all_k_critical(graphs, 4, ctx);
}

// ---- paths and caterpillars ----------------------------------------------

Outcome path_infeasible(int n, std::vector<int> seq, const Context& ctx) {
  json nodes;
  const bool ok = feasible(path(n), PackingSequence(std::move(seq)), ctx, &nodes);
  Outcome o{!ok};
  o.measured = {{"feasible", ok}, {"nodes", nodes}};
  return o;
}

constexpr int kPeriodicPattern[12] = {2, 4, 3, 2, 5, 6, 2, 4, 3, 2, 5, 7};

Outcome periodic_pattern(const Context&) {
  const PackingSequence seq({2, 3, 4, 5, 6, 7});
  Outcome o{true};
  for (int n = 1; n <= 60; ++n) {
    Coloring c;
    for (int i = 0; i < n; ++i) c.colors.push_back(kPeriodicPattern[i % 12] - 1);
    o.pass &= verify_packing_coloring(path(n), seq, c);
  }
  o.measured["max_n"] = 60;
  return o;
}

Coloring caterpillar_t_coloring() {
  const Graph t = generate(Family::kCaterpillarT);
  Coloring c{std::vector<int>(t.order(), 1)};
  const int spine[9] = {2, 3, 4, 2, 5, 3, 2, 4, 6};
  for (int i = 0; i < 9; ++i) c.colors[i] = spine[i];
  return c;
}

Outcome caterpillar_t_certificate(const Context&) {
  const Graph t = generate(Family::kCaterpillarT);
  const bool ok = verify_packing_coloring(t, PackingSequence::standard(6),
                                          caterpillar_t_coloring());
  Outcome o{ok};
  o.measured["certificate_valid"] = ok;
  return o;
}

Outcome caterpillar_t_critical(const Context& ctx) {
  const Graph t = generate(Family::kCaterpillarT);
  const int value = chi(t, ctx);
  // Every one of the 31 deletions, without orbit shortcuts.
  int five_colorable = 0;
  for (int x = 0; x < t.order(); ++x) {
    if (colorable(delete_vertex(t, x), 5, ctx)) ++five_colorable;
  }
  Outcome o{value == 6 && five_colorable == t.order()};
  o.measured = {{"chi_rho", value}, {"deletions_5_colorable", five_colorable},
                {"order", t.order()}};
  return o;
}

// ---- K_{1,3} x P_3 --------------------------------------------------------

Graph k13xp3() {
  return cartesian_product(generate(Family::kStar, {3}), path(3));
}

// Table columns u,u1,u2,u3,v,v1,v2,v3,w,w1,w2,w3 as product vertices:
// u, v, w lie over the star center, u_i, v_i, w_i over leaf i.
constexpr int kTableColumns[12] = {0, 3, 6, 9, 1, 4, 7, 10, 2, 5, 8, 11};

Coloring from_table(const int (&row)[12]) {
  Coloring c{std::vector<int>(12, 0)};
  for (int i = 0; i < 12; ++i) c.colors[kTableColumns[i]] = row[i];
  return c;
}

Outcome k13xp3_values(const Context& ctx) {
  const Graph g = k13xp3();
  const int value = chi(g, ctx);
  const int alpha = independence_number(g);
  const int diam = diameter(g);
  CriticalityOptions all = ctx.crit;
  all.use_orbits = false;
  const bool critical = check_k_critical(g, 6, all);
  Outcome o{value == 6 && alpha == 7 && diam == 4 && critical};
  o.measured = {{"chi_rho", value}, {"alpha", alpha}, {"diameter", diam},
                {"six_critical", critical}};
  return o;
}

Outcome table_partial(const Context&) {
  const int row[12] = {0, 3, 1, 2, 4, 1, 2, 1, 1, 2, 0, 3};
  const Coloring c = from_table(row);
  const bool valid =
      verify_partial_packing_coloring(k13xp3(), PackingSequence::standard(5), c);
  const auto small = std::count_if(c.colors.begin(), c.colors.end(),
                                   [](int x) { return x >= 1 && x <= 3; });
  Outcome o{valid && small == 9};
  o.measured = {{"valid", valid}, {"colors_1_to_3", small}};
  return o;
}

Outcome table_deleted(const Context&) {
  struct Row {
    const char* name;
    int deleted_column;
    int values[12];
  };
  const Row rows[] = {
      {"f_u", 0, {0, 3, 3, 2, 5, 1, 1, 1, 1, 2, 4, 3}},
      {"f_u3", 3, {1, 3, 2, 0, 5, 1, 1, 1, 1, 2, 3, 4}},
      {"f_v3", 7, {2, 1, 1, 1, 1, 3, 5, 0, 4, 1, 1, 1}},
      {"f_v", 4, {1, 3, 5, 2, 0, 1, 1, 1, 1, 2, 4, 3}},
  };
  const Graph g = k13xp3();
  const PackingSequence seq = PackingSequence::standard(5);
  Outcome o{true};
  for (const Row& row : rows) {
    const int t = kTableColumns[row.deleted_column];
    const Coloring full = from_table(row.values);
    const InducedSubgraph sub = delete_vertex_mapped(g, t);
    Coloring restricted;
    for (int parent : sub.to_parent) restricted.colors.push_back(full.colors[parent]);
    const bool valid = full.colors[t] == 0 &&
                       verify_packing_coloring(sub.graph, seq, restricted);
    o.measured[row.name] = valid;
    o.pass &= valid;
  }
  return o;
}

// ---- products ------------------------------------------------------------

Outcome product_lower_bound(const Context& ctx) {
  const std::vector<std::pair<std::string, std::pair<Graph, Graph>>> pairs = {
      {"K3xC4", {generate(Family::kComplete, {3}), cycle(4)}},
      {"K2xK2", {generate(Family::kComplete, {2}), generate(Family::kComplete, {2})}},
      {"K13xP3", {generate(Family::kStar, {3}), path(3)}},
  };
  Outcome o{true};
  for (const auto& [name, factors] : pairs) {
    const auto& [g, h] = factors;
    const Graph p = cartesian_product(g, h);
    const int bound = cartesian_lower_bound(chi(g, ctx), h.order(), diameter(p));
    const int value = chi(p, ctx);
    o.measured[name] = {{"bound", bound}, {"chi_rho", value}};
    o.pass &= value >= bound;
  }
  return o;
}

Outcome k3xc4_critical(const Context& ctx) {
  const Graph k3 = generate(Family::kComplete, {3});
  const Graph c4 = cycle(4);
  const bool transitive = is_vertex_transitive(k3) && is_vertex_transitive(c4);
  const int lhs = diameter(k3) + diameter(c4);
  const int rhs = chi(k3, ctx);
  const CriticalityReport r =
      analyze_criticality(cartesian_product(k3, c4), ctx.crit);
  Outcome o{transitive && lhs <= rhs && r.critical};
  o.measured = {{"factors_vertex_transitive", transitive},
                {"diameter_sum", lhs}, {"chi_rho_first", rhs},
                {"chi_rho", r.chi_rho}, {"critical", r.critical}};
  return o;
}

Outcome hypercube_critical(int d, const Context& ctx) {
  const CriticalityReport r =
      analyze_criticality(generate(Family::kHypercube, {d}), ctx.crit);
  Outcome o{r.critical};
  o.measured = {{"chi_rho", r.chi_rho}, {"critical", r.critical},
                {"delta_set", set_json(r.delta_set)}};
  return o;
}

Graph c18xp2() { return cartesian_product(cycle(18), path(2)); }

// Vertex (g, h) has index 2g + h; column j = g + 1. Row h = 0 carries 1
// on even columns, row h = 1 on odd columns.
Coloring c18xp2_coloring() {
  Coloring c{std::vector<int>(36, 0)};
  for (int j = 1; j <= 18; ++j) {
    int lower = 1;
    if (j % 2 == 1) lower = (j % 6 == 1) ? 2 : (j % 6 == 5) ? 3 : 4;
    int upper = 1;
    if (j % 2 == 0) upper = (j % 6 == 4) ? 2 : (j % 6 == 2) ? 3 : 5;
    c.colors[2 * (j - 1)] = lower;
    c.colors[2 * (j - 1) + 1] = upper;
  }
  return c;
}

Outcome c18xp2_certificate(const Context&) {
  const bool ok = verify_packing_coloring(c18xp2(), PackingSequence::standard(5),
                                          c18xp2_coloring());
  Outcome o{ok};
  o.measured["certificate_valid"] = ok;
  return o;
}

Outcome c18xp2_noncritical(const Context& ctx) {
  const Graph g = c18xp2();
  const bool four = colorable(g, 4, ctx);
  const bool five = verify_packing_coloring(g, PackingSequence::standard(5),
                                            c18xp2_coloring());
  // Some deletion still needs five colors.
  int witness = -1;
  for (int x = 0; x < g.order() && witness < 0; ++x) {
    if (!colorable(delete_vertex(g, x), 4, ctx)) witness = x;
  }
  Outcome o{!four && five && witness >= 0};
  o.measured = {{"four_colorable", four}, {"certificate_valid", five},
                {"chi_rho", four ? 4 : (five ? 5 : -1)},
                {"noncritical_witness", witness}};
  return o;
}

Outcome join_reducible(const Context& ctx) {
  Outcome o{true};
  for (int i = 0; i <= 4; ++i) {
    const Graph g = generate(Family::kFigJoinReducible, {i});
    const bool critical = check_k_critical(g, 4, ctx.crit);
    const auto x = join_reducing_vertex(g);
    o.measured[std::to_string(i)] = {{"four_critical", critical},
                                     {"join_vertex", x ? *x : -1}};
    o.pass &= critical && x.has_value();
  }
  return o;
}

// ---- randomized and exhaustive property checks ---------------------------

Outcome oracle_equivalence(const Context& ctx) {
  Outcome o{true};
  int checked = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const int fast = chi(g, ctx);
      const int brute = oracle_chi_rho(g);
      ++checked;
      if (fast != brute) {
        o.pass = false;
        o.measured["mismatch"].push_back(
            {{"graph", canonical_form(g).graph6}, {"solver", fast}, {"oracle", brute}});
      }
    }
  }
  o.measured["graphs"] = checked;
  return o;
}

Outcome subgraph_monotonicity(const Context& ctx) {
  Rng rng(0x5eed0001);
  Outcome o{true};
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const Graph g = random_graph(n, 0.45, rng);
    const int base = chi(g, ctx);
    const int x = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (chi(delete_vertex(g, x), ctx) > base) ++violations;
    const auto edges = g.edges();
    if (!edges.empty()) {
      const auto e = edges[std::uniform_int_distribution<std::size_t>(
          0, edges.size() - 1)(rng)];
      const std::vector<Edge> removed = {e};
      if (chi(delete_edges(g, removed), ctx) > base) ++violations;
    }
  }
  o.pass = violations == 0;
  o.measured = {{"instances", 200}, {"violations", violations}};
  return o;
}

Outcome leaf_sandwich(const Context& ctx) {
  Rng rng(0x5eed0002);
  int violations = 0;
  int leaves = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    const Graph t = random_tree(n, rng);
    const int base = chi(t, ctx);
    for (int x = 0; x < n; ++x) {
      if (t.degree(x) != 1) continue;
      ++leaves;
      const int after = chi(delete_vertex(t, x), ctx);
      if (after < base - 1 || after > base) ++violations;
    }
  }
  Outcome o{violations == 0};
  o.measured = {{"trees", 200}, {"leaves", leaves}, {"violations", violations}};
  return o;
}

Outcome alpha_bound(const Context& ctx) {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 6; ++n) {
    for (Graph& g : enumerate_connected(n)) graphs.push_back(std::move(g));
  }
  Rng rng(0x5eed0003);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    graphs.push_back(random_connected_graph(n, 0.5, rng));
  }
  int violations = 0;
  int diameter_two = 0;
  for (const Graph& g : graphs) {
    const ChiBounds b = chi_rho_bounds(g);
    const int value = chi(g, ctx);
    if (value > b.upper || value < b.lower) ++violations;
    if (g.order() > 1 && diameter(g) == 2) {
      ++diameter_two;
      if (value != b.upper) ++violations;
    }
  }
  Outcome o{violations == 0};
  o.measured = {{"graphs", graphs.size()}, {"diameter_two", diameter_two},
                {"violations", violations}};
  return o;
}

Outcome descend_trees(const Context& ctx) {
  Rng rng(0x5eed0004);
  Outcome o{true};
  for (int k = 2; k <= 4; ++k) {
    int runs = 0;
    std::set<CanonicalForm> results;
    for (int trial = 0; trial < 40; ++trial) {
      const Graph t = random_tree(std::uniform_int_distribution<int>(2, 16)(rng), rng);
      if (chi(t, ctx) < k) continue;
      const CriticalTree c = descend_to_critical_tree(t, k, ctx.crit);
      ++runs;
      results.insert(canonical_form(c.tree));
      o.pass &= is_tree(c.tree) && check_k_critical(c.tree, k, ctx.crit);
    }
    o.measured["k=" + std::to_string(k)] = {{"runs", runs},
                                            {"distinct_results", results.size()}};
    o.pass &= runs > 0;
  }
  return o;
}

// ---- catalog -------------------------------------------------------------

Outcome catalog_expectations(const Context& ctx) {
  Outcome o{true};
  for (const CatalogEntry& e : catalog()) {
    const Graph g = build_entry(e);
    bool ok = g.order() == e.order && is_connected(g);
    if (e.critical || e.delta_set) {
      const CriticalityReport r = analyze_criticality(g, ctx.crit);
      if (e.chi_rho) ok &= r.chi_rho == *e.chi_rho;
      if (e.critical) ok &= r.critical == *e.critical;
      if (e.delta_set) ok &= r.delta_set == *e.delta_set;
    } else if (e.chi_rho) {
      ok &= chi(g, ctx) == *e.chi_rho;
    }
    if (e.alpha) ok &= independence_number(g) == *e.alpha;
    if (e.diameter) ok &= diameter(g) == *e.diameter;
    if (!ok) o.measured["failed"].push_back(e.id);
    o.pass &= ok;
  }
  o.measured["entries"] = catalog().size();
  return o;
}

std::vector<Claim> build_registry() {
  using std::placeholders::_1;
  std::vector<Claim> c;
  auto add = [&](std::string id, std::string anchor, bool slow, ClaimFn fn) {
    c.push_back({{std::move(id), std::move(anchor), slow}, std::move(fn)});
  };
  add("cycles:chi_rho_formula",
      "chi_rho(C_n) = 3 if n in {3,4} or n = 0 mod 4, else 4 (n = 3..20)",
      false, cycles_chi);
  add("cycles:criticality",
      "C_n is critical iff n in {3,4} or n >= 5 with n != 0 mod 4 (n = 3..20)",
      false, cycles_critical);
  add("prop:3critical_exhaustive",
      "the 3-critical connected graphs on at most 6 vertices are C_3, P_4, C_4",
      false, [](const Context& ctx) { return three_critical(6, ctx); });
  add("prop:3critical_exhaustive_n7",
      "the 3-critical connected graphs on at most 7 vertices are C_3, P_4, C_4",
      true, [](const Context& ctx) { return three_critical(7, ctx); });
  add("petersen:values",
      "Petersen graph: chi_rho 7, alpha 4, diameter 2, Delta {2}, critical",
      false, petersen);
  add("complete_bipartite:critical",
      "K_{n,n} is (n+1)-critical with Delta {1} (n = 2,3,4)", false,
      complete_bipartite);
  add("gadget:formula_and_delta",
      "chi_rho(gadget(s)) = 2 + sum s_i; Delta = {1} u {s_i} when every "
      "s_i - 1 <= sum of the others",
      false,
      gadgets);
  add("glued_cliques:delta",
      "two copies of K_{s+1} sharing a vertex have Delta {1, s} (s = 2,3)",
      false, glued_cliques);
  add("largecycle:fig_order5",
      "the five chorded 5-cycles are 4-critical", false, fig_order5);
  add("largecycle:c6_chords",
      "C_6 plus 0..3 main diagonals is 4-critical", false, c6_chords);
  add("largecycle:cycles", "C_7, C_9, C_10, C_11 are 4-critical", false,
      larger_cycles);
  add("largecycle:c5_chord_subsets",
      "a chorded C_5 is 4-critical only in the five listed shapes", false,
      c5_chord_subsets);
  add("ccycles:witnesses",
      "net, C_4 with adjacent leaves and C_8 with leaves at distance 3 are "
      "4-critical; C_8 with adjacent leaves is not",
      false, cycle_leaf_witnesses);
  add("g2k:chi_rho", "chi_rho(G_2k) = 4 for k = 3..8", false, g2k_chi);
  add("h_odd:critical",
      "two 4-cycles joined by a path of length 2k+1 are 4-critical (k = 0..3)",
      false, h_odd_critical);
  add("paths:p9_no_2345", "P_9 has no (2,3,4,5)-coloring", false,
      [](const Context& ctx) { return path_infeasible(9, {2, 3, 4, 5}, ctx); });
  add("paths:p35_no_23456", "P_35 has no (2,3,4,5,6)-coloring", true,
      [](const Context& ctx) {
        return path_infeasible(35, {2, 3, 4, 5, 6}, ctx);
      });
  add("paths:periodic_pattern",
      "the 12-periodic pattern 2,4,3,2,5,6,2,4,3,2,5,7 (2,...,7)-colors P_n, "
      "n <= 60",
      false, periodic_pattern);
  add("caterpillar_t:spine_certificate",
      "spine colors 2,3,4,2,5,3,2,4,6 with leaves 1 pack-color T", false,
      caterpillar_t_certificate);
  add("caterpillar_t:critical",
      "chi_rho(T) = 6 and chi_rho(T - x) <= 5 for all 31 vertices", true,
      caterpillar_t_critical);
  add("k13xp3:values",
      "K_{1,3} x P_3: chi_rho 6, alpha 7, diameter 4, 6-critical", false,
      k13xp3_values);
  add("k13xp3:partial_coloring",
      "partial packing coloring of K_{1,3} x P_3 with 9 vertices in colors "
      "1..3",
      false, table_partial);
  add("table1:deleted_vertex_colorings",
      "each listed f_t is a 5-packing coloring of (K_{1,3} x P_3) - t", false,
      table_deleted);
  add("products:lower_bound",
      "chi_rho(G x H) >= (chi_rho(G) + 1) n(H) - diam(G x H)(n(H) - 1) - 1",
      false, product_lower_bound);
  add("products:k3xc4_critical",
      "K_3 x C_4: vertex-transitive factors with diam sum 3 <= chi_rho(K_3), "
      "product critical",
      false, k3xc4_critical);
  add("hypercube:q3_critical", "Q_3 is critical", false,
      [](const Context& ctx) { return hypercube_critical(3, ctx); });
  add("hypercube:q4_critical", "Q_4 is critical", true,
      [](const Context& ctx) { return hypercube_critical(4, ctx); });
  add("c18xp2:certificate",
      "the listed 5-coloring of C_18 x P_2 is a packing coloring", false,
      c18xp2_certificate);
  add("c18xp2:chi_and_noncritical",
      "chi_rho(C_18 x P_2) = 5 and some deletion keeps it at 5", true,
      c18xp2_noncritical);
  add("join_reducible:critical",
      "five join-reducible graphs are 4-critical and each has x with G - x = "
      "K_2 join an independent set",
      false, join_reducible);
  add("props:oracle_equivalence",
      "solver chi_rho equals brute force on all connected graphs, n <= 7",
      false, oracle_equivalence);
  add("props:subgraph_monotonicity",
      "chi_rho never grows under vertex or edge deletion (200 random graphs)",
      false, subgraph_monotonicity);
  add("props:leaf_sandwich",
      "chi_rho(T) - 1 <= chi_rho(T - leaf) <= chi_rho(T) (200 random trees)",
      false, leaf_sandwich);
  add("props:alpha_bound",
      "chi_rho <= n - alpha + 1, with equality at diameter 2", false,
      alpha_bound);
  add("props:descend_critical_trees",
      "descent from a tree with chi_rho >= k ends in a k-critical tree "
      "(k = 2,3,4)",
      false, descend_trees);
  add("catalog:expectations",
      "every catalog graph has its declared order and properties", false,
      catalog_expectations);
  return c;
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = build_registry();
  return claims;
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

ClaimResult execute(const Claim& claim, const HarnessOptions& options) {
  Context ctx;
  ctx.solver.node_budget = options.node_budget;
  ctx.crit.solver = ctx.solver;
  ctx.crit.workers = std::max(options.workers, 1);
  ClaimResult result;
  result.id = claim.info.id;
  result.anchor = claim.info.anchor;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = claim.run(ctx);
    result.status = o.pass ? ClaimStatus::kPass : ClaimStatus::kFail;
    result.measured = std::move(o.measured);
  } catch (const BudgetExhaustedError& e) {
    result.status = ClaimStatus::kSkippedBudget;
    result.measured = {{"reason", e.what()}};
  }
  result.seconds = since(start);
  return result;
}

}  // namespace

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kSkippedBudget:
      return "skipped-budget";
  }
  return "fail";
}

SuiteFilter parse_suite_filter(std::string_view name) {
  if (name == "fast") return SuiteFilter::kFast;
  if (name == "slow") return SuiteFilter::kSlow;
  if (name == "all") return SuiteFilter::kAll;
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const Claim& c : registry()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

ClaimResult run_claim(std::string_view id, const HarnessOptions& options) {
  for (const Claim& c : registry()) {
    if (c.info.id == id) return execute(c, options);
  }
  throw std::invalid_argument("unknown claim: " + std::string(id));
}

VerificationReport run_suite(SuiteFilter filter, const HarnessOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<const Claim*> selected;
  for (const Claim& c : registry()) {
    if (filter == SuiteFilter::kAll ||
        (filter == SuiteFilter::kSlow) == c.info.slow) {
      selected.push_back(&c);
    }
  }
  VerificationReport report;
  report.version = kVersion;
  report.claims.resize(selected.size());
  const int workers =
      std::clamp(options.workers, 1, std::max<int>(selected.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) {
      report.claims[i] = execute(*selected[i], options);
    }
  } else {
    // Claims in parallel, each one single-threaded inside.
    HarnessOptions inner = options;
    inner.workers = 1;
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
          report.claims[i] = execute(*selected[i], inner);
        }
      });
    }
    for (auto& t : threads) t.join();
  }
  for (const ClaimResult& r : report.claims) {
    switch (r.status) {
      case ClaimStatus::kPass:
        ++report.pass;
        break;
      case ClaimStatus::kFail:
        ++report.fail;
        break;
      case ClaimStatus::kSkippedBudget:
        ++report.skipped;
        break;
    }
  }
  report.wall_seconds = since(start);
  return report;
}

nlohmann::json claim_json(const ClaimResult& r) {
  return {{"id", r.id},
          {"status", claim_status_name(r.status)},
          {"anchor", r.anchor},
          {"measured", r.measured},
          {"seconds", r.seconds}};
}

nlohmann::json report_json(const VerificationReport& report) {
  json claims = json::array();
  for (const ClaimResult& r : report.claims) claims.push_back(claim_json(r));
  return {{"claims", claims},
          {"summary",
           {{"pass", report.pass},
            {"fail", report.fail},
            {"skipped", report.skipped}}},
          {"version", report.version},
          {"wall_seconds", report.wall_seconds}};
}

}  // namespace pchcrit
