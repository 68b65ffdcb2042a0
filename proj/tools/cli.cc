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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "pchcrit/catalog.h"
#include "pchcrit/criticality.h"
#include "pchcrit/enumerate.h"
#include "pchcrit/generators.h"
#include "pchcrit/graph_io.h"
#include "pchcrit/harness.h"
#include "pchcrit/independence.h"
#include "pchcrit/json_io.h"
#include "pchcrit/packing.h"
#include "pchcrit/solver.h"
#include "pchcrit/version.h"

namespace pchcrit {
namespace {

// Bad input or arguments discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  int workers = 1;
  std::uint64_t budget = 0;
  std::string format = "graph6";
};

std::optional<long long> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v < 0) {
    throw UsageError(std::string("invalid ") + name + ": " + raw);
  }
  return v;
}

Graph read_graph(const std::string& source, std::istream& in) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(source);
    if (!file) throw UsageError("cannot read " + source);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("malformed graph: ") + e.what());
  }
}

GraphFormat output_format(const std::string& name) {
  if (name == "graph6") return GraphFormat::kGraph6;
  if (name == "edgelist") return GraphFormat::kEdgeList;
  throw UsageError("unknown format: " + name);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError("not an integer list: " + text);
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

Graph generate_target(const std::string& target, const std::vector<int>& params) {
  if (const CatalogEntry* e = find_entry(target)) {
    if (!params.empty()) throw UsageError("catalog ids take no parameters");
    return build_entry(*e);
  }
  Family family;
  try {
    family = parse_family(target);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown family or catalog id: " + target);
  }
  try {
    return generate(family, params);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

CriticalityOptions criticality_options(const Config& cfg) {
  CriticalityOptions o;
  o.solver.node_budget = cfg.budget;
  o.workers = cfg.workers;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Config cfg;
  try {
    if (auto w = env_number("PCHCRIT_WORKERS")) cfg.workers = static_cast<int>(*w);
    if (auto b = env_number("PCHCRIT_BUDGET")) cfg.budget = static_cast<std::uint64_t>(*b);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Exact packing colorings and packing-chromatic criticality",
               "pchcrit"};
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();
  app.add_option("--workers", cfg.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "search nodes per decision, 0 = unlimited");

  std::string gen_target;
  std::vector<int> gen_params;
  std::string gen_id;
  auto* gen = app.add_subcommand("gen", "generate a family graph or catalog entry");
  gen->add_option("target", gen_target, "family name or catalog id");
  gen->add_option("params", gen_params, "family parameters");
  gen->add_option("--id", gen_id, "catalog id");
  gen->add_option("--format", cfg.format, "graph6 | edgelist");

  std::string input;
  auto* chirho = app.add_subcommand("chirho", "packing chromatic number and certificate");
  chirho->add_option("graph", input, "graph file or -")->required();

  std::string seq_text;
  auto* decide = app.add_subcommand("decide", "S-packing colorability");
  decide->add_option("graph", input, "graph file or -")->required();
  decide->add_option("--seq", seq_text, "sequence, e.g. 2,3,4,5")->required();

  auto* alpha = app.add_subcommand("alpha", "independence number");
  alpha->add_option("graph", input, "graph file or -")->required();

  int k = 0;
  auto* critical = app.add_subcommand("critical", "criticality report");
  critical->add_option("graph", input, "graph file or -")->required();
  critical->add_option("--k", k, "also decide k-criticality")
      ->check(CLI::PositiveNumber);

  auto* delta = app.add_subcommand("delta", "set of chi_rho(G) - chi_rho(G - x)");
  delta->add_option("graph", input, "graph file or -")->required();

  int enum_n = 0;
  int enum_k = 0;
  auto* enumerate = app.add_subcommand("enum", "connected graphs up to isomorphism");
  enumerate->add_option("--n", enum_n, "order")->required();
  enumerate->add_option("--k-critical", enum_k, "keep only k-critical graphs")
      ->check(CLI::PositiveNumber);

  std::string suite = "fast";
  std::string claim_id;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "run verification claims");
  verify->add_option("--suite", suite, "fast | slow | all");
  verify->add_option("--claim", claim_id, "single claim id");
  verify->add_option("--report", report_path, "write JSON report here");

  std::string second;
  auto* product = app.add_subcommand("product", "Cartesian product");
  product->add_option("g1", input, "graph file or -")->required();
  product->add_option("g2", second, "graph file or -")->required();
  product->add_option("--format", cfg.format, "graph6 | edgelist");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      if (!gen_id.empty() && !gen_target.empty()) {
        throw UsageError("give either a target or --id, not both");
      }
      const std::string target = gen_id.empty() ? gen_target : gen_id;
      if (target.empty()) throw UsageError("gen needs a family or catalog id");
      out << format_graph(generate_target(target, gen_params),
                          output_format(cfg.format));
      return kExitOk;
    }
    if (*chirho) {
      const Graph g = read_graph(input, in);
      SolverOptions so{cfg.budget};
      const ChiResult r = packing_chromatic_number(g, so);
      out << r.chi << "\n"
          << certificate_json(PackingSequence::standard(r.chi), r.certificate)
                 .dump()
          << "\n";
      return kExitOk;
    }
    if (*decide) {
      const Graph g = read_graph(input, in);
      std::optional<PackingSequence> seq;
      try {
        seq.emplace(parse_int_list(seq_text));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const FeasibilityResult r = s_packing_decide(g, *seq, {cfg.budget});
      out << verdict_name(r.verdict) << "\n";
      if (r.certificate) {
        out << certificate_json(*seq, *r.certificate).dump() << "\n";
      }
      return r.verdict == Verdict::kBudgetExhausted ? kExitClaimFailed : kExitOk;
    }
    if (*alpha) {
      out << independence_number(read_graph(input, in)) << "\n";
      return kExitOk;
    }
    if (*critical) {
      const Graph g = read_graph(input, in);
      const CriticalityOptions opts = criticality_options(cfg);
      nlohmann::json j = criticality_json(analyze_criticality(g, opts));
      if (k > 0) {
        j["k"] = k;
        j["k_critical"] = check_k_critical(g, k, opts);
      }
      out << j.dump() << "\n";
      return kExitOk;
    }
    if (*delta) {
      const CriticalityReport r =
          analyze_criticality(read_graph(input, in), criticality_options(cfg));
      out << nlohmann::json(std::vector<int>(r.delta_set.begin(),
                                             r.delta_set.end()))
                 .dump()
          << "\n";
      return kExitOk;
    }
    if (*enumerate) {
      if (enum_n < 1 || enum_n > kEnumerateMaxOrder) {
        throw UsageError("--n must be in 1.." +
                         std::to_string(kEnumerateMaxOrder));
      }
      const CriticalityOptions opts = criticality_options(cfg);
      for (const Graph& g : enumerate_connected(enum_n)) {
        if (enum_k > 0 && !check_k_critical(g, enum_k, opts)) continue;
        out << format_graph6(g) << "\n";
      }
      return kExitOk;
    }
    if (*verify) {
      HarnessOptions ho{cfg.workers, cfg.budget};
      VerificationReport report;
      if (!claim_id.empty()) {
        try {
          report.claims.push_back(run_claim(claim_id, ho));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        const ClaimStatus s = report.claims.front().status;
        report.pass = s == ClaimStatus::kPass;
        report.fail = s == ClaimStatus::kFail;
        report.skipped = s == ClaimStatus::kSkippedBudget;
        report.version = kVersion;
        report.wall_seconds = report.claims.front().seconds;
      } else {
        SuiteFilter filter;
        try {
          filter = parse_suite_filter(suite);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        report = run_suite(filter, ho);
      }
      for (const ClaimResult& r : report.claims) {
        out << claim_status_name(r.status) << " " << r.id << " ("
            << r.seconds << " s)\n";
      }
      out << "summary: " << report.pass << " pass, " << report.fail
          << " fail, " << report.skipped << " skipped\n";
      if (!report_path.empty()) {
        std::ofstream file(report_path);
        if (!file) throw UsageError("cannot write " + report_path);
        file << report_json(report).dump(2) << "\n";
      }
      return report.fail == 0 && report.skipped == 0 ? kExitOk
                                                     : kExitClaimFailed;
    }
    if (*product) {
      if (input == "-" && second == "-") {
        throw UsageError("only one input can come from stdin");
      }
      const Graph a = read_graph(input, in);
      const Graph b = read_graph(second, in);
      out << format_graph(cartesian_product(a, b), output_format(cfg.format));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExhaustedError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitClaimFailed;
  }
  return kExitUsage;
}

}  // namespace pchcrit
