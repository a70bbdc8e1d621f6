// Copyright 2026 The lly Authors
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

// Command-line driver. Exit codes: 0 success, 1 usage or parse error,
// 2 a check failed or a counterexample was found, 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lly/bipartite.h"
#include "lly/census.h"
#include "lly/connectivity.h"
#include "lly/curvature.h"
#include "lly/errors.h"
#include "lly/families.h"
#include "lly/graph_io.h"
#include "lly/report.h"

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;
constexpr int kBudget = 3;

struct RunConfig {
  std::string input;
  std::string format = "adj";
  std::vector<int> edge;
  int max_n = 6;
  int max_edges = 8;
  std::string spec;
  int layers = 0;
  int jobs = 1;
  std::string output;
  bool json_out = false;
  bool csv_out = false;
  bool early_exit = false;
  bool extended = false;
  bool regular_only = false;
  bool all_cuts = false;
  bool pairings = false;
};

void Emit(const RunConfig& config, const std::string& text) {
  if (config.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) throw lly::ParseError("cannot write '" + config.output + "'");
  out << text;
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

lly::Graph LoadInput(const RunConfig& config) {
  if (config.input.empty()) throw lly::ParseError("--input is required");
  const lly::GraphFormat format = config.format == "graph6"
                                      ? lly::GraphFormat::kGraph6
                                      : lly::GraphFormat::kAdjacency;
  return lly::ReadGraphFile(config.input, format);
}

lly::FamilySpec LoadSpec(const RunConfig& config) {
  if (config.spec.empty()) throw lly::ParseError("--spec is required");
  const std::string dir =
      std::filesystem::path(config.spec).parent_path().string();
  lly::FamilySpec spec =
      lly::ParseFamilySpec(lly::ReadFileOrThrow(config.spec), dir);
  if (config.layers > 0) {
    spec.layers = config.layers;
    lly::ValidateFamilySpec(spec);
  }
  return spec;
}

int CmdCurvature(const RunConfig& config) {
  const lly::Graph g = LoadInput(config);
  lly::CurvatureReport report;
  if (!config.edge.empty()) {
    const lly::Edge e = lly::Edge::Of(config.edge[0], config.edge[1]);
    g.CheckEdge(e);
    report.edges = lly::EdgeCurvatures(g, {e});
    report.min_curvature = report.edges[0].kappa;
    report.nonnegative = report.edges[0].kappa.sign() >= 0;
  } else {
    lly::ProfileOptions options;
    options.early_exit = config.early_exit;
    options.jobs = config.jobs;
    report = lly::CurvatureProfile(g, options);
  }
  Emit(config, config.csv_out ? lly::ToCsv(report) : Dump(lly::ToJson(report)));
  return config.early_exit && !report.nonnegative ? kCheckFailed : kOk;
}

int CmdConnectivity(const RunConfig& config) {
  const lly::Graph g = LoadInput(config);
  const lly::CutCertificate cert = lly::EdgeConnectivity(g, config.jobs);
  json out = {{"edge_connectivity", cert.size},
              {"min_degree", g.min_degree()},
              {"cut", lly::ToJson(cert)}};
  if (config.all_cuts) {
    json all = json::array();
    for (const auto& c : lly::AllMinCuts(g)) all.push_back(lly::ToJson(c));
    out["all_min_cuts"] = all;
  }
  Emit(config, Dump(out));
  return kOk;
}

int CmdCutAnalyze(const RunConfig& config) {
  json out;
  if (!config.spec.empty()) {
    // Interior-restricted analysis of a family truncation.
    const lly::FamilySpec spec = LoadSpec(config);
    const lly::TruncatedGraph t = lly::Generate(spec);
    const lly::FamilyReport report = lly::VerifyFamily(spec, config.jobs);
    const lly::CutCertificate global = lly::EdgeConnectivity(t.graph, config.jobs);
    json interior = json::array();
    for (const lly::CutReport& cr : report.cuts) {
      interior.push_back({{"left_slice", cr.left_slice},
                          {"size", cr.cert.size},
                          {"class", cr.cls.ToString()}});
    }
    out = {{"description", lly::DescribeSpec(spec)},
           {"edge_connectivity", global.size},
           {"min_degree", t.graph.min_degree()},
           {"interior_delta", report.claimed_delta},
           {"interior_cuts", interior},
           {"interior_cut_differs_from_global",
            !report.cuts.empty() && report.cuts[0].cert.size != global.size},
           {"family", lly::ToJson(report)}};
    Emit(config, Dump(out));
    return report.ok() ? kOk : kCheckFailed;
  }
  const lly::Graph g = LoadInput(config);
  if (g.vertex_count() < 2) throw lly::InvalidArgument("need at least 2 vertices");
  if (!lly::IsConnected(g)) throw lly::DisconnectedError("input is disconnected");
  out = lly::CutAnalysisJson(g, config.all_cuts);
  bool ok = true;
  for (const auto& cut : out["cuts"]) {
    for (const auto& e : cut.value("edges", json::array())) {
      ok = ok && e.at("identities").get<bool>();
      if (e.contains("cost_bound_holds") &&
          cut.at("cut").at("size").get<int>() <= g.min_degree() - 1) {
        ok = ok && e.at("cost_bound_holds").get<bool>();
      }
      if (e.contains("star_bound_holds")) {
        ok = ok && e.at("star_bound_holds").get<bool>();
      }
    }
  }
  Emit(config, Dump(out));
  return ok ? kOk : kCheckFailed;
}

int CmdCensus(const RunConfig& config) {
  lly::CensusOptions options;
  options.max_n = config.max_n;
  options.extended = config.extended;
  options.regular_only = config.regular_only;
  options.jobs = config.jobs;
  const lly::CensusReport report = lly::RunCensus(options);
  Emit(config, config.csv_out ? lly::ToCsv(report) : Dump(lly::ToJson(report)));
  return report.ok() ? kOk : kCheckFailed;
}

int CmdBipartiteCensus(const RunConfig& config) {
  const lly::BipartiteCensusReport report =
      lly::EnumerateBipartiteCensus(config.max_edges, 8, config.jobs);
  Emit(config, config.csv_out ? lly::ToCsv(report) : Dump(lly::ToJson(report)));
  return report.ok() ? kOk : kCheckFailed;
}

int CmdFamily(const RunConfig& config) {
  const lly::FamilySpec spec = LoadSpec(config);
  json out = lly::ToJson(lly::VerifyFamily(spec, config.jobs));
  bool ok = out.at("ok").get<bool>();
  if (config.pairings) {
    json surveys = json::array();
    for (int i = 0; i < static_cast<int>(spec.inserts.size()); ++i) {
      if (spec.inserts[i].kind != lly::InsertOp::Kind::kK) continue;
      surveys.push_back({{"insert", i},
                         {"survey", lly::ToJson(lly::SurveyPairings(
                                        spec, i, config.jobs))}});
    }
    out["pairing_surveys"] = surveys;
  }
  Emit(config, Dump(out));
  return ok ? kOk : kCheckFailed;
}

int Diagnose(int code, const std::string& kind, const std::string& message) {
  std::cerr << json({{"error", kind}, {"message", message}, {"exit", code}}).dump()
            << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lin-Lu-Yau curvature and edge-connectivity checks"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", config.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", config.output, "Write the report here");
    auto* j = cmd->add_flag("--json", config.json_out, "JSON report (default)");
    auto* c = cmd->add_flag("--csv", config.csv_out, "CSV report");
    j->excludes(c);
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", config.input, "Graph file");
    cmd->add_option("--format", config.format, "graph6 or adj")
        ->check(CLI::IsMember({"graph6", "adj"}));
  };

  auto* curvature = app.add_subcommand("curvature", "Edge curvature report");
  add_input(curvature);
  add_common(curvature);
  curvature->add_option("--edge", config.edge, "Single edge U V")
      ->expected(2);
  curvature->add_flag("--early-exit", config.early_exit,
                      "Stop at the first negative edge; exit 2 if found");

  auto* connectivity = app.add_subcommand("connectivity", "Edge connectivity");
  add_input(connectivity);
  add_common(connectivity);
  connectivity->add_flag("--all-cuts", config.all_cuts, "List every minimum cut");

  auto* cut = app.add_subcommand("cut-analyze", "Minimum cut analysis");
  add_input(cut);
  add_common(cut);
  cut->add_option("--spec", config.spec, "Family spec for interior analysis");
  cut->add_option("--layers", config.layers, "Override the spec's layer count");
  cut->add_flag("--all-cuts", config.all_cuts, "Analyze every minimum cut");

  auto* census = app.add_subcommand("census", "Connected-graph census");
  add_common(census);
  census->add_option("--max-n", config.max_n, "Largest vertex count")
      ->check(CLI::PositiveNumber);
  census->add_flag("--extended", config.extended, "Allow max-n 7");
  census->add_flag("--regular-only", config.regular_only, "Regular graphs only");

  auto* bip = app.add_subcommand("bipartite-census", "Bipartite census");
  add_common(bip);
  bip->add_option("--max-edges", config.max_edges, "Largest edge count")
      ->check(CLI::PositiveNumber);

  auto* family = app.add_subcommand("family", "Verify a family truncation");
  add_common(family);
  family->add_option("--spec", config.spec, "Family spec JSON")->required();
  family->add_option("--layers", config.layers, "Override the layer count");
  family->add_flag("--pairings", config.pairings,
                   "Survey all K-operation pairings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*curvature) return CmdCurvature(config);
    if (*connectivity) return CmdConnectivity(config);
    if (*cut) return CmdCutAnalyze(config);
    if (*census) return CmdCensus(config);
    if (*bip) return CmdBipartiteCensus(config);
    if (*family) return CmdFamily(config);
  } catch (const lly::BudgetExceeded& e) {
    return Diagnose(kBudget, "budget_exceeded", e.what());
  } catch (const lly::LinearityViolation& e) {
    return Diagnose(kCheckFailed, "linearity_violation", e.what());
  } catch (const lly::InternalError& e) {
    return Diagnose(kCheckFailed, "internal_check_failed", e.what());
  } catch (const lly::ParseError& e) {
    return Diagnose(kUsage, "parse_error", e.what());
  } catch (const lly::DisconnectedError& e) {
    return Diagnose(kUsage, "disconnected", e.what());
  } catch (const lly::Error& e) {
    return Diagnose(kUsage, "invalid_input", e.what());
  }
  return kUsage;
}
