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

#include "lly/census.h"

#include <algorithm>

#include "lly/canonical.h"
#include "lly/connectivity.h"
#include "lly/curvature.h"
#include "lly/errors.h"
#include "lly/graph_io.h"
#include "lly/parallel.h"

namespace lly {

std::vector<Graph> ConnectedGraphs(int n) {
  if (n < 1) return {};
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      const int old = g.vertex_count();
      for (uint32_t mask = 1; mask < (1u << old); ++mask) {
        std::vector<Edge> edges = g.edges();
        for (Vertex v = 0; v < old; ++v) {
          if ((mask >> v) & 1u) edges.push_back({v, old});
        }
        Graph child = Graph::FromEdges(old + 1, edges);
        next.emplace(CanonicalForm(child), std::move(child));
      }
    }
    level.clear();
    for (auto& [form, g] : next) level.push_back(std::move(g));
  }
  return level;
}

CensusGraphSummary AnalyzeCensusGraph(const Graph& g, CensusCounters& counters,
                                      std::vector<CensusFinding>& findings) {
  CensusGraphSummary summary;
  summary.graph6 = ToGraph6(g);
  summary.n = g.vertex_count();
  summary.m = g.edge_count();
  summary.min_degree = g.min_degree();
  summary.regular = g.min_degree() == g.max_degree();
  auto find = [&](std::string kind, std::string detail) {
    findings.push_back({summary.graph6, std::move(kind), std::move(detail)});
  };
  ++counters.graphs;
  if (g.vertex_count() < 2) {
    summary.nonnegative = true;
    ++counters.nonnegative;
    return summary;
  }

  std::map<Edge, Rational> kappa;
  try {
    ProfileOptions options;
    options.early_exit = true;
    const CurvatureReport profile = CurvatureProfile(g, options);
    summary.nonnegative = profile.complete && profile.nonnegative;
    if (profile.complete) summary.min_curvature = profile.min_curvature;
    for (const EdgeCurvature& ec : profile.edges) {
      kappa[ec.edge] = ec.kappa;
      const int dx = ec.degree_u;
      const int dy = ec.degree_v;
      const Rational rho = Max(Rational(1, dx + 1), Rational(1, dy + 1));
      if (NormalizedKappaRho(g, ec.edge.u, ec.edge.v, rho) != ec.kappa) {
        find("rho_choice", "edge " + ec.edge.ToString() +
                               " disagrees at the larger uniform idleness");
      }
      if (dx == dy) {
        ++counters.cost_formula_checked;
        if (KappaFromCost(dx, CostOfEdge(g, ec.edge)) != ec.kappa) {
          find("cost_formula", "edge " + ec.edge.ToString());
        }
      }
    }
  } catch (const LinearityViolation& e) {
    find("linearity", e.what());
    summary.nonnegative = false;
  }
  if (summary.nonnegative) ++counters.nonnegative;

  const int delta = g.min_degree();
  const int kappa_prime = EdgeConnectivity(g).size;
  summary.edge_connectivity = kappa_prime;
  if (summary.nonnegative && kappa_prime != delta) {
    find("kappa_prime", "nonnegative curvature but edge connectivity " +
                            std::to_string(kappa_prime) + " != delta " +
                            std::to_string(delta));
  }

  auto kappa_of = [&](const Edge& e) {
    auto it = kappa.find(e);
    if (it == kappa.end()) it = kappa.emplace(e, KappaLly(g, e)).first;
    return it->second;
  };

  const auto cuts = AllMinCuts(g);
  summary.min_cut_count = static_cast<int>(cuts.size());
  counters.min_cuts += summary.min_cut_count;
  for (const CutCertificate& cert : cuts) {
    const CutBipartite cb = MakeCutBipartite(g, cert);
    const bool star = IsStar(cb.h);
    const int r = cb.r;
    for (const Edge& e : cert.cut_edges) {
      ++counters.cut_edges;
      const CutQuantities q = ComputeCutQuantities(cb, e);
      if (!CutIdentitiesHold(cb, q)) {
        find("identities", "edge " + e.ToString());
      }
      if (g.degree(e.u) == delta && g.degree(e.v) == delta) {
        const CostBoundCheck check = CheckCutEdgeCostBound(g, cert, e, delta);
        if (r <= delta - 1) {
          ++counters.cost_bound_checked;
          if (!check.holds) {
            find("cost_bound", "edge " + e.ToString() + " cost " +
                                   std::to_string(check.cost) + " < bound " +
                                   std::to_string(check.bound));
          }
        } else {
          ++counters.cost_bound_full_cut_checked;
          if (!check.holds) ++counters.cost_bound_full_cut_failed;
        }
        if (r <= delta - 1 && kappa_of(e).sign() >= 0) {
          ++counters.edge_star_checked;
          const int lhs = 2 * q.s1;
          const int rhs = 2 * r - (cb.p + cb.q);
          const bool ok = r == delta - 1 ? lhs >= rhs : lhs > rhs;
          if (!ok) {
            find("edge_star_size", "edge " + e.ToString() +
                                  " has nonnegative curvature but |S_1| = " +
                                  std::to_string(q.s1));
          }
        }
      }
      if (star && r <= delta - 1) {
        ++counters.star_checked;
        const StarBoundCheck check = CheckStarCutLowerBound(g, cert, e, delta);
        if (!check.holds) {
          find("star_bound", "edge " + e.ToString() + " W " +
                                 check.w.to_string() + " < " +
                                 check.bound.to_string());
        }
      }
    }
  }
  return summary;
}

CensusReport RunCensus(const CensusOptions& options) {
  if (options.max_n > 7 || (options.max_n == 7 && !options.extended)) {
    throw BudgetExceeded("census supports max-n <= 6, or 7 with --extended");
  }
  CensusReport report;
  report.options = options;
  for (int n = 1; n <= options.max_n; ++n) {
    std::vector<Graph> graphs = ConnectedGraphs(n);
    if (options.regular_only) {
      std::erase_if(graphs, [](const Graph& g) {
        return g.min_degree() != g.max_degree();
      });
    }
    struct Outcome {
      CensusGraphSummary summary;
      CensusCounters counters;
      std::vector<CensusFinding> findings;
    };
    auto outcomes = ParallelMap(static_cast<int>(graphs.size()), options.jobs,
                                [&](int i) {
                                  Outcome out;
                                  out.summary = AnalyzeCensusGraph(
                                      graphs[i], out.counters, out.findings);
                                  return out;
                                });
    CensusCounters& total = report.by_n[n];
    for (Outcome& o : outcomes) {
      total.graphs += o.counters.graphs;
      total.nonnegative += o.counters.nonnegative;
      total.min_cuts += o.counters.min_cuts;
      total.cut_edges += o.counters.cut_edges;
      total.cost_bound_checked += o.counters.cost_bound_checked;
      total.cost_bound_full_cut_checked += o.counters.cost_bound_full_cut_checked;
      total.cost_bound_full_cut_failed += o.counters.cost_bound_full_cut_failed;
      total.edge_star_checked += o.counters.edge_star_checked;
      total.star_checked += o.counters.star_checked;
      total.cost_formula_checked += o.counters.cost_formula_checked;
      report.graphs.push_back(std::move(o.summary));
      for (auto& f : o.findings) report.counterexamples.push_back(std::move(f));
    }
  }
  return report;
}

}  // namespace lly
