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

// Exhaustive checks over all small connected graphs: nonnegative edge
// curvature forces edge connectivity equal to the minimum degree, and the
// cut-edge bounds hold on every minimum cut.

#ifndef LLY_CENSUS_H_
#define LLY_CENSUS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lly/graph.h"
#include "lly/rational.h"

namespace lly {

// One representative per isomorphism class of connected graphs on n
// vertices, in canonical-form order. Built by attaching a new vertex to
// every nonempty subset of each (n-1)-vertex class.
std::vector<Graph> ConnectedGraphs(int n);

struct CensusOptions {
  int max_n = 6;
  // Required for max_n = 7.
  bool extended = false;
  bool regular_only = false;
  int jobs = 1;
};

struct CensusFinding {
  std::string graph6;
  // "kappa_prime", "edge_star_size", "cost_bound", "star_bound", "identities",
  // "linearity", "rho_choice", "cost_formula".
  std::string kind;
  std::string detail;
};

struct CensusGraphSummary {
  std::string graph6;
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int edge_connectivity = 0;
  bool regular = false;
  bool nonnegative = false;
  // Only when the profile ran to completion.
  std::optional<Rational> min_curvature;
  int min_cut_count = 0;
};

struct CensusCounters {
  int graphs = 0;
  int nonnegative = 0;
  int min_cuts = 0;
  int cut_edges = 0;
  int cost_bound_checked = 0;
  // Cost-bound checks on cuts of size delta, outside the range the bound
  // is stated for; tallied apart.
  int cost_bound_full_cut_checked = 0;
  int cost_bound_full_cut_failed = 0;
  // Nonnegatively curved cut edges of cuts below delta, checked for the
  // lower bound on their edge-star size.
  int edge_star_checked = 0;
  int star_checked = 0;
  // Equal-degree edges whose curvature matched the cost formula.
  int cost_formula_checked = 0;
};

struct CensusReport {
  CensusOptions options;
  std::map<int, CensusCounters> by_n;
  std::vector<CensusGraphSummary> graphs;
  std::vector<CensusFinding> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

// Throws BudgetExceeded when max_n > 7, or max_n = 7 without `extended`.
CensusReport RunCensus(const CensusOptions& options);

// Checks for a single graph; appends findings. Exposed for the CLI and
// tests.
CensusGraphSummary AnalyzeCensusGraph(const Graph& g, CensusCounters& counters,
                                      std::vector<CensusFinding>& findings);

}  // namespace lly

#endif  // LLY_CENSUS_H_
