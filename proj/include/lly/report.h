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

// JSON and CSV renderings of the library's reports. Rationals are always
// {"num": ..., "den": ...}; each field is a JSON integer when it fits in 64
// bits and a decimal string otherwise.

#ifndef LLY_REPORT_H_
#define LLY_REPORT_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "lly/bipartite.h"
#include "lly/census.h"
#include "lly/connectivity.h"
#include "lly/curvature.h"
#include "lly/families.h"
#include "lly/rational.h"

namespace lly {

nlohmann::json ToJson(const Rational& r);
nlohmann::json ToJson(const Edge& e);
// Adjacency lists, plus "sides" when annotated.
nlohmann::json ToJson(const Graph& g);
nlohmann::json ToJson(const CutCertificate& cert);
nlohmann::json ToJson(const CutQuantities& q);
nlohmann::json ToJson(const CurvatureReport& report);
nlohmann::json ToJson(const BipartiteCensusReport& report);
nlohmann::json ToJson(const CensusReport& report);
nlohmann::json ToJson(const FamilyReport& report);
nlohmann::json ToJson(const std::vector<PairingOutcome>& survey);

// u,v,d_u,d_v,rho_num,rho_den,kappa_num,kappa_den
std::string ToCsv(const CurvatureReport& report);
// p,q,r,min_edge_star,slack_num,slack_den,class
std::string ToCsv(const BipartiteCensusReport& report);
// graph6,n,m,min_degree,edge_connectivity,regular,nonnegative,min_kappa_num,min_kappa_den
std::string ToCsv(const CensusReport& report);

// Global minimum cut, minimum degree, the cut graph and per-edge
// quantities with the cost and star-bound verdicts wherever their
// preconditions hold. With `all_cuts`, every minimum cut is listed.
nlohmann::json CutAnalysisJson(const Graph& g, bool all_cuts = false,
                               std::optional<int> delta = std::nullopt);

}  // namespace lly

#endif  // LLY_REPORT_H_
