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

// Ollivier curvature with idleness and its Lin-Lu-Yau limit on edges.

#ifndef LLY_CURVATURE_H_
#define LLY_CURVATURE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "lly/graph.h"
#include "lly/rational.h"

namespace lly {

// 1 - W(mu_x^rho, mu_y^rho) / d(x, y).
// Throws InvalidArgument if x == y or rho is outside [0, 1],
// DisconnectedError if x and y are in different components.
Rational KappaRho(const Graph& g, Vertex x, Vertex y, const Rational& rho);

// KappaRho / (1 - rho). Requires rho < 1.
Rational NormalizedKappaRho(const Graph& g, Vertex x, Vertex y,
                            const Rational& rho);

// 1 / (max(dx, dy) + 1), where the idleness function is linear up to 1.
Rational LinearRegionIdleness(int dx, int dy);

// Lin-Lu-Yau curvature of the edge xy, evaluated at
// LinearRegionIdleness(dx, dy) and cross-checked at the midpoint between
// that idleness and 1. Throws PreconditionError for non-adjacent x, y and
// LinearityViolation if the two evaluations differ.
Rational KappaLly(const Graph& g, Vertex x, Vertex y);
inline Rational KappaLly(const Graph& g, const Edge& e) {
  return KappaLly(g, e.u, e.v);
}

// (D + 1) * W(mu_u^{1/(D+1)}, mu_v^{1/(D+1)}) for an edge whose endpoints
// both have degree D; an integer. Throws PreconditionError otherwise.
int64_t CostOfEdge(const Graph& g, const Edge& e);

// ((D + 1) / D) * (1 - cost / (D + 1)).
Rational KappaFromCost(int degree, int64_t cost);

struct EdgeCurvature {
  Edge edge;
  int degree_u = 0;
  int degree_v = 0;
  Rational rho_used;
  Rational kappa;
};

struct CurvatureReport {
  // In edge order. With early exit, ends at the first negative edge.
  std::vector<EdgeCurvature> edges;
  bool complete = true;
  std::optional<Rational> min_curvature;
  bool nonnegative = true;
};

struct ProfileOptions {
  bool early_exit = false;
  int jobs = 1;
};

// Throws DisconnectedError on a disconnected graph.
CurvatureReport CurvatureProfile(const Graph& g,
                                 const ProfileOptions& options = {});

// Curvature of the given edges only; no connectivity requirement beyond
// each edge's own component.
std::vector<EdgeCurvature> EdgeCurvatures(const Graph& g,
                                          const std::vector<Edge>& edges,
                                          int jobs = 1);

}  // namespace lly

#endif  // LLY_CURVATURE_H_
