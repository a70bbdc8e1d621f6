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

// Exact earth mover's distance between finitely supported probability
// measures on the vertices of a graph, with the hop metric as ground cost.
//
// Both measures are scaled by the lcm of their denominators, the resulting
// integer transportation problem is solved by successive shortest paths, and
// the flow is scaled back. Optimality is certified by a 1-Lipschitz potential
// recovered from the residual network.

#ifndef LLY_TRANSPORT_H_
#define LLY_TRANSPORT_H_

#include <map>
#include <optional>
#include <utility>

#include "lly/graph.h"
#include "lly/rational.h"

namespace lly {

class Measure {
 public:
  // Throws InvalidArgument on negative masses or total mass != 1. Zero
  // masses are dropped.
  explicit Measure(std::map<Vertex, Rational> masses);
  static Measure PointMass(Vertex v);

  const std::map<Vertex, Rational>& support() const { return masses_; }
  // 0 outside the support.
  Rational mass(Vertex v) const;

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  std::map<Vertex, Rational> masses_;
};

// Mass rho at x and (1 - rho) / deg(x) on every neighbour of x.
// Throws InvalidArgument unless 0 <= rho <= 1, PreconditionError when x is
// isolated and rho < 1.
Measure VertexMeasure(const Graph& g, Vertex x, const Rational& rho);

struct TransportPlan {
  // (source, target) -> mass; zero entries are omitted.
  std::map<std::pair<Vertex, Vertex>, Rational> entries;
  Rational cost;
};

// Optimal plan and its exact cost. Throws DisconnectedError if some pair of
// support vertices is at infinite distance.
TransportPlan Wasserstein(const Graph& g, const Measure& mu1,
                          const Measure& mu2);

struct DualCertificate {
  // 1-Lipschitz on the union of the supports.
  std::map<Vertex, Rational> potential;
  // Sum of potential * (mu1 - mu2).
  Rational value;
};

// Throws InvalidArgument if the plan's marginals differ from mu1, mu2.
// Returns nullopt if no potential is tight on every edge of the plan, which
// happens exactly when the plan is not optimal.
std::optional<DualCertificate> FindDualCertificate(const Graph& g,
                                                   const Measure& mu1,
                                                   const Measure& mu2,
                                                   const TransportPlan& plan);

// True iff a dual certificate exists and its value equals the plan's ground
// cost. Throws InvalidArgument on marginal mismatch.
bool VerifyPlanOptimal(const Graph& g, const Measure& mu1, const Measure& mu2,
                       const TransportPlan& plan);

// Sum of d(a, b) * mass over the plan's entries.
Rational PlanGroundCost(const Graph& g, const TransportPlan& plan);

}  // namespace lly

#endif  // LLY_TRANSPORT_H_
