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

#include "lly/curvature.h"

#include <algorithm>

#include "lly/errors.h"
#include "lly/parallel.h"
#include "lly/transport.h"

namespace lly {

Rational KappaRho(const Graph& g, Vertex x, Vertex y, const Rational& rho) {
  g.CheckVertex(x);
  g.CheckVertex(y);
  if (x == y) throw InvalidArgument("curvature needs two distinct vertices");
  const HopDistance d = BfsDistances(g, x)[y];
  if (!d.reachable()) {
    throw DisconnectedError("vertices " + std::to_string(x) + " and " +
                            std::to_string(y) + " are not connected");
  }
  const TransportPlan plan =
      Wasserstein(g, VertexMeasure(g, x, rho), VertexMeasure(g, y, rho));
  return Rational(1) - plan.cost / Rational(d.hops());
}

Rational NormalizedKappaRho(const Graph& g, Vertex x, Vertex y,
                            const Rational& rho) {
  if (rho >= 1) throw InvalidArgument("normalized curvature needs rho < 1");
  return KappaRho(g, x, y, rho) / (Rational(1) - rho);
}

Rational LinearRegionIdleness(int dx, int dy) {
  if (dx <= 0 || dy <= 0) throw InvalidArgument("degrees must be positive");
  return Rational(1, static_cast<int64_t>(std::max(dx, dy)) + 1);
}

Rational KappaLly(const Graph& g, Vertex x, Vertex y) {
  g.CheckVertex(x);
  g.CheckVertex(y);
  if (!g.has_edge(x, y)) {
    throw PreconditionError("curvature is computed for adjacent pairs only");
  }
  const Rational rho = LinearRegionIdleness(g.degree(x), g.degree(y));
  const Rational value = NormalizedKappaRho(g, x, y, rho);
  const Rational mid = (Rational(1) + rho) / Rational(2);
  const Rational check = NormalizedKappaRho(g, x, y, mid);
  if (value != check) {
    throw LinearityViolation("edge " + Edge::Of(x, y).ToString() + ": " +
                             value.to_string() + " at rho=" + rho.to_string() +
                             " but " + check.to_string() +
                             " at rho=" + mid.to_string());
  }
  return value;
}

int64_t CostOfEdge(const Graph& g, const Edge& e) {
  g.CheckEdge(e);
  const int d = g.degree(e.u);
  if (g.degree(e.v) != d) {
    throw PreconditionError("cost needs equal endpoint degrees on " +
                            e.ToString());
  }
  const Rational rho(1, d + 1);
  const TransportPlan plan =
      Wasserstein(g, VertexMeasure(g, e.u, rho), VertexMeasure(g, e.v, rho));
  const Rational cost = plan.cost * Rational(d + 1);
  if (!cost.is_integer()) {
    throw InternalError("non-integral cost " + cost.to_string());
  }
  return cost.to_int64();
}

Rational KappaFromCost(int degree, int64_t cost) {
  const Rational dp1(degree + 1);
  return dp1 / Rational(degree) * (Rational(1) - Rational(cost) / dp1);
}

std::vector<EdgeCurvature> EdgeCurvatures(const Graph& g,
                                          const std::vector<Edge>& edges,
                                          int jobs) {
  return ParallelMap(static_cast<int>(edges.size()), jobs, [&](int i) {
    const Edge& e = edges[i];
    EdgeCurvature rec;
    rec.edge = e;
    rec.degree_u = g.degree(e.u);
    rec.degree_v = g.degree(e.v);
    rec.rho_used = LinearRegionIdleness(rec.degree_u, rec.degree_v);
    rec.kappa = KappaLly(g, e.u, e.v);
    return rec;
  });
}

CurvatureReport CurvatureProfile(const Graph& g, const ProfileOptions& options) {
  if (!IsConnected(g)) throw DisconnectedError("curvature profile needs a connected graph");
  const std::vector<Edge> all = g.edges();
  CurvatureReport report;
  const int batch =
      options.early_exit ? std::max(1, options.jobs) * 4 : static_cast<int>(all.size());
  for (size_t start = 0; start < all.size(); start += batch) {
    const size_t stop = std::min(all.size(), start + batch);
    const std::vector<Edge> chunk(all.begin() + start, all.begin() + stop);
    for (EdgeCurvature& rec : EdgeCurvatures(g, chunk, options.jobs)) {
      const bool negative = rec.kappa.sign() < 0;
      if (!report.min_curvature || rec.kappa < *report.min_curvature) {
        report.min_curvature = rec.kappa;
      }
      report.edges.push_back(std::move(rec));
      if (negative) {
        report.nonnegative = false;
        if (options.early_exit) {
          report.complete = report.edges.size() == all.size();
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace lly
