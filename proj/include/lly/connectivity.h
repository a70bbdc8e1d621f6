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

// Edge connectivity, minimum cuts, the bipartite graph formed by a cut's
// edges, and the per-edge counting quantities and transport bounds derived
// from it.

#ifndef LLY_CONNECTIVITY_H_
#define LLY_CONNECTIVITY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "lly/graph.h"
#include "lly/rational.h"

namespace lly {

struct CutCertificate {
  std::vector<Edge> cut_edges;  // Sorted.
  std::vector<Vertex> side_x;   // Sorted.
  std::vector<Vertex> side_y;   // Sorted.
  int size = 0;
};

// Global minimum edge cut by unit-capacity max-flow from vertex 0 to every
// other vertex; ties go to the smallest sink. A disconnected graph has
// connectivity 0 with the component of vertex 0 as side_x, and a single
// vertex gives 0 with an empty certificate. Throws InvalidArgument on an
// empty graph.
CutCertificate EdgeConnectivity(const Graph& g, int jobs = 1);

// Minimum edge cut separating every vertex of `sources` from every vertex of
// `sinks`; side_x is the source side of the residual graph.
CutCertificate MinSeparatingCut(const Graph& g,
                                const std::vector<Vertex>& sources,
                                const std::vector<Vertex>& sinks);

// Every minimum cut, by exhaustive search over vertex subsets containing
// vertex 0. Throws BudgetExceeded above `max_vertices`.
std::vector<CutCertificate> AllMinCuts(const Graph& g, int max_vertices = 10);

// Checks that the sides partition V and the cut edges are exactly the edges
// between them. Throws InvalidArgument otherwise.
void ValidateCut(const Graph& g, const CutCertificate& cert);

// Cut certificate induced by the vertex set `side_x`.
CutCertificate CutFromSide(const Graph& g, std::vector<Vertex> side_x);

struct CutBipartite {
  // Vertices 0..p-1 form part A, p..p+q-1 part B; sides are annotated.
  Graph h;
  int p = 0;
  int q = 0;
  int r = 0;
  // H vertex -> G vertex.
  std::vector<Vertex> back_map;
  // False when A holds the side_x endpoints; true when the parts were
  // swapped so that p <= q.
  bool swapped = false;

  // H vertex of a G vertex, or -1.
  int HVertexOf(Vertex g_vertex) const;
  // H edge for a cut edge of G. Throws InvalidArgument if not a cut edge.
  Edge HEdgeOf(const Edge& g_edge) const;
};

CutBipartite MakeCutBipartite(const Graph& g, const CutCertificate& cert);

struct CutQuantities {
  int s1 = 0;
  int c = 0;
  int d = 0;
  int f = 0;
  // Counts from the edge-by-edge reading: edges outside S_1(e), c and e
  // meeting V(S_1(e) + c) in exactly one, two, or no vertices. Reported
  // alongside d and f; not required to match.
  int d_by_overlap = 0;
  int f_by_overlap = 0;
  int untouched = 0;
};

// For a cut edge `e` of G (given in G's labels). s1 = |S_1(e)| in H, c is a
// maximum matching of H minus the endpoints of S_1(e) and e, and d, f follow
// from the edge and vertex totals of H. Throws InternalError if the third
// identity fails.
CutQuantities ComputeCutQuantities(const CutBipartite& cb, const Edge& e);

// s1 + c + d + f == r - 1, s1 + 2c + d == p + q - 2, s1 + d + 2f == 2r - p - q.
bool CutIdentitiesHold(const CutBipartite& cb, const CutQuantities& cq);

struct CostBoundCheck {
  bool holds = false;
  int64_t cost = 0;
  int64_t bound = 0;
  int delta = 0;
  CutQuantities quantities;
};

// cost(e0) >= c + 2d + 3(f + delta - r) for a cut edge e0 whose endpoints
// both have degree delta. `delta` defaults to the minimum degree of g.
// Throws PreconditionError when the endpoint degrees differ from delta.
CostBoundCheck CheckCutEdgeCostBound(const Graph& g, const CutCertificate& cert,
                                   const Edge& e0,
                                   std::optional<int> delta = std::nullopt);

// (sigma + (dx dy - (alpha + 2) dx) + (dx dy - 2 (s1 + 1) dy)) / sigma with
// sigma = max(dx, dy) * (min(dx, dy) + 1).
Rational StarCutLowerBound(int dx, int dy, int alpha, int s1);

struct StarBoundCheck {
  bool holds = false;
  Vertex x = 0;  // Star centre side.
  Vertex y = 0;
  int alpha = 0;
  int s1 = 0;
  Rational rho;
  Rational w;
  Rational bound;
};

// Transport lower bound for a cut edge e = xy of a cut whose H is a star
// with centre x. For H = K_{1,1} both orientations are checked and the
// weaker verdict is returned. Throws PreconditionError unless H is a star
// and cert.size <= delta - 1.
StarBoundCheck CheckStarCutLowerBound(const Graph& g,
                                      const CutCertificate& cert,
                                      const Edge& e,
                                      std::optional<int> delta = std::nullopt);

// Maximum matching size of a bipartite graph with annotated sides.
int MaximumBipartiteMatching(const Graph& h);

}  // namespace lly

#endif  // LLY_CONNECTIVITY_H_
