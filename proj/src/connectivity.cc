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

#include "lly/connectivity.h"

#include <algorithm>
#include <deque>
#include <set>

#include "lly/curvature.h"
#include "lly/errors.h"
#include "lly/parallel.h"
#include "lly/transport.h"

namespace lly {

namespace {

// Unit-capacity undirected max-flow. Each edge is one arc pair whose two
// residual capacities start at 1.
class UnitFlow {
 public:
  explicit UnitFlow(const Graph& g) : g_(g), adj_(g.vertex_count()) {
    for (const Edge& e : g.edges()) {
      const int id = static_cast<int>(head_.size());
      head_.push_back(e.v);
      head_.push_back(e.u);
      cap_.push_back(1);
      cap_.push_back(1);
      adj_[e.u].push_back(id);
      adj_[e.v].push_back(id + 1);
    }
  }

  // Returns the source side of a minimum cut.
  std::vector<Vertex> Run(const std::vector<Vertex>& sources,
                          const std::vector<Vertex>& sinks) {
    const int n = g_.vertex_count();
    std::vector<char> is_sink(n, 0);
    for (Vertex t : sinks) is_sink[t] = 1;
    for (Vertex s : sources) {
      if (is_sink[s]) throw InvalidArgument("source and sink sets overlap");
    }
    while (true) {
      std::vector<int> via(n, -2);
      std::deque<Vertex> queue;
      for (Vertex s : sources) {
        via[s] = -1;
        queue.push_back(s);
      }
      Vertex reached = -1;
      while (!queue.empty() && reached < 0) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (int id : adj_[u]) {
          const Vertex w = head_[id];
          if (cap_[id] > 0 && via[w] == -2) {
            via[w] = id;
            if (is_sink[w]) {
              reached = w;
              break;
            }
            queue.push_back(w);
          }
        }
      }
      if (reached < 0) {
        std::vector<Vertex> side;
        for (Vertex v = 0; v < n; ++v) {
          if (via[v] != -2) side.push_back(v);
        }
        return side;
      }
      for (Vertex v = reached; via[v] >= 0; v = head_[via[v] ^ 1]) {
        --cap_[via[v]];
        ++cap_[via[v] ^ 1];
      }
    }
  }

 private:
  const Graph& g_;
  std::vector<std::vector<int>> adj_;
  std::vector<Vertex> head_;
  std::vector<int> cap_;
};

// Kuhn's augmenting paths; returns match[v] for every vertex, or -1.
std::vector<Vertex> MatchBipartite(const Graph& h) {
  const int n = h.vertex_count();
  std::vector<Vertex> match(n, -1);
  std::vector<int> seen(n, -1);
  int stamp = 0;
  auto augment = [&](auto&& self, Vertex a) -> bool {
    for (Vertex b : h.neighbors(a)) {
      if (seen[b] == stamp) continue;
      seen[b] = stamp;
      if (match[b] < 0 || self(self, match[b])) {
        match[b] = a;
        match[a] = b;
        return true;
      }
    }
    return false;
  };
  for (Vertex a = 0; a < n; ++a) {
    if (h.side(a) != Side::kA || match[a] >= 0) continue;
    ++stamp;
    augment(augment, a);
  }
  return match;
}

}  // namespace

int MaximumBipartiteMatching(const Graph& h) {
  if (!h.has_sides()) throw InvalidArgument("matching needs annotated sides");
  int size = 0;
  const auto match = MatchBipartite(h);
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.side(v) == Side::kA && match[v] >= 0) ++size;
  }
  return size;
}

CutCertificate CutFromSide(const Graph& g, std::vector<Vertex> side_x) {
  std::sort(side_x.begin(), side_x.end());
  std::vector<char> in_x(g.vertex_count(), 0);
  for (Vertex v : side_x) {
    g.CheckVertex(v);
    in_x[v] = 1;
  }
  CutCertificate cert;
  cert.side_x = std::move(side_x);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in_x[v]) cert.side_y.push_back(v);
  }
  for (const Edge& e : g.edges()) {
    if (in_x[e.u] != in_x[e.v]) cert.cut_edges.push_back(e);
  }
  cert.size = static_cast<int>(cert.cut_edges.size());
  return cert;
}

void ValidateCut(const Graph& g, const CutCertificate& cert) {
  if (cert.side_x.empty() || cert.side_y.empty()) {
    throw InvalidArgument("cut sides must both be nonempty");
  }
  if (static_cast<int>(cert.side_x.size() + cert.side_y.size()) !=
      g.vertex_count()) {
    throw InvalidArgument("cut sides do not partition the vertices");
  }
  const CutCertificate expected = CutFromSide(g, cert.side_x);
  std::vector<Vertex> y = cert.side_y;
  std::sort(y.begin(), y.end());
  std::vector<Edge> edges = cert.cut_edges;
  std::sort(edges.begin(), edges.end());
  if (y != expected.side_y || edges != expected.cut_edges ||
      cert.size != expected.size) {
    throw InvalidArgument("cut edges do not match the cut sides");
  }
}

CutCertificate MinSeparatingCut(const Graph& g,
                                const std::vector<Vertex>& sources,
                                const std::vector<Vertex>& sinks) {
  for (Vertex v : sources) g.CheckVertex(v);
  for (Vertex v : sinks) g.CheckVertex(v);
  if (sources.empty() || sinks.empty()) {
    throw InvalidArgument("separating cut needs sources and sinks");
  }
  UnitFlow flow(g);
  return CutFromSide(g, flow.Run(sources, sinks));
}

CutCertificate EdgeConnectivity(const Graph& g, int jobs) {
  const int n = g.vertex_count();
  if (n == 0) throw InvalidArgument("edge connectivity of an empty graph");
  if (n == 1) return {};
  const auto components = ConnectedComponents(g);
  if (components.size() > 1) return CutFromSide(g, components[0]);
  const auto cuts = ParallelMap(n - 1, jobs, [&](int i) {
    return MinSeparatingCut(g, {0}, {i + 1});
  });
  const CutCertificate* best = &cuts[0];
  for (const auto& c : cuts) {
    if (c.size < best->size) best = &c;
  }
  return *best;
}

std::vector<CutCertificate> AllMinCuts(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices) {
    throw BudgetExceeded("exhaustive min-cut search limited to " +
                         std::to_string(max_vertices) + " vertices");
  }
  std::vector<CutCertificate> out;
  if (n < 2) return out;
  const int kappa = EdgeConnectivity(g).size;
  const std::vector<Edge> edges = g.edges();
  const uint32_t full = (1u << (n - 1)) - 1;
  for (uint32_t mask = 0; mask < full; ++mask) {
    const uint32_t x = (mask << 1) | 1u;
    int crossing = 0;
    for (const Edge& e : edges) {
      crossing += (((x >> e.u) ^ (x >> e.v)) & 1u) ? 1 : 0;
    }
    if (crossing != kappa) continue;
    std::vector<Vertex> side;
    for (Vertex v = 0; v < n; ++v) {
      if ((x >> v) & 1u) side.push_back(v);
    }
    out.push_back(CutFromSide(g, std::move(side)));
  }
  return out;
}

int CutBipartite::HVertexOf(Vertex g_vertex) const {
  const auto it = std::find(back_map.begin(), back_map.end(), g_vertex);
  return it == back_map.end() ? -1 : static_cast<int>(it - back_map.begin());
}

Edge CutBipartite::HEdgeOf(const Edge& g_edge) const {
  const int a = HVertexOf(g_edge.u);
  const int b = HVertexOf(g_edge.v);
  if (a < 0 || b < 0 || !h.has_edge(a, b)) {
    throw InvalidArgument("edge " + g_edge.ToString() + " is not a cut edge");
  }
  return Edge::Of(a, b);
}

CutBipartite MakeCutBipartite(const Graph& g, const CutCertificate& cert) {
  ValidateCut(g, cert);
  std::set<Vertex> in_x(cert.side_x.begin(), cert.side_x.end());
  std::set<Vertex> ends_x;
  std::set<Vertex> ends_y;
  for (const Edge& e : cert.cut_edges) {
    for (Vertex w : {e.u, e.v}) (in_x.count(w) ? ends_x : ends_y).insert(w);
  }
  CutBipartite cb;
  cb.swapped = ends_x.size() > ends_y.size();
  const auto& part_a = cb.swapped ? ends_y : ends_x;
  const auto& part_b = cb.swapped ? ends_x : ends_y;
  cb.p = static_cast<int>(part_a.size());
  cb.q = static_cast<int>(part_b.size());
  cb.r = cert.size;
  cb.back_map.assign(part_a.begin(), part_a.end());
  cb.back_map.insert(cb.back_map.end(), part_b.begin(), part_b.end());
  std::vector<Edge> h_edges;
  for (const Edge& e : cert.cut_edges) {
    h_edges.push_back(Edge::Of(
        static_cast<int>(std::find(cb.back_map.begin(), cb.back_map.end(), e.u) -
                         cb.back_map.begin()),
        static_cast<int>(std::find(cb.back_map.begin(), cb.back_map.end(), e.v) -
                         cb.back_map.begin())));
  }
  std::vector<Side> sides(cb.p, Side::kA);
  sides.resize(cb.p + cb.q, Side::kB);
  cb.h = Graph::FromEdges(cb.p + cb.q, h_edges).WithSides(std::move(sides));
  return cb;
}

CutQuantities ComputeCutQuantities(const CutBipartite& cb, const Edge& e) {
  const Edge he = cb.HEdgeOf(e);
  const Graph& h = cb.h;
  CutQuantities cq;
  cq.s1 = h.degree(he.u) + h.degree(he.v) - 2;

  std::vector<char> covered(h.vertex_count(), 0);
  covered[he.u] = covered[he.v] = 1;
  for (Vertex end : {he.u, he.v}) {
    for (Vertex w : h.neighbors(end)) covered[w] = 1;
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (!covered[v]) rest.push_back(v);
  }
  const Graph remainder = h.InducedSubgraph(rest);
  const auto match = MatchBipartite(remainder);
  std::set<Edge> matching;
  for (Vertex i = 0; i < remainder.vertex_count(); ++i) {
    if (match[i] > i) matching.insert(Edge::Of(rest[i], rest[match[i]]));
  }
  cq.c = static_cast<int>(matching.size());
  cq.d = cb.p + cb.q - 2 - cq.s1 - 2 * cq.c;
  cq.f = cb.r - 1 - cq.s1 - cq.c - cq.d;
  if (cq.s1 + cq.d + 2 * cq.f != 2 * cb.r - (cb.p + cb.q)) {
    throw InternalError("cut quantity identities are inconsistent");
  }

  for (const Edge& m : matching) covered[m.u] = covered[m.v] = 1;
  for (const Edge& x : h.edges()) {
    if (x == he || x.shares_endpoint(he) || matching.count(x)) continue;
    const int touch = covered[x.u] + covered[x.v];
    if (touch == 2) {
      ++cq.f_by_overlap;
    } else if (touch == 1) {
      ++cq.d_by_overlap;
    } else {
      ++cq.untouched;
    }
  }
  return cq;
}

bool CutIdentitiesHold(const CutBipartite& cb, const CutQuantities& cq) {
  return cq.s1 + cq.c + cq.d + cq.f == cb.r - 1 &&
         cq.s1 + 2 * cq.c + cq.d == cb.p + cb.q - 2 &&
         cq.s1 + cq.d + 2 * cq.f == 2 * cb.r - (cb.p + cb.q);
}

CostBoundCheck CheckCutEdgeCostBound(const Graph& g, const CutCertificate& cert,
                                   const Edge& e0, std::optional<int> delta) {
  const CutBipartite cb = MakeCutBipartite(g, cert);
  const Edge e = Edge::Of(e0.u, e0.v);
  if (!std::binary_search(cert.cut_edges.begin(), cert.cut_edges.end(), e)) {
    throw PreconditionError("edge " + e.ToString() + " is not a cut edge");
  }
  CostBoundCheck out;
  out.delta = delta.value_or(g.min_degree());
  if (g.degree(e.u) != out.delta || g.degree(e.v) != out.delta) {
    throw PreconditionError("endpoints of " + e.ToString() +
                            " do not both have degree " +
                            std::to_string(out.delta));
  }
  out.quantities = ComputeCutQuantities(cb, e);
  const CutQuantities& q = out.quantities;
  out.cost = CostOfEdge(g, e);
  out.bound = q.c + 2 * q.d + 3 * (q.f + out.delta - cb.r);
  out.holds = out.cost >= out.bound;
  return out;
}

Rational StarCutLowerBound(int dx, int dy, int alpha, int s1) {
  const int64_t sigma =
      static_cast<int64_t>(std::max(dx, dy)) * (std::min(dx, dy) + 1);
  const int64_t prod = static_cast<int64_t>(dx) * dy;
  const int64_t numer = sigma + (prod - static_cast<int64_t>(alpha + 2) * dx) +
                        (prod - 2 * static_cast<int64_t>(s1 + 1) * dy);
  return Rational(numer, sigma);
}

StarBoundCheck CheckStarCutLowerBound(const Graph& g,
                                      const CutCertificate& cert,
                                      const Edge& e, std::optional<int> delta) {
  const CutBipartite cb = MakeCutBipartite(g, cert);
  if (!IsStar(cb.h)) throw PreconditionError("cut graph is not a star");
  const int d = delta.value_or(g.min_degree());
  if (cert.size > d - 1) {
    throw PreconditionError("cut size " + std::to_string(cert.size) +
                            " exceeds delta - 1 = " + std::to_string(d - 1));
  }
  const Edge he = cb.HEdgeOf(e);
  auto evaluate = [&](Vertex hx, Vertex hy) {
    StarBoundCheck out;
    out.x = cb.back_map[hx];
    out.y = cb.back_map[hy];
    const int dx = g.degree(out.x);
    const int dy = g.degree(out.y);
    out.alpha = static_cast<int>(CommonNeighbors(g, out.x, out.y).size());
    out.s1 = cb.h.degree(hx) + cb.h.degree(hy) - 2;
    out.rho = Max(Rational(1, dx + 1), Rational(1, dy + 1));
    out.w = Wasserstein(g, VertexMeasure(g, out.x, out.rho),
                        VertexMeasure(g, out.y, out.rho))
                .cost;
    out.bound = StarCutLowerBound(dx, dy, out.alpha, out.s1);
    out.holds = out.w >= out.bound;
    return out;
  };
  // Part A has the single centre vertex 0 unless H = K_{1,1}.
  const Vertex centre = cb.h.degree(he.u) >= cb.h.degree(he.v) ? he.u : he.v;
  StarBoundCheck result = evaluate(centre, he.other(centre));
  if (cb.r == 1) {
    StarBoundCheck flipped = evaluate(he.other(centre), centre);
    if (!flipped.holds) result = flipped;
  }
  return result;
}

}  // namespace lly
