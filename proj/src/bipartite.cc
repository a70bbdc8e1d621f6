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

#include "lly/bipartite.h"

#include <algorithm>
#include <utility>

#include "lly/canonical.h"
#include "lly/errors.h"
#include "lly/parallel.h"

namespace lly {

namespace {

Graph WithParts(int p, int q, const std::vector<Edge>& edges) {
  std::vector<Side> sides(p, Side::kA);
  sides.resize(p + q, Side::kB);
  return Graph::FromEdges(p + q, edges).WithSides(std::move(sides));
}

int PartSize(const Graph& h, Side s) {
  return static_cast<int>(std::count(h.sides().begin(), h.sides().end(), s));
}

void CheckParts(const Graph& h) {
  if (!h.has_sides()) throw InvalidArgument("bipartition is not annotated");
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.side(v) == Side::kUnassigned) {
      throw InvalidArgument("vertex " + std::to_string(v) + " has no part");
    }
  }
  for (const Edge& e : h.edges()) {
    if (h.side(e.u) == h.side(e.v)) {
      throw InvalidArgument("edge " + e.ToString() + " lies inside one part");
    }
  }
}

// Star component centre, or -1 if the component is not a star with at
// least two leaves.
Vertex StarCentre(const Graph& h, const std::vector<Vertex>& comp) {
  const int size = static_cast<int>(comp.size());
  if (size < 3) return -1;
  Vertex centre = -1;
  int edges = 0;
  for (Vertex v : comp) {
    edges += h.degree(v);
    if (h.degree(v) == size - 1) centre = v;
  }
  return edges / 2 == size - 1 ? centre : -1;
}

}  // namespace

std::string RigidityClass::ToString() const {
  switch (kind) {
    case RigidKind::kK22:
      return "K22";
    case RigidKind::kH1:
      return "H1(" + std::to_string(n) + ")";
    case RigidKind::kH2:
      return "H2(" + std::to_string(n) + ")";
    case RigidKind::kH3:
      return "H3(" + std::to_string(n) + ")";
    case RigidKind::kH4:
      return "H4(" + std::to_string(n) + ")";
    case RigidKind::kNotRigid:
      return "NotRigid";
    case RigidKind::kStar:
      return "Star";
    case RigidKind::kHasIsolated:
      return "HasIsolated";
  }
  return "?";
}

int MinEdgeStar(const Graph& h) {
  if (h.edge_count() == 0) throw InvalidArgument("graph has no edges");
  int best = h.vertex_count() * 2;
  for (const Edge& e : h.edges()) {
    best = std::min(best, h.degree(e.u) + h.degree(e.v) - 2);
  }
  return best;
}

BoundCheck CheckBound(const Graph& h) {
  if (h.edge_count() == 0) throw InvalidArgument("graph has no edges");
  if (TwoColoring(h).empty()) throw PreconditionError("not bipartite");
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 0) throw PreconditionError("isolated vertex");
  }
  if (IsStar(h)) throw PreconditionError("star");
  BoundCheck out;
  out.slack = Rational(h.edge_count()) - Rational(h.vertex_count(), 2) -
              Rational(MinEdgeStar(h));
  out.holds = out.slack.sign() >= 0;
  return out;
}

RigidityClass Classify(const Graph& h) {
  CheckParts(h);
  const int r = h.edge_count();
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 0) return {RigidKind::kHasIsolated, 0};
  }
  const int p = PartSize(h, Side::kA);
  const int q = PartSize(h, Side::kB);
  if (r == 0) return {RigidKind::kNotRigid, 0};
  if (std::min(p, q) == 1) return {RigidKind::kStar, 0};
  if (p == r && q == r) return {RigidKind::kH1, r};
  if (p == 2 && q == 2 && r == 4) return {RigidKind::kK22, 0};

  const auto comps = ConnectedComponents(h);
  if (comps.size() == 2 && comps[0].size() == comps[1].size()) {
    const Vertex c0 = StarCentre(h, comps[0]);
    const Vertex c1 = StarCentre(h, comps[1]);
    if (c0 >= 0 && c1 >= 0) {
      return {h.side(c0) == h.side(c1) ? RigidKind::kH2 : RigidKind::kH3, r};
    }
  }
  if (comps.size() == 1 && r == h.vertex_count() - 1 && r % 2 == 1 &&
      p == q) {
    const int k = (r - 1) / 2;
    for (const Edge& e : h.edges()) {
      if (h.degree(e.u) != k + 1 || h.degree(e.v) != k + 1) continue;
      bool leaves_only = true;
      for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (!e.has_endpoint(v) && h.degree(v) != 1) leaves_only = false;
      }
      if (leaves_only) return {RigidKind::kH4, r};
    }
  }
  return {RigidKind::kNotRigid, 0};
}

RigidityClass Classify(const Graph& h, const std::vector<Vertex>& part_a,
                       const std::vector<Vertex>& part_b) {
  std::vector<Side> sides(h.vertex_count(), Side::kUnassigned);
  for (Vertex v : part_a) {
    h.CheckVertex(v);
    sides[v] = Side::kA;
  }
  for (Vertex v : part_b) {
    h.CheckVertex(v);
    if (sides[v] != Side::kUnassigned) {
      throw InvalidArgument("vertex " + std::to_string(v) + " in both parts");
    }
    sides[v] = Side::kB;
  }
  return Classify(h.WithSides(std::move(sides)));
}

Graph MakeK22() { return WithParts(2, 2, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph MakeH1(int n) {
  if (n < 1) throw InvalidArgument("H1 needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
  return WithParts(n, n, edges);
}

Graph MakeH2(int n) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("H2 needs even n >= 2");
  const int k = n / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({0, 2 + i});
    edges.push_back({1, 2 + k + i});
  }
  return WithParts(2, n, edges);
}

Graph MakeH3(int n) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("H3 needs even n >= 2");
  const int k = n / 2;
  // A = {c1, leaves of c2}, B = {c2, leaves of c1}.
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({0, k + 2 + i});
    edges.push_back({1 + i, k + 1});
  }
  return WithParts(k + 1, k + 1, edges);
}

Graph MakeH4(int n) {
  if (n < 3 || n % 2 != 1) throw InvalidArgument("H4 needs odd n >= 3");
  const int k = (n - 1) / 2;
  // A = {u, leaves of v}, B = {v, leaves of u}.
  std::vector<Edge> edges{{0, k + 1}};
  for (int i = 0; i < k; ++i) {
    edges.push_back({0, k + 2 + i});
    edges.push_back({1 + i, k + 1});
  }
  return WithParts(k + 1, k + 1, edges);
}

Graph MakeRigid(const RigidityClass& cls) {
  switch (cls.kind) {
    case RigidKind::kK22:
      return MakeK22();
    case RigidKind::kH1:
      return MakeH1(cls.n);
    case RigidKind::kH2:
      return MakeH2(cls.n);
    case RigidKind::kH3:
      return MakeH3(cls.n);
    case RigidKind::kH4:
      return MakeH4(cls.n);
    default:
      throw InvalidArgument("not a rigid class: " + cls.ToString());
  }
}

std::vector<RigidityClass> ExpectedEqualityClasses(int max_edges) {
  std::vector<RigidityClass> out;
  if (max_edges >= 4) out.push_back({RigidKind::kK22, 0});
  for (int n = 2; n <= max_edges; ++n) out.push_back({RigidKind::kH1, n});
  for (int n = 4; n <= max_edges; n += 2) {
    out.push_back({RigidKind::kH2, n});
    out.push_back({RigidKind::kH3, n});
  }
  for (int n = 3; n <= max_edges; n += 2) out.push_back({RigidKind::kH4, n});
  return out;
}

Graph NormalizeSides(const Graph& h) {
  CheckParts(h);
  if (PartSize(h, Side::kA) <= PartSize(h, Side::kB)) return h;
  std::vector<Side> flipped = h.sides();
  for (Side& s : flipped) s = Opposite(s);
  return h.WithSides(std::move(flipped));
}

BipartiteCensusReport EnumerateBipartiteCensus(int max_edges, int budget,
                                               int jobs) {
  if (max_edges > budget) {
    throw BudgetExceeded("bipartite census limited to " +
                         std::to_string(budget) + " edges");
  }
  BipartiteCensusReport report;
  report.max_edges = max_edges;
  if (max_edges < 1) return report;

  std::map<std::string, Graph> all;
  std::vector<Graph> level{WithParts(1, 1, {{0, 1}})};
  all.emplace(CanonicalForm(level[0], true), level[0]);
  for (int r = 1; r < max_edges; ++r) {
    // Children of each parent: one more edge between old or new vertices.
    const auto children = ParallelMap(
        static_cast<int>(level.size()), jobs, [&](int i) {
          const Graph& h = level[i];
          std::vector<Vertex> part_a;
          std::vector<Vertex> part_b;
          for (Vertex v = 0; v < h.vertex_count(); ++v) {
            (h.side(v) == Side::kA ? part_a : part_b).push_back(v);
          }
          const int n = h.vertex_count();
          const Vertex new_a = n;
          const Vertex new_b = n + 1;
          part_a.push_back(new_a);
          part_b.push_back(new_b);
          std::vector<std::pair<std::string, Graph>> out;
          for (Vertex a : part_a) {
            for (Vertex b : part_b) {
              if (h.has_edge(a, b)) continue;
              std::vector<Edge> edges = h.edges();
              std::vector<Side> sides = h.sides();
              auto place = [&](Vertex v, Side s) -> Vertex {
                if (v < n) return v;
                sides.push_back(s);
                return static_cast<Vertex>(sides.size()) - 1;
              };
              const Vertex aa = place(a, Side::kA);
              const Vertex bb = place(b, Side::kB);
              edges.push_back(Edge::Of(aa, bb));
              const Graph child = NormalizeSides(
                  Graph::FromEdges(static_cast<int>(sides.size()), edges)
                      .WithSides(sides));
              out.emplace_back(CanonicalForm(child, true), child);
            }
          }
          return out;
        });
    std::map<std::string, Graph> next;
    for (const auto& batch : children) {
      for (const auto& [form, child] : batch) next.emplace(form, child);
    }
    level.clear();
    for (auto& [form, child] : next) {
      level.push_back(child);
      all.emplace(form, std::move(child));
    }
  }

  for (const auto& [form, h] : all) {
    BipartiteCensusEntry entry;
    entry.h = h;
    entry.p = static_cast<int>(std::count(h.sides().begin(), h.sides().end(), Side::kA));
    entry.q = h.vertex_count() - entry.p;
    entry.r = h.edge_count();
    entry.star = IsStar(h);
    entry.min_edge_star = MinEdgeStar(h);
    entry.slack = Rational(entry.r) - Rational(entry.p + entry.q, 2) -
                  Rational(entry.min_edge_star);
    entry.cls = Classify(h);
    const int index = static_cast<int>(report.entries.size());
    ++report.counts[{entry.p, entry.q, entry.r}];
    if (entry.star) {
      ++report.star_count;
    } else {
      const bool zero = entry.slack.sign() == 0;
      if (entry.slack.sign() < 0) report.violations.push_back(index);
      if (zero != entry.cls.rigid()) report.mismatches.push_back(index);
      if (zero) {
        report.equality.push_back(index);
        if (entry.cls.kind != RigidKind::kK22 && !IsForest(h)) {
          report.non_forest_equality.push_back(index);
        }
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace lly
