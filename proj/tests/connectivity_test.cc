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

#include <gtest/gtest.h>

#include <random>

#include "lly/bipartite.h"
#include "lly/connectivity.h"
#include "lly/errors.h"
#include "lly/families.h"
#include "lly/graph.h"
#include "oracle.h"
#include "random_instances.h"

namespace lly {
namespace {

// Cliques on both sides of `h` plus the edges of h between them, cut along
// the sides of h.
struct Embedded {
  Graph g;
  CutCertificate cert;
};

Embedded EmbedBetweenCliques(const Graph& h) {
  std::vector<Edge> edges = h.edges();
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    (h.side(v) == Side::kA ? a : b).push_back(v);
  }
  for (const auto* part : {&a, &b}) {
    for (size_t i = 0; i < part->size(); ++i) {
      for (size_t j = i + 1; j < part->size(); ++j) {
        edges.push_back(Edge::Of((*part)[i], (*part)[j]));
      }
    }
  }
  Graph g = Graph::FromEdges(h.vertex_count(), edges);
  CutCertificate cert = CutFromSide(g, a);
  return {std::move(g), std::move(cert)};
}

Edge LeafCentreEdge(const Graph& h) {
  for (const Edge& e : h.edges()) {
    if (h.degree(e.u) == 1 || h.degree(e.v) == 1) return e;
  }
  return h.edges().front();
}

Graph TwoK4WithBridge() {
  return Graph::FromPairs(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                              {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                              {3, 4}});
}

FamilyReport Family(const std::string& json) {
  return VerifyFamily(ParseFamilySpec(json));
}

TEST(EdgeConnectivityTest, Examples) {
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(EdgeConnectivity(CompleteGraph(n)).size, n - 1);
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(EdgeConnectivity(CycleGraph(n)).size, 2);
  const CutCertificate bridge = EdgeConnectivity(TwoK4WithBridge());
  EXPECT_EQ(bridge.size, 1);
  EXPECT_EQ(bridge.cut_edges, std::vector<Edge>{Edge::Of(3, 4)});
  EXPECT_EQ(EdgeConnectivity(Graph::FromPairs(4, {{0, 1}, {2, 3}})).size, 0);
  EXPECT_THROW(EdgeConnectivity(Graph(0)), InvalidArgument);
}

TEST(EdgeConnectivityTest, MatchesBruteForce) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = testing_util::RandomConnectedGraph(rng, 2 + rng() % 10);
    const CutCertificate cert = EdgeConnectivity(g, 1 + trial % 3);
    EXPECT_EQ(cert.size, oracle::BruteEdgeConnectivity(g));
    EXPECT_NO_THROW(ValidateCut(g, cert));
    EXPECT_LE(cert.size, g.min_degree());
  }
}

TEST(EdgeConnectivityTest, AllMinCutsOfCycle) {
  const auto cuts = AllMinCuts(CycleGraph(5));
  EXPECT_EQ(cuts.size(), 10u);
  for (const auto& c : cuts) EXPECT_EQ(c.size, 2);
  EXPECT_THROW(AllMinCuts(CycleGraph(11)), BudgetExceeded);
}

TEST(EdgeConnectivityTest, SeparatingCut) {
  const Graph g = PathGraph(5);
  const CutCertificate c = MinSeparatingCut(g, {0}, {4});
  EXPECT_EQ(c.size, 1);
  EXPECT_NO_THROW(ValidateCut(g, c));
}

TEST(ValidateCutTest, RejectsBadCertificates) {
  const Graph g = CycleGraph(4);
  CutCertificate c = CutFromSide(g, {0, 1});
  EXPECT_NO_THROW(ValidateCut(g, c));
  c.cut_edges.pop_back();
  EXPECT_THROW(ValidateCut(g, c), InvalidArgument);
  CutCertificate overlap = CutFromSide(g, {0, 1});
  overlap.side_y.push_back(0);
  EXPECT_THROW(ValidateCut(g, overlap), InvalidArgument);
}

TEST(CutBipartiteTest, BridgeIsSingleEdge) {
  const Graph g = TwoK4WithBridge();
  const CutBipartite cb = MakeCutBipartite(g, EdgeConnectivity(g));
  EXPECT_EQ(cb.p, 1);
  EXPECT_EQ(cb.q, 1);
  EXPECT_EQ(cb.r, 1);
  EXPECT_EQ(cb.HEdgeOf(Edge::Of(3, 4)), Edge::Of(0, 1));
  EXPECT_THROW(cb.HEdgeOf(Edge::Of(0, 1)), InvalidArgument);
}

TEST(CutBipartiteTest, LadderRungCutIsTwoEdges) {
  // P_5 x K_2: rungs (i, i + 5).
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back(Edge::Of(i, i + 5));
  for (int i = 0; i + 1 < 5; ++i) {
    edges.push_back(Edge::Of(i, i + 1));
    edges.push_back(Edge::Of(i + 5, i + 6));
  }
  const Graph ladder = Graph::FromEdges(10, edges);
  const CutCertificate cert = CutFromSide(ladder, {0, 1, 5, 6});
  EXPECT_EQ(cert.size, 2);
  EXPECT_EQ(MinSeparatingCut(ladder, {0, 1, 5, 6}, {2, 3, 4, 7, 8, 9}).size, 2);
  const CutBipartite cb = MakeCutBipartite(ladder, cert);
  EXPECT_EQ(Classify(cb.h).ToString(), "H1(2)");
}

TEST(CutBipartiteTest, ThreeLayerCutIsPerfectMatching) {
  const FamilyReport report = Family(R"({"base": "Gn", "n": 3, "layers": 7})");
  ASSERT_FALSE(report.cuts.empty());
  for (const CutReport& cut : report.cuts) {
    EXPECT_EQ(cut.cls.ToString(), "H1(3)");
    EXPECT_EQ(cut.bipartite.r, 3);
  }
}

TEST(CutQuantitiesTest, PerfectMatching) {
  const Embedded em = EmbedBetweenCliques(MakeH1(3));
  const CutBipartite cb = MakeCutBipartite(em.g, em.cert);
  for (const Edge& e : em.cert.cut_edges) {
    const CutQuantities q = ComputeCutQuantities(cb, e);
    EXPECT_EQ(q.s1, 0);
    EXPECT_EQ(q.c, 2);
    EXPECT_EQ(q.d, 0);
    EXPECT_EQ(q.f, 0);
    EXPECT_TRUE(CutIdentitiesHold(cb, q));
  }
}

TEST(CutQuantitiesTest, CompleteBipartiteTwoTwo) {
  const Embedded em = EmbedBetweenCliques(MakeK22());
  const CutBipartite cb = MakeCutBipartite(em.g, em.cert);
  for (const Edge& e : em.cert.cut_edges) {
    const CutQuantities q = ComputeCutQuantities(cb, e);
    EXPECT_EQ(q.s1, 2);
    EXPECT_EQ(q.c, 0);
    EXPECT_EQ(q.d, 0);
    EXPECT_EQ(q.f, 1);
  }
}

TEST(CutQuantitiesTest, OppositeStarsLeafEdge) {
  const Graph h = MakeH3(4);
  const Embedded em = EmbedBetweenCliques(h);
  const CutBipartite cb = MakeCutBipartite(em.g, em.cert);
  const CutQuantities q = ComputeCutQuantities(cb, LeafCentreEdge(h));
  EXPECT_EQ(q.s1, 1);
  EXPECT_EQ(q.c, 1);
  EXPECT_EQ(q.d, 1);
  EXPECT_EQ(q.f, 0);
}

TEST(CutQuantitiesTest, IdentitiesOnRandomCuts) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = testing_util::RandomConnectedGraph(rng, 3 + rng() % 8);
    for (const CutCertificate& cert : AllMinCuts(g)) {
      const CutBipartite cb = MakeCutBipartite(g, cert);
      for (const Edge& e : cert.cut_edges) {
        EXPECT_TRUE(CutIdentitiesHold(cb, ComputeCutQuantities(cb, e)));
      }
    }
  }
}

TEST(CutEdgeCostBoundTest, ThreeLayerInteriorIsTight) {
  const FamilyReport report = Family(R"({"base": "Gn", "n": 3, "layers": 7})");
  int checked = 0;
  for (const CutReport& cut : report.cuts) {
    for (const CutEdgeCheck& ec : cut.edges) {
      ASSERT_TRUE(ec.cost_bound.has_value());
      EXPECT_TRUE(ec.cost_bound->holds);
      EXPECT_EQ(ec.cost_bound->cost, ec.cost_bound->bound);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(CutEdgeCostBoundTest, CompleteBipartiteCutBoundIsSix) {
  const FamilyReport report = Family(
      R"({"base": "Gn", "n": 4, "layers": 10,
          "inserts": [{"op": "K", "position": 4, "m": 2}]})");
  int seen = 0;
  for (const CutReport& cut : report.cuts) {
    if (cut.cls.kind != RigidKind::kK22) continue;
    for (const CutEdgeCheck& ec : cut.edges) {
      ASSERT_TRUE(ec.cost_bound.has_value());
      EXPECT_EQ(ec.cost_bound->bound, 6);
      EXPECT_EQ(ec.cost_bound->delta + 1, 6);
      EXPECT_TRUE(ec.cost_bound->holds);
      ++seen;
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(CutEdgeCostBoundTest, OppositeStarsCutBoundIsSix) {
  const FamilyReport report = Family(R"({"base": "G42", "layers": 8})");
  int seen = 0;
  for (const CutReport& cut : report.cuts) {
    ASSERT_EQ(cut.cls.ToString(), "H3(4)");
    const CutBipartite& cb = cut.bipartite;
    for (const CutEdgeCheck& ec : cut.edges) {
      const Edge he = cb.HEdgeOf(ec.edge);
      if (cb.h.degree(he.u) != 1 && cb.h.degree(he.v) != 1) continue;
      ASSERT_TRUE(ec.cost_bound.has_value());
      EXPECT_EQ(ec.cost_bound->bound, 6);
      EXPECT_TRUE(ec.cost_bound->holds);
      ++seen;
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(CutEdgeCostBoundTest, Preconditions) {
  const Graph g = TwoK4WithBridge();
  const CutCertificate cert = EdgeConnectivity(g);
  EXPECT_THROW(CheckCutEdgeCostBound(g, cert, Edge::Of(0, 1)), PreconditionError);
  // Bridge endpoints have degree 4, not delta = 3.
  EXPECT_THROW(CheckCutEdgeCostBound(g, cert, Edge::Of(3, 4)), PreconditionError);
}

TEST(StarBoundTest, BridgeBetweenFiveCliques) {
  std::vector<Edge> edges;
  for (int base : {0, 5}) {
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) edges.push_back(Edge::Of(base + i, base + j));
    }
  }
  edges.push_back(Edge::Of(4, 5));
  const Graph g = Graph::FromEdges(10, edges);
  const CutCertificate cert = EdgeConnectivity(g);
  const StarBoundCheck check = CheckStarCutLowerBound(g, cert, Edge::Of(4, 5));
  EXPECT_TRUE(check.holds);
  EXPECT_EQ(check.alpha, 0);
  EXPECT_EQ(check.s1, 0);
  EXPECT_GE(check.w, check.bound);
}

TEST(StarBoundTest, HubStarCutHolds) {
  const FamilyReport report = Family(
      R"({"base": "Gn", "n": 2, "layers": 10,
          "inserts": [{"op": "P", "position": 4}]})");
  int seen = 0;
  for (const CutReport& cut : report.cuts) {
    if (cut.cls.kind != RigidKind::kStar) continue;
    for (const CutEdgeCheck& ec : cut.edges) {
      ASSERT_TRUE(ec.star_bound.has_value());
      EXPECT_TRUE(ec.star_bound->holds);
      ++seen;
    }
  }
  EXPECT_GT(seen, 0);
}

// With dy = r + 1 and alpha = s1 = r - 1 the bound crosses 1 exactly at
// dx = 2r.
TEST(StarBoundTest, SignChangeAroundTwiceTheCut) {
  for (int r = 1; r <= 8; ++r) {
    const Rational below = StarCutLowerBound(2 * r - 1, r + 1, r - 1, r - 1);
    const Rational at = StarCutLowerBound(2 * r, r + 1, r - 1, r - 1);
    const Rational above = StarCutLowerBound(2 * r + 1, r + 1, r - 1, r - 1);
    EXPECT_LT(below, Rational(1)) << r;
    EXPECT_EQ(at, Rational(1)) << r;
    EXPECT_GT(above, Rational(1)) << r;
  }
}

TEST(StarBoundTest, Preconditions) {
  const Embedded em = EmbedBetweenCliques(MakeH1(2));
  EXPECT_THROW(
      CheckStarCutLowerBound(em.g, em.cert, em.cert.cut_edges.front()),
      PreconditionError);
}

TEST(MatchingTest, Sizes) {
  EXPECT_EQ(MaximumBipartiteMatching(MakeH1(5)), 5);
  EXPECT_EQ(MaximumBipartiteMatching(MakeK22()), 2);
  EXPECT_EQ(MaximumBipartiteMatching(MakeH4(7)), 2);
  EXPECT_EQ(MaximumBipartiteMatching(MakeH2(6)), 2);
  EXPECT_EQ(MaximumBipartiteMatching(CompleteBipartite(3, 5)), 3);
}

}  // namespace
}  // namespace lly
