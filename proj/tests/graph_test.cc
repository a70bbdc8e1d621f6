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

#include "lly/errors.h"
#include "lly/graph.h"
#include "lly/graph_io.h"
#include "lly/rational.h"
#include "oracle.h"

namespace lly {
namespace {

TEST(RationalTest, LowestTermsAndOrdering) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(7, 3) * Rational(3, 7), Rational(1));
  EXPECT_TRUE(Rational(6, 3).is_integer());
  EXPECT_EQ(Rational(6, 3).to_int64(), 2);
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
  EXPECT_THROW(Rational(1) / Rational(0), InvalidArgument);
  EXPECT_EQ(ParseRational("-5/10"), Rational(-1, 2));
  EXPECT_THROW(ParseRational("x/2"), ParseError);
}

TEST(RationalTest, HugeValuesStayExact) {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1'000'000'007);
  EXPECT_FALSE(big.fits_int64());
  EXPECT_EQ(big / big, Rational(1));
}

TEST(GraphTest, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Edge::Of(2, 2), InvalidArgument);
  EXPECT_THROW(Graph::FromPairs(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph::FromPairs(3, {{0, 3}}), InvalidArgument);
  const Graph g = PathGraph(3);
  EXPECT_THROW(g.CheckEdge(Edge::Of(0, 2)), InvalidArgument);
}

TEST(GraphTest, BfsDistancesOnPath) {
  const auto d = BfsDistances(PathGraph(3), 0);
  EXPECT_EQ(d[0].hops(), 0);
  EXPECT_EQ(d[1].hops(), 1);
  EXPECT_EQ(d[2].hops(), 2);
}

TEST(GraphTest, BfsDistancesOnCompleteGraph) {
  const auto d = BfsDistances(CompleteGraph(4), 2);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(d[v].hops(), v == 2 ? 0 : 1);
}

TEST(GraphTest, BfsUnreachable) {
  const Graph g = Graph::FromPairs(4, {{0, 1}, {2, 3}});
  const auto d = BfsDistances(g, 0);
  EXPECT_FALSE(d[2].reachable());
  EXPECT_FALSE(d[3].reachable());
  EXPECT_THROW(d[3].hops(), DisconnectedError);
}

TEST(GraphTest, SphereOfEdge) {
  const Graph p4 = PathGraph(4);
  EXPECT_EQ(SphereOfEdge(p4, Edge::Of(1, 2)),
            (std::vector<Edge>{Edge::Of(0, 1), Edge::Of(2, 3)}));
  const Graph k22 = CompleteBipartite(2, 2);
  for (const Edge& e : k22.edges()) {
    int direct = 0;
    for (const Edge& f : k22.edges()) direct += f != e && f.shares_endpoint(e);
    EXPECT_EQ(static_cast<int>(SphereOfEdge(k22, e).size()), 2);
    EXPECT_EQ(direct, 2);
  }
  EXPECT_EQ(SphereOfEdge(CompleteGraph(4), Edge::Of(0, 1)).size(), 4u);
}

TEST(GraphTest, SphereSizeIsDegreeSum) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + rng() % 8;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 2) edges.push_back(Edge::Of(i, j));
      }
    }
    const Graph g = Graph::FromEdges(n, edges);
    for (const Edge& e : g.edges()) {
      EXPECT_EQ(static_cast<int>(SphereOfEdge(g, e).size()),
                g.degree(e.u) + g.degree(e.v) - 2);
    }
  }
}

TEST(GraphTest, ConnectedComponents) {
  EXPECT_EQ(ConnectedComponents(Graph(3)).size(), 3u);
  EXPECT_EQ(ConnectedComponents(CycleGraph(5)).size(), 1u);
  const auto two = ConnectedComponents(Graph::FromPairs(4, {{0, 1}, {2, 3}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].size(), 2u);
  EXPECT_EQ(two[1].size(), 2u);
}

TEST(GraphTest, IsForest) {
  EXPECT_TRUE(IsForest(StarGraph(4)));
  EXPECT_TRUE(IsForest(PathGraph(6)));
  EXPECT_FALSE(IsForest(CycleGraph(4)));
  EXPECT_TRUE(IsForest(Graph::FromPairs(4, {{0, 1}, {2, 3}})));
}

TEST(GraphTest, TriangleInequalityOnRandomGraphs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + rng() % 9;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 3 == 0) edges.push_back(Edge::Of(i, j));
      }
    }
    const Graph g = Graph::FromEdges(n, edges);
    const auto oracle = oracle::AllPairsDistances(g);
    std::vector<std::vector<HopDistance>> d;
    for (int v = 0; v < n; ++v) d.push_back(BfsDistances(g, v));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        EXPECT_EQ(d[a][b].reachable() ? d[a][b].hops() : -1, oracle[a][b]);
        for (int c = 0; c < n; ++c) {
          if (!d[a][b].reachable() || !d[b][c].reachable()) continue;
          EXPECT_LE(d[a][c].hops(), d[a][b].hops() + d[b][c].hops());
        }
      }
    }
  }
}

TEST(GraphTest, StarRecognition) {
  EXPECT_FALSE(IsStar(Graph(1)));
  EXPECT_TRUE(IsStar(PathGraph(2)));
  EXPECT_TRUE(IsStar(StarGraph(3)));
  EXPECT_FALSE(IsStar(PathGraph(4)));
}

TEST(GraphTest, PermutedPreservesStructure) {
  const Graph g = PetersenGraph();
  std::vector<Vertex> perm = {3, 1, 4, 0, 9, 2, 6, 5, 8, 7};
  const Graph h = g.Permuted(perm);
  EXPECT_EQ(h.edge_count(), 15);
  for (const Edge& e : g.edges()) EXPECT_TRUE(h.has_edge(perm[e.u], perm[e.v]));
}

TEST(GraphIoTest, Graph6KnownStrings) {
  const Graph k4 = ParseGraph6("C~");
  EXPECT_EQ(k4, CompleteGraph(4));
  EXPECT_EQ(ToGraph6(CompleteGraph(4)), "C~");
  EXPECT_EQ(ParseGraph6(">>graph6<<C~\n"), CompleteGraph(4));
  EXPECT_EQ(ToGraph6(PetersenGraph()), "IheA@GUAo");
  EXPECT_EQ(ToGraph6(Graph(0)), "?");
}

TEST(GraphIoTest, Graph6RoundTrip) {
  std::mt19937 rng(3);
  for (int n : {1, 2, 5, 13, 62, 63, 64, 100}) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 4 == 0) edges.push_back(Edge::Of(i, j));
      }
    }
    const Graph g = Graph::FromEdges(n, edges);
    EXPECT_EQ(ParseGraph6(ToGraph6(g)), g) << n;
  }
}

TEST(GraphIoTest, Graph6Rejects) {
  EXPECT_THROW(ParseGraph6(""), ParseError);
  EXPECT_THROW(ParseGraph6("C"), ParseError);
  EXPECT_THROW(ParseGraph6("C~~"), ParseError);
  // Nonzero padding bits.
  EXPECT_THROW(ParseGraph6("BA"), ParseError);
  EXPECT_NO_THROW(ParseGraph6("B_"));
  EXPECT_THROW(ParseGraph6("C\x01"), ParseError);
}

TEST(GraphIoTest, AdjacencyFormat) {
  const Graph g = ParseAdjacency("# triangle\n3 3\n0 1\n1 2\n0 2\n");
  EXPECT_EQ(g, CompleteGraph(3));
  EXPECT_EQ(ParseAdjacency(ToAdjacency(PetersenGraph())), PetersenGraph());
  EXPECT_THROW(ParseAdjacency("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(ParseAdjacency("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(ParseAdjacency("3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(ParseAdjacency("3 1\n0 5\n"), ParseError);
  EXPECT_THROW(ParseAdjacency("x y\n"), ParseError);
}

TEST(GraphIoTest, MissingFile) {
  EXPECT_THROW(ReadGraphFile("/nonexistent/graph.adj", GraphFormat::kAdjacency),
               ParseError);
}

}  // namespace
}  // namespace lly
