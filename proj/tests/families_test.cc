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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "lly/bipartite.h"
#include "lly/connectivity.h"
#include "lly/curvature.h"
#include "lly/errors.h"
#include "lly/families.h"
#include "lly/graph.h"
#include "oracle.h"

namespace lly {
namespace {

FamilySpec Spec(const std::string& json) { return ParseFamilySpec(json); }

std::set<Edge> Certified(const FamilySpec& spec, TruncatedGraph& t) {
  t.interior_edges = CertifyInterior(spec, t);
  return {t.interior_edges.begin(), t.interior_edges.end()};
}

std::set<Vertex> InteriorVertices(const std::set<Edge>& edges) {
  std::set<Vertex> out;
  for (const Edge& e : edges) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

TEST(GenerateTest, ThreeCliqueLayers) {
  const FamilySpec spec = Spec(R"({"base": "Gn", "n": 3, "layers": 5})");
  TruncatedGraph t = Generate(spec);
  EXPECT_EQ(t.graph.vertex_count(), 15);
  EXPECT_EQ(t.slices.size(), 5u);
  for (Vertex v : InteriorVertices(Certified(spec, t))) {
    EXPECT_EQ(t.graph.degree(v), 4);
  }
  EXPECT_EQ(ClaimedDelta(spec), 4);
}

TEST(GenerateTest, HubInsertDegrees) {
  const FamilySpec spec = Spec(
      R"({"base": "Gn", "n": 2, "layers": 9,
          "inserts": [{"op": "P", "position": 4}]})");
  TruncatedGraph t = Generate(spec);
  ASSERT_EQ(t.hubs.size(), 1u);
  const Vertex hub = t.hubs[0];
  EXPECT_EQ(t.graph.degree(hub), 4);
  for (Vertex v : InteriorVertices(Certified(spec, t))) {
    if (v != hub) EXPECT_EQ(t.graph.degree(v), 3) << v;
  }
}

TEST(GenerateTest, TwoStarPatternIsFiveRegularInside) {
  const FamilySpec spec = Spec(R"({"base": "G42", "layers": 6})");
  TruncatedGraph t = Generate(spec);
  const auto interior = InteriorVertices(Certified(spec, t));
  EXPECT_FALSE(interior.empty());
  for (Vertex v : interior) EXPECT_EQ(t.graph.degree(v), 5);
}

TEST(GenerateTest, EdgesJoinEqualOrConsecutiveSlices) {
  for (const char* json :
       {R"({"base": "G3Star", "layers": 6})", R"({"base": "G42", "layers": 6})",
        R"({"base": "Gn", "n": 4, "layers": 8,
            "inserts": [{"op": "K", "position": 2, "m": 3},
                        {"op": "P", "position": 5}]})"}) {
    const TruncatedGraph t = Generate(Spec(json));
    std::vector<int> slice_of(t.graph.vertex_count(), -1);
    for (size_t s = 0; s < t.slices.size(); ++s) {
      for (Vertex v : t.slices[s]) slice_of[v] = static_cast<int>(s);
    }
    for (Vertex v = 0; v < t.graph.vertex_count(); ++v) ASSERT_GE(slice_of[v], 0);
    for (const Edge& e : t.graph.edges()) {
      EXPECT_LE(std::abs(slice_of[e.u] - slice_of[e.v]), 1) << json;
    }
  }
}

// Each K-operation adds m + 1 vertex pairs and keeps every inside vertex at
// degree 5.
TEST(GenerateTest, KOperationDegreeLaw) {
  for (int m = 1; m <= 4; ++m) {
    const FamilySpec spec = Spec(
        R"({"base": "Gn", "n": 4, "layers": 9,
            "inserts": [{"op": "K", "position": 4, "m": )" +
        std::to_string(m) + "}]}");
    TruncatedGraph t = Generate(spec);
    EXPECT_EQ(t.graph.vertex_count(), 36 + 2 * (m + 1));
    for (Vertex v : InteriorVertices(Certified(spec, t))) {
      EXPECT_EQ(t.graph.degree(v), 5);
    }
  }
}

TEST(CertifyInteriorTest, MiddleCertifiedEndsNot) {
  const FamilySpec spec = Spec(R"({"base": "Gn", "n": 3, "layers": 7})");
  TruncatedGraph t = Generate(spec);
  const auto certified = Certified(spec, t);
  const auto& middle = t.slices[3];
  for (size_t i = 0; i < middle.size(); ++i) {
    for (size_t j = i + 1; j < middle.size(); ++j) {
      EXPECT_TRUE(certified.count(Edge::Of(middle[i], middle[j])));
    }
  }
  for (const Edge& e : t.graph.edges()) {
    for (Vertex end : {e.u, e.v}) {
      const bool on_end = std::count(t.slices.front().begin(),
                                     t.slices.front().end(), end) ||
                          std::count(t.slices.back().begin(),
                                     t.slices.back().end(), end);
      if (on_end) EXPECT_FALSE(certified.count(e)) << e.ToString();
    }
  }
}

TEST(CertifyInteriorTest, HubEdgesCertifiedWithRoom) {
  const FamilySpec spec = Spec(
      R"({"base": "Gn", "n": 3, "layers": 8,
          "inserts": [{"op": "P", "position": 3}]})");
  TruncatedGraph t = Generate(spec);
  const auto certified = Certified(spec, t);
  const Vertex hub = t.hubs.at(0);
  for (Vertex w : t.graph.neighbors(hub)) {
    EXPECT_TRUE(certified.count(Edge::Of(hub, w)));
  }
}

TEST(VerifyFamilyTest, CliqueLayerFamilies) {
  for (int n = 1; n <= 6; ++n) {
    const FamilyReport report =
        VerifyFamily(Spec(R"({"base": "Gn", "layers": 10, "n": )" +
                          std::to_string(n) + "}"));
    EXPECT_TRUE(report.ok()) << n;
    EXPECT_EQ(report.min_interior_degree, n + 1);
    EXPECT_EQ(report.max_interior_degree, n + 1);
    ASSERT_FALSE(report.cuts.empty());
    for (const CutReport& cut : report.cuts) {
      EXPECT_EQ(cut.cert.size, n);
      if (n >= 2) EXPECT_EQ(cut.cls, (RigidityClass{RigidKind::kH1, n}));
      EXPECT_TRUE(cut.a_complete && cut.b_complete);
    }
    EXPECT_GE(*report.min_curvature, Rational(0));
  }
}

TEST(VerifyFamilyTest, ThreeStarFamily) {
  const FamilyReport report = VerifyFamily(Spec(R"({"base": "G3Star", "layers": 10})"));
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.claimed_delta, 4);
  EXPECT_EQ(report.min_interior_degree, 4);
  EXPECT_GE(*report.min_curvature, Rational(0));
  for (const CutReport& cut : report.cuts) {
    EXPECT_EQ(cut.cls, (RigidityClass{RigidKind::kH4, 3}));
  }
}

TEST(VerifyFamilyTest, HubFactsInFiveCliqueFamily) {
  const FamilyReport report = VerifyFamily(Spec(
      R"({"base": "Gn", "n": 5, "layers": 10,
          "inserts": [{"op": "P", "position": 4}]})"));
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.hubs.size(), 1u);
  const HubReport& hub = report.hubs[0];
  EXPECT_EQ(hub.r, 5);
  EXPECT_EQ(hub.degree, 10);
  EXPECT_TRUE(hub.degree_is_2r);
  EXPECT_TRUE(hub.neighbour_degrees_r_plus_1);
  EXPECT_TRUE(hub.far_side_clique);
  int star_cuts = 0;
  for (const CutReport& cut : report.cuts) {
    if (cut.cls.kind != RigidKind::kStar) continue;
    ++star_cuts;
    EXPECT_EQ(cut.bipartite.r, 5);
  }
  EXPECT_EQ(star_cuts, 2);
}

// Every hub cut is a star with n edges, one less than the minimum degree.
TEST(VerifyFamilyTest, HubCutLaw) {
  for (int n = 2; n <= 6; ++n) {
    const FamilyReport report = VerifyFamily(Spec(
        R"({"base": "Gn", "layers": 12,
            "inserts": [{"op": "P", "position": 3}, {"op": "P", "position": 7}],
            "n": )" + std::to_string(n) + "}"));
    EXPECT_TRUE(report.ok()) << n;
    int star_cuts = 0;
    for (const CutReport& cut : report.cuts) {
      if (cut.cls.kind != RigidKind::kStar) continue;
      ++star_cuts;
      EXPECT_EQ(cut.cert.size, n);
      EXPECT_EQ(cut.cert.size, report.claimed_delta - 1);
    }
    EXPECT_EQ(star_cuts, 4);
  }
}

// Growing the window by two layers leaves every certified curvature value
// unchanged.
TEST(VerifyFamilyTest, WindowMonotonicity) {
  for (const std::string base :
       {R"("base": "Gn", "n": 3)", R"("base": "G3Star")", R"("base": "G42")",
        R"("base": "Gn", "n": 4, "inserts": [{"op": "K", "position": 3, "m": 2}])"}) {
    std::map<std::pair<VertexCoord, VertexCoord>, Rational> first;
    for (int layers : {8, 10}) {
      const FamilySpec spec =
          Spec("{" + base + R"(, "layers": )" + std::to_string(layers) + "}");
      TruncatedGraph t = Generate(spec);
      const auto certified = CertifyInterior(spec, t);
      for (const Edge& e : certified) {
        const auto key = std::make_pair(t.coords[e.u], t.coords[e.v]);
        const Rational kappa = KappaLly(t.graph, e);
        if (layers == 8) {
          first[key] = kappa;
        } else if (first.count(key)) {
          EXPECT_EQ(first[key], kappa) << base;
        }
      }
    }
    EXPECT_FALSE(first.empty());
  }
}

TEST(VerifyFamilyTest, KOperationPairingsAgree) {
  const FamilySpec spec = Spec(
      R"({"base": "Gn", "n": 4, "layers": 10,
          "inserts": [{"op": "K", "position": 4, "m": 1}]})");
  const auto survey = SurveyPairings(spec, 0);
  ASSERT_EQ(survey.size(), 9u);
  for (const PairingOutcome& o : survey) {
    EXPECT_TRUE(o.ok);
    EXPECT_EQ(o.curvature_multiset, survey[0].curvature_multiset);
  }
}

TEST(VerifyFamilyTest, CylinderHasNoBoundary) {
  const FamilySpec spec = Spec(R"({"base": "Gn", "n": 3, "layers": 8, "cylinder": true})");
  TruncatedGraph t = Generate(spec);
  EXPECT_EQ(CertifyInterior(spec, t).size(), t.graph.edges().size());
  EXPECT_EQ(t.graph.min_degree(), 4);
  EXPECT_TRUE(VerifyFamily(spec).ok());
}

TEST(VerifyFamilyTest, FromFileLadder) {
  // P_8 x K_2 with its middle declared as interior.
  const std::string path = ::testing::TempDir() + "ladder.adj";
  {
    std::ofstream out(path);
    out << "16 22\n";
    for (int i = 0; i < 8; ++i) out << 2 * i << ' ' << 2 * i + 1 << '\n';
    for (int i = 0; i + 1 < 8; ++i) {
      out << 2 * i << ' ' << 2 * i + 2 << '\n';
      out << 2 * i + 1 << ' ' << 2 * i + 3 << '\n';
    }
  }
  const FamilySpec spec = Spec(
      R"({"base": "FromFile", "path": ")" + path +
      R"(", "delta": 3, "interior": [[6, 7], [6, 8], [7, 9], [8, 9]],
          "cuts": [[0, 1, 2, 3, 4, 5, 6, 7]]})");
  const FamilyReport report = VerifyFamily(spec);
  EXPECT_TRUE(report.ok()) << (report.failures.empty() ? "" : report.failures[0]);
  ASSERT_EQ(report.cuts.size(), 1u);
  EXPECT_EQ(report.cuts[0].cls.ToString(), "H1(2)");
  std::remove(path.c_str());
}

TEST(VerifyFamilyTest, WrongDeltaIsReported) {
  const std::string path = ::testing::TempDir() + "k4.adj";
  {
    std::ofstream out(path);
    out << "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  }
  const FamilyReport report = VerifyFamily(Spec(
      R"({"base": "FromFile", "path": ")" + path +
      R"(", "delta": 4, "interior": [[0, 1]]})"));
  EXPECT_FALSE(report.ok());
  std::remove(path.c_str());
}

TEST(FamilySpecTest, ParsingAndValidation) {
  EXPECT_THROW(Spec("{"), ParseError);
  EXPECT_THROW(Spec(R"({"base": "Nope", "layers": 5})"), InvalidArgument);
  EXPECT_THROW(Spec(R"({"base": "Gn", "n": 3, "layers": 2})"), InvalidArgument);
  EXPECT_THROW(Spec(R"({"base": "Gn", "n": 3, "layers": 6,
                        "inserts": [{"op": "K", "position": 2, "m": 1}]})"),
               InvalidArgument);
  EXPECT_THROW(Spec(R"({"base": "Gn", "n": 3, "layers": 6,
                        "inserts": [{"op": "P", "position": 5}]})"),
               InvalidArgument);
  EXPECT_THROW(Spec(R"({"base": "Gn", "n": 3, "layers": 6,
                        "inserts": [{"op": "P", "position": 3},
                                    {"op": "P", "position": 2}]})"),
               InvalidArgument);
  const FamilySpec spec = Spec(
      R"({"base": "Gn", "n": 4, "layers": 7,
          "inserts": [{"op": "K", "position": 2, "m": 2, "pairing": [1, 2]}]})");
  const FamilySpec again = Spec(FamilySpecToJson(spec));
  EXPECT_EQ(FamilySpecToJson(again), FamilySpecToJson(spec));
  EXPECT_EQ(again.inserts.at(0).pairing, (std::array<int, 2>{1, 2}));
  EXPECT_THROW(Generate(Spec(R"({"base": "FromFile", "path": "/nonexistent.adj",
                                 "delta": 2})")),
               ParseError);
}

}  // namespace
}  // namespace lly
