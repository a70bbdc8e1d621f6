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

#include <stdexcept>

#include "lly/curvature.h"
#include "lly/graph.h"
#include "lly/parallel.h"
#include "lly/report.h"

namespace lly {
namespace {

TEST(ReportTest, RationalJson) {
  EXPECT_EQ(ToJson(Rational(-3, 6)), nlohmann::json::parse(R"({"num": -1, "den": 2})"));
  Rational big(1);
  for (int i = 0; i < 3; ++i) big *= Rational(10'000'000'000LL);
  const nlohmann::json j = ToJson(big / Rational(7));
  EXPECT_EQ(j.at("num"), "1000000000000000000000000000000");
  EXPECT_EQ(j.at("den"), 7);
}

TEST(ReportTest, GraphJsonCarriesSides) {
  const nlohmann::json j = ToJson(CompleteBipartite(1, 2));
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("sides"), "ABB");
  EXPECT_FALSE(ToJson(PathGraph(2)).contains("sides"));
}

TEST(ReportTest, CurvatureCsv) {
  const std::string csv = ToCsv(CurvatureProfile(CycleGraph(5)));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "u,v,d_u,d_v,rho_num,rho_den,kappa_num,kappa_den");
  EXPECT_NE(csv.find("\n0,1,2,2,1,3,1,2\n"), std::string::npos);
}

TEST(ParallelMapTest, OrderAndErrors) {
  const auto squares = ParallelMap(50, 4, [](int i) { return i * i; });
  for (int i = 0; i < 50; ++i) EXPECT_EQ(squares[i], i * i);
  EXPECT_TRUE(ParallelMap(0, 3, [](int i) { return i; }).empty());
  EXPECT_THROW(ParallelMap(10, 3,
                           [](int i) {
                             if (i == 7) throw std::runtime_error("seven");
                             return i;
                           }),
               std::runtime_error);
}

}  // namespace
}  // namespace lly
