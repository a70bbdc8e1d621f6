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

// The edge-star inequality min_e |S_1(e)| <= |E| - |V|/2 for non-star
// bipartite graphs, structural recognizers for its equality cases, and an
// exhaustive census over small bipartite graphs.

#ifndef LLY_BIPARTITE_H_
#define LLY_BIPARTITE_H_

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lly/graph.h"
#include "lly/rational.h"

namespace lly {

enum class RigidKind {
  kK22,
  kH1,  // Perfect matching.
  kH2,  // Two equal stars, both centres in a part of size 2.
  kH3,  // Two equal stars, centres in opposite parts.
  kH4,  // Double star: adjacent centres with k leaves each.
  kNotRigid,
  kStar,
  kHasIsolated,
};

struct RigidityClass {
  RigidKind kind = RigidKind::kNotRigid;
  // Edge count for the H families, 0 otherwise.
  int n = 0;

  bool rigid() const {
    return kind == RigidKind::kK22 || kind == RigidKind::kH1 ||
           kind == RigidKind::kH2 || kind == RigidKind::kH3 ||
           kind == RigidKind::kH4;
  }
  // "K22", "H1(4)", "NotRigid", ...
  std::string ToString() const;
  friend bool operator==(const RigidityClass&, const RigidityClass&) = default;
};

// min over edges of deg(u) + deg(v) - 2. Throws InvalidArgument on an
// edgeless graph.
int MinEdgeStar(const Graph& h);

struct BoundCheck {
  bool holds = false;
  // |E| - |V|/2 - MinEdgeStar(h).
  Rational slack;
};

// Throws PreconditionError naming the failed precondition ("not bipartite",
// "star", "isolated vertex").
BoundCheck CheckBound(const Graph& h);

// Structural recognition using the side annotation of `h`. Throws
// InvalidArgument if sides are missing or an edge lies inside a part.
RigidityClass Classify(const Graph& h);
RigidityClass Classify(const Graph& h, const std::vector<Vertex>& part_a,
                       const std::vector<Vertex>& part_b);

// Members of the families with sides annotated (part A first).
Graph MakeK22();
Graph MakeH1(int n);
Graph MakeH2(int n);
Graph MakeH3(int n);
Graph MakeH4(int n);
// Dispatches on kind. Throws InvalidArgument for non-rigid kinds or bad n.
Graph MakeRigid(const RigidityClass& cls);

// Equality cases with at most `max_edges` edges as (graph, bipartition)
// classes, after merging coincidences such as H2(2) = H3(2) = H1(2).
std::vector<RigidityClass> ExpectedEqualityClasses(int max_edges);

// Swaps sides if needed so that |A| <= |B|.
Graph NormalizeSides(const Graph& h);

struct BipartiteCensusEntry {
  Graph h;  // Normalized sides, |A| <= |B|.
  int p = 0;
  int q = 0;
  int r = 0;
  bool star = false;
  int min_edge_star = 0;
  Rational slack;
  RigidityClass cls;
};

struct BipartiteCensusReport {
  int max_edges = 0;
  // In canonical-form order.
  std::vector<BipartiteCensusEntry> entries;
  std::map<std::tuple<int, int, int>, int> counts;
  int star_count = 0;
  // Non-stars with negative slack.
  std::vector<int> violations;
  // Entries where slack == 0 disagrees with Classify(...).rigid().
  std::vector<int> mismatches;
  // Slack-zero non-stars.
  std::vector<int> equality;
  // Slack-zero entries other than K22 that contain a cycle.
  std::vector<int> non_forest_equality;

  bool ok() const {
    return violations.empty() && mismatches.empty() &&
           non_forest_equality.empty();
  }
};

// All bipartite graphs without isolated vertices and with 1..max_edges
// edges, one per class under side-preserving isomorphism (sides may be
// exchanged when they have equal size). Throws BudgetExceeded when
// max_edges > budget.
BipartiteCensusReport EnumerateBipartiteCensus(int max_edges, int budget = 8,
                                               int jobs = 1);

}  // namespace lly

#endif  // LLY_BIPARTITE_H_
