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

// Finite windows onto infinite strip graphs built from complete layers, the
// hub and K_4-chain insertions, and checks that the window's interior looks
// like the infinite graph.
//
// Every generated vertex has a coordinate (layer, sub, local). sub is 0 for
// layer vertices; an insertion between layer i and layer i + 1 places its
// vertices at layer i with sub >= 1. Slices, ordered by (layer, sub), run
// along the strip, and every edge joins equal or consecutive slices.

#ifndef LLY_FAMILIES_H_
#define LLY_FAMILIES_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lly/bipartite.h"
#include "lly/connectivity.h"
#include "lly/curvature.h"
#include "lly/graph.h"
#include "lly/rational.h"

namespace lly {

enum class FamilyBase { kGn, kG3Star, kG42, kFromFile };

struct InsertOp {
  enum class Kind { kP, kK };
  Kind kind = Kind::kP;
  // Inserted between layer `position` and layer `position + 1`.
  int position = 0;
  // K_4 count of the chain; KOp only.
  int m = 0;
  // Index 0..2 of the split of the four layer vertices into two pairs, for
  // the left and right joins of a KOp: {01|23}, {02|13}, {03|12}.
  std::array<int, 2> pairing = {0, 0};
};

struct FamilySpec {
  FamilyBase base = FamilyBase::kGn;
  int n = 0;
  int layers = 0;
  std::vector<InsertOp> inserts;
  // Join the last layer back to the first. No insert may sit at the seam.
  bool cylinder = false;

  // FromFile only.
  std::string path;
  std::string format = "adj";
  std::vector<Edge> declared_interior;
  int declared_delta = 0;
  std::vector<std::vector<Vertex>> declared_cuts;
};

// JSON: {"base": "Gn|G3Star|G42|FromFile", "n": int, "layers": int,
// "inserts": [{"op": "P|K", "position": int, "m": int, "pairing": [l, r]}],
// "cylinder": bool, "path": string, "format": "adj|graph6",
// "interior": [[u, v], ...], "delta": int, "cuts": [[x-side vertices], ...]}.
// Relative paths resolve against `base_dir`. Throws ParseError on malformed
// JSON and InvalidArgument on an invalid spec.
FamilySpec ParseFamilySpec(const std::string& json_text,
                           const std::string& base_dir = "");
std::string FamilySpecToJson(const FamilySpec& spec);
void ValidateFamilySpec(const FamilySpec& spec);
std::string DescribeSpec(const FamilySpec& spec);

// Minimum degree of the infinite family the spec describes.
int ClaimedDelta(const FamilySpec& spec);

struct VertexCoord {
  int layer = 0;
  int sub = 0;
  int local = 0;
  auto operator<=>(const VertexCoord&) const = default;
};

struct TruncatedGraph {
  Graph graph;
  // Certified interior edges; filled by CertifyInterior.
  std::vector<Edge> interior_edges;
  int boundary_margin = 1;
  // Empty for FromFile.
  std::vector<VertexCoord> coords;
  // Vertex lists of the slices in strip order.
  std::vector<std::vector<Vertex>> slices;
  // P-operation vertices.
  std::vector<Vertex> hubs;
};

// Throws InvalidArgument on an invalid spec and ParseError if a FromFile
// graph cannot be read.
TruncatedGraph Generate(const FamilySpec& spec);

// Edges whose closed neighbourhood union has the same vertex set and the
// same pairwise distances after one layer is added at each end. For
// FromFile, the declared interior. For cylinders, every edge.
std::vector<Edge> CertifyInterior(const FamilySpec& spec,
                                  const TruncatedGraph& t);

struct CutEdgeCheck {
  Edge edge;
  CutQuantities quantities;
  bool identities = false;
  std::optional<CostBoundCheck> cost_bound;
  std::optional<StarBoundCheck> star_bound;
};

struct CutReport {
  // Index of the slice left of the cut; -1 for declared cuts.
  int left_slice = -1;
  CutCertificate cert;
  CutBipartite bipartite;
  RigidityClass cls;
  int separating_min = 0;
  bool a_complete = false;
  bool b_complete = false;
  std::vector<CutEdgeCheck> edges;
};

struct HubReport {
  Vertex hub = 0;
  int degree = 0;
  int r = 0;
  bool degree_is_2r = false;
  bool neighbour_degrees_r_plus_1 = false;
  bool far_side_clique = false;
};

struct FamilyReport {
  FamilySpec spec;
  int vertex_count = 0;
  int edge_count = 0;
  int claimed_delta = 0;
  std::vector<EdgeCurvature> curvatures;
  std::optional<Rational> min_curvature;
  int min_interior_degree = 0;
  int max_interior_degree = 0;
  std::vector<CutReport> cuts;
  std::vector<HubReport> hubs;
  // One line per failed check, naming the offending edge or cut.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

FamilyReport VerifyFamily(const FamilySpec& spec, int jobs = 1);

struct PairingOutcome {
  std::array<int, 2> pairing;
  bool ok = false;
  std::optional<Rational> min_curvature;
  // Sorted curvature values of certified edges.
  std::vector<Rational> curvature_multiset;
};

// Runs VerifyFamily for all nine pairings of the KOp at `insert_index`.
std::vector<PairingOutcome> SurveyPairings(const FamilySpec& spec,
                                           int insert_index, int jobs = 1);

}  // namespace lly

#endif  // LLY_FAMILIES_H_
