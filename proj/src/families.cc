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

#include "lly/families.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "json.hpp"
#include "lly/errors.h"
#include "lly/graph_io.h"

namespace lly {

namespace {

using json = nlohmann::json;

constexpr std::array<std::array<int, 4>, 3> kPairings = {{
    {0, 1, 2, 3},
    {0, 2, 1, 3},
    {0, 3, 1, 2},
}};

const InsertOp* InsertAt(const FamilySpec& spec, int layer) {
  for (const InsertOp& op : spec.inserts) {
    if (op.position == layer) return &op;
  }
  return nullptr;
}

int LayerWidth(const FamilySpec& spec) {
  switch (spec.base) {
    case FamilyBase::kGn:
      return spec.n;
    case FamilyBase::kG3Star:
      return 2;
    case FamilyBase::kG42:
      return 4;
    case FamilyBase::kFromFile:
      break;
  }
  return 0;
}

class StripBuilder {
 public:
  void AddVertex(VertexCoord c) { coords_.insert(c); }
  void AddEdge(VertexCoord a, VertexCoord b) {
    AddVertex(a);
    AddVertex(b);
    pairs_.emplace_back(a, b);
  }
  void AddClique(const std::vector<VertexCoord>& cs) {
    for (size_t i = 0; i < cs.size(); ++i) {
      AddVertex(cs[i]);
      for (size_t j = i + 1; j < cs.size(); ++j) AddEdge(cs[i], cs[j]);
    }
  }

  TruncatedGraph Build() const {
    TruncatedGraph t;
    std::map<VertexCoord, Vertex> id;
    for (const VertexCoord& c : coords_) {
      id[c] = static_cast<Vertex>(t.coords.size());
      t.coords.push_back(c);
    }
    std::set<Edge> edges;
    for (const auto& [a, b] : pairs_) edges.insert(Edge::Of(id[a], id[b]));
    t.graph = Graph::FromEdges(static_cast<int>(t.coords.size()),
                               std::vector<Edge>(edges.begin(), edges.end()));
    std::pair<int, int> key{-1, -1};
    for (Vertex v = 0; v < static_cast<int>(t.coords.size()); ++v) {
      const std::pair<int, int> k{t.coords[v].layer, t.coords[v].sub};
      if (k != key) t.slices.emplace_back();
      key = k;
      t.slices.back().push_back(v);
      if (t.coords[v].sub == 1 && hub_layers_.count(t.coords[v].layer)) {
        t.hubs.push_back(v);
      }
    }
    return t;
  }

  void MarkHub(int layer) { hub_layers_.insert(layer); }

 private:
  std::set<VertexCoord> coords_;
  std::vector<std::pair<VertexCoord, VertexCoord>> pairs_;
  std::set<int> hub_layers_;
};

void JoinLayers(const FamilySpec& spec, int i, int j, StripBuilder& b) {
  const int w = LayerWidth(spec);
  auto at = [](int layer, int local) { return VertexCoord{layer, 0, local}; };
  if (spec.base == FamilyBase::kG3Star) {
    b.AddEdge(at(i, 0), at(j, 0));
    b.AddEdge(at(i, 0), at(j, 1));
    b.AddEdge(at(i, 1), at(j, 1));
    return;
  }
  if (spec.base == FamilyBase::kG42) {
    // Locals: 0 = h, 1 = m1, 2 = m2, 3 = t.
    b.AddEdge(at(i, 0), at(j, 1));
    b.AddEdge(at(i, 0), at(j, 2));
    b.AddEdge(at(i, 1), at(j, 3));
    b.AddEdge(at(i, 2), at(j, 3));
    return;
  }
  const InsertOp* op = InsertAt(spec, i);
  if (op == nullptr) {
    for (int k = 0; k < w; ++k) b.AddEdge(at(i, k), at(j, k));
    return;
  }
  if (op->kind == InsertOp::Kind::kP) {
    const VertexCoord hub{i, 1, 0};
    b.MarkHub(i);
    for (int k = 0; k < w; ++k) {
      b.AddEdge(at(i, k), hub);
      b.AddEdge(at(j, k), hub);
    }
    return;
  }
  // Chain of m K_4's on pairs (a_t, b_t), t = 0..m.
  auto pair = [&](int t) {
    return std::array<VertexCoord, 2>{VertexCoord{i, 1 + t, 0},
                                      VertexCoord{i, 1 + t, 1}};
  };
  for (int t = 0; t < op->m; ++t) {
    const auto lo = pair(t);
    const auto hi = pair(t + 1);
    b.AddClique({lo[0], lo[1], hi[0], hi[1]});
  }
  const auto& left = kPairings[op->pairing[0]];
  const auto& right = kPairings[op->pairing[1]];
  for (int k = 0; k < 4; ++k) {
    b.AddEdge(at(i, left[k]), pair(0)[k / 2]);
    b.AddEdge(at(j, right[k]), pair(op->m)[k / 2]);
  }
}

std::vector<std::vector<int>> AllPairsHops(const Graph& g) {
  std::vector<std::vector<int>> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const HopDistance& d : BfsDistances(g, v)) {
      out[v].push_back(d.reachable() ? d.hops() : -1);
    }
  }
  return out;
}

std::vector<Vertex> ClosedBall(const Graph& g, const Edge& e) {
  std::set<Vertex> ball{e.u, e.v};
  for (Vertex end : {e.u, e.v}) {
    for (Vertex w : g.neighbors(end)) ball.insert(w);
  }
  return {ball.begin(), ball.end()};
}

std::string CutName(const CutReport& c) {
  if (c.left_slice >= 0) {
    return "cut after slice " + std::to_string(c.left_slice);
  }
  return "declared cut of size " + std::to_string(c.cert.size);
}

}  // namespace

void ValidateFamilySpec(const FamilySpec& spec) {
  if (spec.base == FamilyBase::kFromFile) {
    if (spec.path.empty()) throw InvalidArgument("FromFile needs a path");
    if (spec.declared_delta < 1) throw InvalidArgument("FromFile needs delta >= 1");
    if (!spec.inserts.empty() || spec.cylinder) {
      throw InvalidArgument("FromFile takes no inserts or cylinder flag");
    }
    return;
  }
  if (spec.layers < 3) throw InvalidArgument("layers must be at least 3");
  if (spec.base == FamilyBase::kGn && spec.n < 1) {
    throw InvalidArgument("Gn needs n >= 1");
  }
  if (spec.base != FamilyBase::kGn && !spec.inserts.empty()) {
    throw InvalidArgument("inserts are only defined on Gn");
  }
  int last = -1;
  for (const InsertOp& op : spec.inserts) {
    if (op.position <= last) {
      throw InvalidArgument("insert positions must be strictly increasing");
    }
    if (op.position < 0 || op.position > spec.layers - 2) {
      throw InvalidArgument("insert position " + std::to_string(op.position) +
                            " outside 0.." + std::to_string(spec.layers - 2));
    }
    last = op.position;
    if (op.kind == InsertOp::Kind::kK) {
      if (spec.n != 4) throw InvalidArgument("K-operation needs Gn with n = 4");
      if (op.m < 1) throw InvalidArgument("K-operation needs m >= 1");
      for (int p : op.pairing) {
        if (p < 0 || p > 2) throw InvalidArgument("pairing index must be 0..2");
      }
    }
  }
}

int ClaimedDelta(const FamilySpec& spec) {
  switch (spec.base) {
    case FamilyBase::kGn:
      return spec.n + 1;
    case FamilyBase::kG3Star:
      return 4;
    case FamilyBase::kG42:
      return 5;
    case FamilyBase::kFromFile:
      return spec.declared_delta;
  }
  return 0;
}

FamilySpec ParseFamilySpec(const std::string& json_text,
                           const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("family spec: ") + e.what());
  }
  FamilySpec spec;
  try {
    const std::string base = doc.at("base").get<std::string>();
    if (base == "Gn") {
      spec.base = FamilyBase::kGn;
      spec.n = doc.at("n").get<int>();
    } else if (base == "G3Star") {
      spec.base = FamilyBase::kG3Star;
    } else if (base == "G42") {
      spec.base = FamilyBase::kG42;
    } else if (base == "FromFile") {
      spec.base = FamilyBase::kFromFile;
    } else {
      throw InvalidArgument("unknown family base '" + base + "'");
    }
    spec.layers = doc.value("layers", 0);
    spec.cylinder = doc.value("cylinder", false);
    for (const json& item : doc.value("inserts", json::array())) {
      InsertOp op;
      const std::string kind = item.at("op").get<std::string>();
      if (kind == "P") {
        op.kind = InsertOp::Kind::kP;
      } else if (kind == "K") {
        op.kind = InsertOp::Kind::kK;
        op.m = item.at("m").get<int>();
      } else {
        throw InvalidArgument("unknown insert op '" + kind + "'");
      }
      op.position = item.at("position").get<int>();
      if (item.contains("pairing")) {
        op.pairing = item.at("pairing").get<std::array<int, 2>>();
      }
      spec.inserts.push_back(op);
    }
    if (spec.base == FamilyBase::kFromFile) {
      std::filesystem::path path = doc.at("path").get<std::string>();
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      spec.path = path.string();
      spec.format = doc.value("format", std::string("adj"));
      spec.declared_delta = doc.at("delta").get<int>();
      for (const auto& pr : doc.value("interior", json::array())) {
        spec.declared_interior.push_back(
            Edge::Of(pr.at(0).get<int>(), pr.at(1).get<int>()));
      }
      for (const auto& cut : doc.value("cuts", json::array())) {
        spec.declared_cuts.push_back(cut.get<std::vector<Vertex>>());
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("family spec: ") + e.what());
  }
  ValidateFamilySpec(spec);
  return spec;
}

std::string FamilySpecToJson(const FamilySpec& spec) {
  json doc;
  switch (spec.base) {
    case FamilyBase::kGn:
      doc["base"] = "Gn";
      doc["n"] = spec.n;
      break;
    case FamilyBase::kG3Star:
      doc["base"] = "G3Star";
      break;
    case FamilyBase::kG42:
      doc["base"] = "G42";
      break;
    case FamilyBase::kFromFile:
      doc["base"] = "FromFile";
      doc["path"] = spec.path;
      doc["format"] = spec.format;
      doc["delta"] = spec.declared_delta;
      break;
  }
  if (spec.base != FamilyBase::kFromFile) doc["layers"] = spec.layers;
  if (spec.cylinder) doc["cylinder"] = true;
  json inserts = json::array();
  for (const InsertOp& op : spec.inserts) {
    json item;
    item["op"] = op.kind == InsertOp::Kind::kP ? "P" : "K";
    item["position"] = op.position;
    if (op.kind == InsertOp::Kind::kK) {
      item["m"] = op.m;
      item["pairing"] = op.pairing;
    }
    inserts.push_back(item);
  }
  if (!inserts.empty()) doc["inserts"] = inserts;
  return doc.dump();
}

std::string DescribeSpec(const FamilySpec& spec) {
  std::string out;
  switch (spec.base) {
    case FamilyBase::kGn:
      out = "Gn(" + std::to_string(spec.n) + ")";
      break;
    case FamilyBase::kG3Star:
      out = "G3Star";
      break;
    case FamilyBase::kG42:
      out = "G42";
      break;
    case FamilyBase::kFromFile:
      return "FromFile(" + spec.path + ")";
  }
  out += " layers=" + std::to_string(spec.layers);
  for (const InsertOp& op : spec.inserts) {
    out += op.kind == InsertOp::Kind::kP
               ? " P@" + std::to_string(op.position)
               : " K" + std::to_string(op.m) + "@" +
                     std::to_string(op.position);
  }
  if (spec.cylinder) out += " cylinder";
  return out;
}

TruncatedGraph Generate(const FamilySpec& spec) {
  ValidateFamilySpec(spec);
  if (spec.base == FamilyBase::kFromFile) {
    TruncatedGraph t;
    t.graph = ReadGraphFile(spec.path, spec.format == "graph6"
                                           ? GraphFormat::kGraph6
                                           : GraphFormat::kAdjacency);
    t.boundary_margin = 0;
    return t;
  }
  StripBuilder b;
  const int w = LayerWidth(spec);
  for (int i = 0; i < spec.layers; ++i) {
    std::vector<VertexCoord> layer;
    for (int k = 0; k < w; ++k) layer.push_back({i, 0, k});
    if (spec.base == FamilyBase::kG3Star) {
      b.AddEdge(layer[0], layer[1]);
    } else {
      b.AddClique(layer);
    }
  }
  for (int i = 0; i + 1 < spec.layers; ++i) JoinLayers(spec, i, i + 1, b);
  if (spec.cylinder) JoinLayers(spec, spec.layers - 1, 0, b);
  TruncatedGraph t = b.Build();
  return t;
}

std::vector<Edge> CertifyInterior(const FamilySpec& spec,
                                  const TruncatedGraph& t) {
  if (spec.base == FamilyBase::kFromFile) {
    for (const Edge& e : spec.declared_interior) t.graph.CheckEdge(e);
    std::vector<Edge> out = spec.declared_interior;
    std::sort(out.begin(), out.end());
    return out;
  }
  if (spec.cylinder) return t.graph.edges();

  FamilySpec wider = spec;
  wider.layers += 2;
  for (InsertOp& op : wider.inserts) ++op.position;
  const TruncatedGraph ext = Generate(wider);
  std::map<VertexCoord, Vertex> ext_id;
  for (Vertex v = 0; v < static_cast<int>(ext.coords.size()); ++v) {
    ext_id[ext.coords[v]] = v;
  }
  std::vector<Vertex> to_ext(t.coords.size());
  for (Vertex v = 0; v < static_cast<int>(t.coords.size()); ++v) {
    VertexCoord c = t.coords[v];
    ++c.layer;
    to_ext[v] = ext_id.at(c);
  }
  const auto dist = AllPairsHops(t.graph);
  const auto ext_dist = AllPairsHops(ext.graph);

  std::vector<Edge> out;
  for (const Edge& e : t.graph.edges()) {
    const std::vector<Vertex> ball = ClosedBall(t.graph, e);
    std::vector<Vertex> mapped;
    for (Vertex v : ball) mapped.push_back(to_ext[v]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != ClosedBall(ext.graph, Edge::Of(to_ext[e.u], to_ext[e.v]))) {
      continue;
    }
    bool same = true;
    for (Vertex a : ball) {
      for (Vertex b : ball) {
        if (dist[a][b] != ext_dist[to_ext[a]][to_ext[b]]) same = false;
      }
    }
    if (same) out.push_back(e);
  }
  return out;
}

FamilyReport VerifyFamily(const FamilySpec& spec, int jobs) {
  FamilyReport report;
  report.spec = spec;
  TruncatedGraph t = Generate(spec);
  t.interior_edges = CertifyInterior(spec, t);
  const Graph& g = t.graph;
  report.vertex_count = g.vertex_count();
  report.edge_count = g.edge_count();
  const int delta = ClaimedDelta(spec);
  report.claimed_delta = delta;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

  const std::set<Edge> interior(t.interior_edges.begin(),
                                t.interior_edges.end());
  if (interior.empty()) {
    fail("no certified interior edges");
    return report;
  }

  report.curvatures = EdgeCurvatures(g, t.interior_edges, jobs);
  for (const EdgeCurvature& ec : report.curvatures) {
    if (!report.min_curvature || ec.kappa < *report.min_curvature) {
      report.min_curvature = ec.kappa;
    }
    if (ec.kappa.sign() < 0) {
      fail("negative curvature " + ec.kappa.to_string() + " on edge " +
           ec.edge.ToString());
    }
  }

  std::set<Vertex> interior_vertices;
  for (const Edge& e : interior) {
    interior_vertices.insert(e.u);
    interior_vertices.insert(e.v);
  }
  report.min_interior_degree = g.vertex_count();
  for (Vertex v : interior_vertices) {
    report.min_interior_degree = std::min(report.min_interior_degree, g.degree(v));
    report.max_interior_degree = std::max(report.max_interior_degree, g.degree(v));
  }
  if (report.min_interior_degree != delta) {
    fail("minimum interior degree " + std::to_string(report.min_interior_degree) +
         " differs from claimed delta " + std::to_string(delta));
  }

  // Cuts: between consecutive slices for generated strips, or declared.
  std::vector<std::pair<int, CutCertificate>> cuts;
  if (spec.base == FamilyBase::kFromFile) {
    for (const auto& side : spec.declared_cuts) {
      cuts.emplace_back(-1, CutFromSide(g, side));
    }
  } else if (!spec.cylinder) {
    std::vector<Vertex> side;
    for (int s = 0; s + 1 < static_cast<int>(t.slices.size()); ++s) {
      side.insert(side.end(), t.slices[s].begin(), t.slices[s].end());
      CutCertificate cert = CutFromSide(g, side);
      const bool inside = std::all_of(
          cert.cut_edges.begin(), cert.cut_edges.end(),
          [&](const Edge& e) { return interior.count(e) > 0; });
      if (inside) cuts.emplace_back(s, std::move(cert));
    }
  }

  for (auto& [slice, cert] : cuts) {
    CutReport cr;
    cr.left_slice = slice;
    cr.cert = std::move(cert);
    cr.bipartite = MakeCutBipartite(g, cr.cert);
    cr.cls = Classify(cr.bipartite.h);
    const std::string name = CutName(cr);
    if (slice >= 0) {
      cr.separating_min =
          MinSeparatingCut(g, t.slices.front(), t.slices.back()).size;
    } else {
      std::set<Vertex> ends;
      for (const Edge& e : cr.cert.cut_edges) {
        ends.insert(e.u);
        ends.insert(e.v);
      }
      std::vector<Vertex> xs;
      std::vector<Vertex> ys;
      for (Vertex v : cr.cert.side_x) {
        if (!ends.count(v)) xs.push_back(v);
      }
      for (Vertex v : cr.cert.side_y) {
        if (!ends.count(v)) ys.push_back(v);
      }
      cr.separating_min = xs.empty() || ys.empty()
                              ? cr.cert.size
                              : MinSeparatingCut(g, xs, ys).size;
    }
    if (cr.cert.size != delta - 1) {
      fail(name + " has " + std::to_string(cr.cert.size) +
           " edges, expected " + std::to_string(delta - 1));
    }
    if (cr.separating_min != cr.cert.size) {
      fail(name + " is not a minimum separating cut (min " +
           std::to_string(cr.separating_min) + ")");
    }
    if (!cr.cls.rigid() && cr.cls.kind != RigidKind::kStar) {
      fail(name + " has cut graph class " + cr.cls.ToString());
    }
    const CutBipartite& cb = cr.bipartite;
    const std::vector<Vertex> part_a(cb.back_map.begin(),
                                     cb.back_map.begin() + cb.p);
    const std::vector<Vertex> part_b(cb.back_map.begin() + cb.p,
                                     cb.back_map.end());
    cr.a_complete = IsClique(g, part_a);
    cr.b_complete = IsClique(g, part_b);
    if (!cr.a_complete || !cr.b_complete) {
      fail(name + " has a non-complete side among its cut endpoints");
    }
    const bool star = IsStar(cb.h);
    for (const Edge& e : cr.cert.cut_edges) {
      CutEdgeCheck check;
      check.edge = e;
      check.quantities = ComputeCutQuantities(cb, e);
      check.identities = CutIdentitiesHold(cb, check.quantities);
      if (!check.identities) {
        fail(name + " edge " + e.ToString() + " breaks the cut identities");
      }
      if (g.degree(e.u) == delta && g.degree(e.v) == delta) {
        check.cost_bound = CheckCutEdgeCostBound(g, cr.cert, e, delta);
        if (!check.cost_bound->holds) {
          fail(name + " edge " + e.ToString() + ": cost " +
               std::to_string(check.cost_bound->cost) + " below bound " +
               std::to_string(check.cost_bound->bound));
        }
      }
      if (star && cr.cert.size <= delta - 1) {
        check.star_bound = CheckStarCutLowerBound(g, cr.cert, e, delta);
        if (!check.star_bound->holds) {
          fail(name + " edge " + e.ToString() + ": transport cost " +
               check.star_bound->w.to_string() + " below star bound " +
               check.star_bound->bound.to_string());
        }
      }
      cr.edges.push_back(std::move(check));
    }
    report.cuts.push_back(std::move(cr));
  }

  for (Vertex hub : t.hubs) {
    const auto nbrs = g.neighbors(hub);
    const bool certified = std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex w) {
      return interior.count(Edge::Of(hub, w)) > 0;
    });
    if (!certified) continue;
    HubReport hr;
    hr.hub = hub;
    hr.degree = g.degree(hub);
    const int layer = t.coords[hub].layer;
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    for (Vertex w : nbrs) {
      (t.coords[w].layer == layer ? left : right).push_back(w);
    }
    hr.r = static_cast<int>(left.size());
    hr.degree_is_2r = hr.degree == 2 * hr.r;
    hr.neighbour_degrees_r_plus_1 =
        std::all_of(nbrs.begin(), nbrs.end(),
                    [&](Vertex w) { return g.degree(w) == hr.r + 1; });
    hr.far_side_clique = IsClique(g, left) && IsClique(g, right) &&
                         static_cast<int>(right.size()) == hr.r;
    if (!hr.degree_is_2r || !hr.neighbour_degrees_r_plus_1 ||
        !hr.far_side_clique) {
      fail("hub vertex " + std::to_string(hub) +
           " breaks the star-cut degree or clique facts");
    }
    report.hubs.push_back(hr);
  }
  return report;
}

std::vector<PairingOutcome> SurveyPairings(const FamilySpec& spec,
                                           int insert_index, int jobs) {
  if (insert_index < 0 || insert_index >= static_cast<int>(spec.inserts.size()) ||
      spec.inserts[insert_index].kind != InsertOp::Kind::kK) {
    throw InvalidArgument("pairing survey needs a K-operation insert");
  }
  std::vector<PairingOutcome> out;
  for (int left = 0; left < 3; ++left) {
    for (int right = 0; right < 3; ++right) {
      FamilySpec variant = spec;
      variant.inserts[insert_index].pairing = {left, right};
      const FamilyReport report = VerifyFamily(variant, jobs);
      PairingOutcome outcome;
      outcome.pairing = {left, right};
      outcome.ok = report.ok();
      outcome.min_curvature = report.min_curvature;
      for (const EdgeCurvature& ec : report.curvatures) {
        outcome.curvature_multiset.push_back(ec.kappa);
      }
      std::sort(outcome.curvature_multiset.begin(),
                outcome.curvature_multiset.end());
      out.push_back(std::move(outcome));
    }
  }
  return out;
}

}  // namespace lly
