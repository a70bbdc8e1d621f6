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

#include "lly/report.h"

#include <sstream>

#include "lly/errors.h"

namespace lly {

using json = nlohmann::json;

namespace {

json Integer(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<int64_t>(z.get_si());
  return z.get_str();
}

json OptionalRational(const std::optional<Rational>& r) {
  return r ? ToJson(*r) : json(nullptr);
}

std::string CsvRational(const std::optional<Rational>& r) {
  if (!r) return ",";
  return r->numerator().get_str() + "," + r->denominator().get_str();
}

}  // namespace

json ToJson(const Rational& r) {
  return {{"num", Integer(r.numerator())}, {"den", Integer(r.denominator())}};
}

json ToJson(const Edge& e) { return json::array({e.u, e.v}); }

json ToJson(const Graph& g) {
  json out;
  out["n"] = g.vertex_count();
  json adj = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto nbrs = g.neighbors(v);
    adj.push_back(std::vector<Vertex>(nbrs.begin(), nbrs.end()));
  }
  out["adjacency"] = adj;
  if (g.has_sides()) {
    std::string sides;
    for (Side s : g.sides()) sides += s == Side::kA ? 'A' : 'B';
    out["sides"] = sides;
  }
  return out;
}

json ToJson(const CutCertificate& cert) {
  json edges = json::array();
  for (const Edge& e : cert.cut_edges) edges.push_back(ToJson(e));
  return {{"size", cert.size},
          {"cut_edges", edges},
          {"side_x", cert.side_x},
          {"side_y", cert.side_y}};
}

json ToJson(const CutQuantities& q) {
  return {{"s1", q.s1},
          {"c", q.c},
          {"d", q.d},
          {"f", q.f},
          {"d_by_overlap", q.d_by_overlap},
          {"f_by_overlap", q.f_by_overlap},
          {"untouched", q.untouched}};
}

json ToJson(const CurvatureReport& report) {
  json edges = json::array();
  for (const EdgeCurvature& ec : report.edges) {
    edges.push_back({{"edge", ToJson(ec.edge)},
                     {"d_u", ec.degree_u},
                     {"d_v", ec.degree_v},
                     {"rho", ToJson(ec.rho_used)},
                     {"kappa", ToJson(ec.kappa)}});
  }
  return {{"edges", edges},
          {"complete", report.complete},
          {"nonnegative", report.nonnegative},
          {"min_curvature", OptionalRational(report.min_curvature)}};
}

std::string ToCsv(const CurvatureReport& report) {
  std::ostringstream out;
  out << "u,v,d_u,d_v,rho_num,rho_den,kappa_num,kappa_den\n";
  for (const EdgeCurvature& ec : report.edges) {
    out << ec.edge.u << ',' << ec.edge.v << ',' << ec.degree_u << ','
        << ec.degree_v << ',' << CsvRational(ec.rho_used) << ','
        << CsvRational(ec.kappa) << '\n';
  }
  return out.str();
}

json ToJson(const BipartiteCensusReport& report) {
  json counts = json::array();
  for (const auto& [key, count] : report.counts) {
    const auto& [p, q, r] = key;
    counts.push_back({{"p", p}, {"q", q}, {"r", r}, {"count", count}});
  }
  auto describe = [&](const std::vector<int>& indices) {
    json out = json::array();
    for (int i : indices) {
      const BipartiteCensusEntry& e = report.entries[i];
      out.push_back({{"class", e.cls.ToString()},
                     {"p", e.p},
                     {"q", e.q},
                     {"r", e.r},
                     {"slack", ToJson(e.slack)},
                     {"graph", ToJson(e.h)}});
    }
    return out;
  };
  return {{"max_edges", report.max_edges},
          {"classes", report.entries.size()},
          {"stars", report.star_count},
          {"counts", counts},
          {"equality", describe(report.equality)},
          {"violations", describe(report.violations)},
          {"mismatches", describe(report.mismatches)},
          {"non_forest_equality", describe(report.non_forest_equality)},
          {"ok", report.ok()}};
}

std::string ToCsv(const BipartiteCensusReport& report) {
  std::ostringstream out;
  out << "p,q,r,min_edge_star,slack_num,slack_den,class\n";
  for (const BipartiteCensusEntry& e : report.entries) {
    out << e.p << ',' << e.q << ',' << e.r << ',' << e.min_edge_star << ','
        << CsvRational(e.slack) << ',' << e.cls.ToString() << '\n';
  }
  return out.str();
}

json ToJson(const CensusReport& report) {
  json by_n = json::array();
  for (const auto& [n, c] : report.by_n) {
    by_n.push_back({{"n", n},
                    {"graphs", c.graphs},
                    {"nonnegative", c.nonnegative},
                    {"min_cuts", c.min_cuts},
                    {"cut_edges", c.cut_edges},
                    {"cost_bound_checked", c.cost_bound_checked},
                    {"cost_bound_full_cut_checked", c.cost_bound_full_cut_checked},
                    {"cost_bound_full_cut_failed", c.cost_bound_full_cut_failed},
                    {"edge_star_checked", c.edge_star_checked},
                    {"star_checked", c.star_checked},
                    {"cost_formula_checked", c.cost_formula_checked}});
  }
  json findings = json::array();
  for (const CensusFinding& f : report.counterexamples) {
    findings.push_back(
        {{"graph6", f.graph6}, {"kind", f.kind}, {"detail", f.detail}});
  }
  json nonneg = json::array();
  for (const CensusGraphSummary& s : report.graphs) {
    if (!s.nonnegative) continue;
    nonneg.push_back({{"graph6", s.graph6},
                      {"n", s.n},
                      {"m", s.m},
                      {"delta", s.min_degree},
                      {"edge_connectivity", s.edge_connectivity},
                      {"min_curvature", OptionalRational(s.min_curvature)}});
  }
  return {{"max_n", report.options.max_n},
          {"regular_only", report.options.regular_only},
          {"by_n", by_n},
          {"nonnegative_graphs", nonneg},
          {"counterexamples", findings},
          {"ok", report.ok()}};
}

std::string ToCsv(const CensusReport& report) {
  std::ostringstream out;
  out << "graph6,n,m,min_degree,edge_connectivity,regular,nonnegative,"
         "min_kappa_num,min_kappa_den\n";
  for (const CensusGraphSummary& s : report.graphs) {
    out << s.graph6 << ',' << s.n << ',' << s.m << ',' << s.min_degree
        << ',' << s.edge_connectivity << ',' << (s.regular ? 1 : 0) << ','
        << (s.nonnegative ? 1 : 0) << ',' << CsvRational(s.min_curvature)
        << '\n';
  }
  return out.str();
}

json ToJson(const FamilyReport& report) {
  json curv = json::array();
  for (const EdgeCurvature& ec : report.curvatures) {
    curv.push_back({{"edge", ToJson(ec.edge)}, {"kappa", ToJson(ec.kappa)}});
  }
  json cuts = json::array();
  for (const CutReport& cr : report.cuts) {
    json edges = json::array();
    for (const CutEdgeCheck& ch : cr.edges) {
      json item = {{"edge", ToJson(ch.edge)},
                   {"quantities", ToJson(ch.quantities)},
                   {"identities", ch.identities}};
      if (ch.cost_bound) {
        item["cost"] = ch.cost_bound->cost;
        item["cost_bound"] = ch.cost_bound->bound;
        item["cost_bound_holds"] = ch.cost_bound->holds;
      }
      if (ch.star_bound) {
        item["star_w"] = ToJson(ch.star_bound->w);
        item["star_bound"] = ToJson(ch.star_bound->bound);
        item["star_bound_holds"] = ch.star_bound->holds;
      }
      edges.push_back(item);
    }
    cuts.push_back({{"left_slice", cr.left_slice},
                    {"cut", ToJson(cr.cert)},
                    {"class", cr.cls.ToString()},
                    {"p", cr.bipartite.p},
                    {"q", cr.bipartite.q},
                    {"r", cr.bipartite.r},
                    {"separating_min", cr.separating_min},
                    {"a_complete", cr.a_complete},
                    {"b_complete", cr.b_complete},
                    {"edges", edges}});
  }
  json hubs = json::array();
  for (const HubReport& h : report.hubs) {
    hubs.push_back({{"vertex", h.hub},
                    {"degree", h.degree},
                    {"r", h.r},
                    {"degree_is_2r", h.degree_is_2r},
                    {"neighbour_degrees_r_plus_1", h.neighbour_degrees_r_plus_1},
                    {"far_side_clique", h.far_side_clique}});
  }
  return {{"spec", json::parse(FamilySpecToJson(report.spec))},
          {"description", DescribeSpec(report.spec)},
          {"vertices", report.vertex_count},
          {"edges", report.edge_count},
          {"claimed_delta", report.claimed_delta},
          {"certified_edges", report.curvatures.size()},
          {"min_interior_degree", report.min_interior_degree},
          {"max_interior_degree", report.max_interior_degree},
          {"min_curvature", OptionalRational(report.min_curvature)},
          {"curvatures", curv},
          {"cuts", cuts},
          {"hubs", hubs},
          {"failures", report.failures},
          {"ok", report.ok()}};
}

json ToJson(const std::vector<PairingOutcome>& survey) {
  json out = json::array();
  for (const PairingOutcome& o : survey) {
    out.push_back({{"pairing", o.pairing},
                   {"ok", o.ok},
                   {"min_curvature", OptionalRational(o.min_curvature)}});
  }
  bool same = true;
  for (const PairingOutcome& o : survey) {
    same = same && o.curvature_multiset == survey.front().curvature_multiset;
  }
  return {{"pairings", out}, {"identical_curvature_multisets", same}};
}

json CutAnalysisJson(const Graph& g, bool all_cuts, std::optional<int> delta) {
  const int d = delta.value_or(g.min_degree());
  const CutCertificate global = EdgeConnectivity(g);
  json out;
  out["edge_connectivity"] = global.size;
  out["min_degree"] = g.min_degree();
  out["delta_used"] = d;
  std::vector<CutCertificate> cuts{global};
  if (all_cuts) cuts = AllMinCuts(g);
  json cut_list = json::array();
  for (const CutCertificate& cert : cuts) {
    json item;
    item["cut"] = ToJson(cert);
    if (cert.size == 0) {
      cut_list.push_back(item);
      continue;
    }
    const CutBipartite cb = MakeCutBipartite(g, cert);
    item["h"] = ToJson(cb.h);
    item["h_to_g"] = cb.back_map;
    item["p"] = cb.p;
    item["q"] = cb.q;
    item["r"] = cb.r;
    item["class"] = Classify(cb.h).ToString();
    const bool star = IsStar(cb.h);
    json edges = json::array();
    for (const Edge& e : cert.cut_edges) {
      const CutQuantities q = ComputeCutQuantities(cb, e);
      json ej = {{"edge", ToJson(e)},
                 {"quantities", ToJson(q)},
                 {"identities", CutIdentitiesHold(cb, q)}};
      if (g.degree(e.u) == d && g.degree(e.v) == d) {
        const CostBoundCheck c = CheckCutEdgeCostBound(g, cert, e, d);
        ej["cost"] = c.cost;
        ej["cost_bound"] = c.bound;
        ej["cost_bound_holds"] = c.holds;
      }
      if (star && cert.size <= d - 1) {
        const StarBoundCheck s = CheckStarCutLowerBound(g, cert, e, d);
        ej["star_w"] = ToJson(s.w);
        ej["star_bound"] = ToJson(s.bound);
        ej["star_bound_holds"] = s.holds;
      }
      edges.push_back(ej);
    }
    item["edges"] = edges;
    cut_list.push_back(item);
  }
  out["cuts"] = cut_list;
  return out;
}

}  // namespace lly
