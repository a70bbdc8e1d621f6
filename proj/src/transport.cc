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

#include "lly/transport.h"

#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "lly/errors.h"

namespace lly {

namespace {

// Hop distances between every vertex of `from` and every vertex of `to`.
std::map<std::pair<Vertex, Vertex>, int> SupportDistances(
    const Graph& g, const std::set<Vertex>& from, const std::set<Vertex>& to) {
  std::map<std::pair<Vertex, Vertex>, int> out;
  for (Vertex a : from) {
    const auto dist = BfsDistances(g, a);
    for (Vertex b : to) {
      if (!dist[b].reachable()) {
        throw DisconnectedError("vertices " + std::to_string(a) + " and " +
                                std::to_string(b) +
                                " lie in different components");
      }
      out[{a, b}] = dist[b].hops();
    }
  }
  return out;
}

std::set<Vertex> SupportOf(const Measure& mu) {
  std::set<Vertex> out;
  for (const auto& [v, m] : mu.support()) out.insert(v);
  return out;
}

// Successive-shortest-path min-cost flow with arbitrary-precision
// capacities. Graphs here have a few dozen nodes, so Bellman-Ford suffices.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : out_(nodes) {}

  int AddArc(int from, int to, const mpz_class& capacity, int64_t cost) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, cost});
    arcs_.push_back({from, 0, -cost});
    out_[from].push_back(id);
    out_[to].push_back(id + 1);
    return id;
  }

  void Solve(int source, int sink, const mpz_class& amount) {
    const int n = static_cast<int>(out_.size());
    constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
    mpz_class sent = 0;
    while (sent < amount) {
      std::vector<int64_t> dist(n, kInf);
      std::vector<int> via(n, -1);
      dist[source] = 0;
      for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
          if (dist[u] == kInf) continue;
          for (int id : out_[u]) {
            const Arc& a = arcs_[id];
            if (a.capacity > 0 && dist[u] + a.cost < dist[a.to]) {
              dist[a.to] = dist[u] + a.cost;
              via[a.to] = id;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (dist[sink] == kInf) {
        throw InternalError("transport network has no augmenting path");
      }
      mpz_class push = amount - sent;
      for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        if (arcs_[via[v]].capacity < push) push = arcs_[via[v]].capacity;
      }
      for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].capacity -= push;
        arcs_[via[v] ^ 1].capacity += push;
      }
      sent += push;
    }
  }

  // Flow on a forward arc returned by AddArc.
  const mpz_class& flow(int id) const { return arcs_[id + 1].capacity; }

 private:
  struct Arc {
    int to;
    mpz_class capacity;
    int64_t cost;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

mpz_class Lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

void CheckMarginals(const Measure& mu1, const Measure& mu2,
                    const TransportPlan& plan) {
  std::map<Vertex, Rational> rows;
  std::map<Vertex, Rational> cols;
  for (const auto& [st, m] : plan.entries) {
    if (m.sign() < 0) throw InvalidArgument("negative plan entry");
    if (m.sign() == 0) continue;
    rows[st.first] += m;
    cols[st.second] += m;
  }
  if (rows != mu1.support() || cols != mu2.support()) {
    throw InvalidArgument("plan marginals do not match the measures");
  }
}

}  // namespace

Measure::Measure(std::map<Vertex, Rational> masses) {
  Rational total = 0;
  for (auto& [v, m] : masses) {
    if (m.sign() < 0) {
      throw InvalidArgument("negative mass at vertex " + std::to_string(v));
    }
    total += m;
    if (m.sign() > 0) masses_.emplace(v, std::move(m));
  }
  if (total != 1) {
    throw InvalidArgument("measure has total mass " + total.to_string());
  }
}

Measure Measure::PointMass(Vertex v) { return Measure({{v, Rational(1)}}); }

Rational Measure::mass(Vertex v) const {
  const auto it = masses_.find(v);
  return it == masses_.end() ? Rational(0) : it->second;
}

Measure VertexMeasure(const Graph& g, Vertex x, const Rational& rho) {
  g.CheckVertex(x);
  if (rho < 0 || rho > 1) {
    throw InvalidArgument("idleness " + rho.to_string() + " outside [0,1]");
  }
  std::map<Vertex, Rational> masses{{x, rho}};
  if (rho == 1) return Measure(std::move(masses));
  if (g.degree(x) == 0) {
    throw PreconditionError("isolated vertex " + std::to_string(x) +
                            " needs idleness 1");
  }
  const Rational share = (Rational(1) - rho) / Rational(g.degree(x));
  for (Vertex w : g.neighbors(x)) masses[w] = share;
  return Measure(std::move(masses));
}

TransportPlan Wasserstein(const Graph& g, const Measure& mu1,
                          const Measure& mu2) {
  for (const auto& [v, m] : mu1.support()) g.CheckVertex(v);
  for (const auto& [v, m] : mu2.support()) g.CheckVertex(v);
  const auto sources = SupportOf(mu1);
  const auto sinks = SupportOf(mu2);
  const auto dist = SupportDistances(g, sources, sinks);

  mpz_class scale = 1;
  for (const auto& [v, m] : mu1.support()) scale = Lcm(scale, m.denominator());
  for (const auto& [v, m] : mu2.support()) scale = Lcm(scale, m.denominator());

  const int ns = static_cast<int>(sources.size());
  const std::vector<Vertex> src(sources.begin(), sources.end());
  const std::vector<Vertex> dst(sinks.begin(), sinks.end());
  MinCostFlow flow(2 + ns + static_cast<int>(dst.size()));
  constexpr int kSource = 0;
  constexpr int kSink = 1;
  for (int i = 0; i < ns; ++i) {
    const mpq_class supply = mu1.mass(src[i]).value() * scale;
    flow.AddArc(kSource, 2 + i, supply.get_num(), 0);
  }
  for (int j = 0; j < static_cast<int>(dst.size()); ++j) {
    const mpq_class demand = mu2.mass(dst[j]).value() * scale;
    flow.AddArc(2 + ns + j, kSink, demand.get_num(), 0);
  }
  std::map<std::pair<Vertex, Vertex>, int> arc_of;
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < static_cast<int>(dst.size()); ++j) {
      arc_of[{src[i], dst[j]}] =
          flow.AddArc(2 + i, 2 + ns + j, scale, dist.at({src[i], dst[j]}));
    }
  }
  flow.Solve(kSource, kSink, scale);

  TransportPlan plan;
  for (const auto& [st, id] : arc_of) {
    if (flow.flow(id) == 0) continue;
    const Rational mass(flow.flow(id), scale);
    plan.entries.emplace(st, mass);
    plan.cost += mass * Rational(dist.at(st));
  }
  return plan;
}

Rational PlanGroundCost(const Graph& g, const TransportPlan& plan) {
  std::set<Vertex> from;
  std::set<Vertex> to;
  for (const auto& [st, m] : plan.entries) {
    from.insert(st.first);
    to.insert(st.second);
  }
  const auto dist = SupportDistances(g, from, to);
  Rational cost = 0;
  for (const auto& [st, m] : plan.entries) cost += m * Rational(dist.at(st));
  return cost;
}

std::optional<DualCertificate> FindDualCertificate(const Graph& g,
                                                   const Measure& mu1,
                                                   const Measure& mu2,
                                                   const TransportPlan& plan) {
  CheckMarginals(mu1, mu2, plan);
  std::set<Vertex> all = SupportOf(mu1);
  all.merge(SupportOf(mu2));
  const auto dist = SupportDistances(g, all, all);
  const std::vector<Vertex> nodes(all.begin(), all.end());
  const int k = static_cast<int>(nodes.size());
  std::map<Vertex, int> index;
  for (int i = 0; i < k; ++i) index[nodes[i]] = i;

  // Difference constraints f(b) - f(a) <= w for every arc (a, b, w).
  struct Arc {
    int a;
    int b;
    int64_t w;
  };
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) arcs.push_back({i, j, dist.at({nodes[i], nodes[j]})});
    }
  }
  for (const auto& [st, m] : plan.entries) {
    if (m.sign() > 0 && st.first != st.second) {
      arcs.push_back({index.at(st.first), index.at(st.second),
                      -static_cast<int64_t>(dist.at(st))});
    }
  }
  std::vector<int64_t> f(k, 0);
  bool stable = false;
  for (int round = 0; round <= k && !stable; ++round) {
    stable = true;
    for (const Arc& arc : arcs) {
      if (f[arc.a] + arc.w < f[arc.b]) {
        f[arc.b] = f[arc.a] + arc.w;
        stable = false;
      }
    }
  }
  if (!stable) return std::nullopt;

  DualCertificate cert;
  for (int i = 0; i < k; ++i) {
    cert.potential[nodes[i]] = Rational(f[i]);
    cert.value += Rational(f[i]) * (mu1.mass(nodes[i]) - mu2.mass(nodes[i]));
  }
  return cert;
}

bool VerifyPlanOptimal(const Graph& g, const Measure& mu1, const Measure& mu2,
                       const TransportPlan& plan) {
  const auto cert = FindDualCertificate(g, mu1, mu2, plan);
  if (!cert) return false;
  for (const auto& [a, fa] : cert->potential) {
    const auto dist = BfsDistances(g, a);
    for (const auto& [b, fb] : cert->potential) {
      if (fa - fb > Rational(dist[b].hops())) return false;
    }
  }
  return cert->value == plan.cost && plan.cost == PlanGroundCost(g, plan);
}

}  // namespace lly
