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

#include "lly/graph.h"

#include <algorithm>
#include <deque>
#include <numeric>

#include "lly/errors.h"

namespace lly {

Edge Edge::Of(Vertex a, Vertex b) {
  if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string Edge::ToString() const {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

int HopDistance::hops() const {
  if (!reachable()) throw DisconnectedError("distance is infinite");
  return hops_;
}

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw InvalidArgument("negative vertex count");
  adjacency_.resize(vertex_count);
}

Graph Graph::FromEdges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& raw : edges) {
    const Edge e = Edge::Of(raw.u, raw.v);
    if (e.u < 0 || e.v >= vertex_count) {
      throw InvalidArgument("edge " + e.ToString() + " out of range for " +
                            std::to_string(vertex_count) + " vertices");
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidArgument("duplicate edge in input");
    }
  }
  g.edge_count_ = static_cast<int>(edges.size());
  return g;
}

Graph Graph::FromPairs(int vertex_count,
                       std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back(Edge::Of(a, b));
  return FromEdges(vertex_count, edges);
}

void Graph::CheckVertex(Vertex v) const {
  if (v < 0 || v >= vertex_count()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
}

void Graph::CheckEdge(const Edge& e) const {
  CheckVertex(e.u);
  CheckVertex(e.v);
  if (!has_edge(e.u, e.v)) {
    throw InvalidArgument("edge " + e.ToString() + " is not in the graph");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  CheckVertex(v);
  return adjacency_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) {
    return false;
  }
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::min_degree() const {
  int best = vertex_count() == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) out[v] = degree(v);
  return out;
}

Side Graph::side(Vertex v) const {
  CheckVertex(v);
  return sides_.empty() ? Side::kUnassigned : sides_[v];
}

Graph Graph::WithSides(std::vector<Side> sides) const {
  if (static_cast<int>(sides.size()) != vertex_count()) {
    throw InvalidArgument("side annotation size mismatch");
  }
  Graph g = *this;
  g.sides_ = std::move(sides);
  return g;
}

bool Graph::is_interior(Vertex v) const {
  CheckVertex(v);
  return !interior_.empty() && interior_[v];
}

Graph Graph::WithInteriorFlags(std::vector<bool> interior) const {
  if (static_cast<int>(interior.size()) != vertex_count()) {
    throw InvalidArgument("interior annotation size mismatch");
  }
  Graph g = *this;
  g.interior_ = std::move(interior);
  return g;
}

Graph Graph::InducedSubgraph(std::span<const Vertex> vertices) const {
  std::vector<int> index(vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    CheckVertex(vertices[i]);
    if (index[vertices[i]] != -1) {
      throw InvalidArgument("repeated vertex in induced subgraph");
    }
    index[vertices[i]] = i;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    for (Vertex w : adjacency_[vertices[i]]) {
      if (index[w] > i) edges.push_back({i, index[w]});
    }
  }
  Graph g = FromEdges(static_cast<int>(vertices.size()), edges);
  if (has_sides()) {
    std::vector<Side> s;
    for (Vertex v : vertices) s.push_back(sides_[v]);
    g.sides_ = std::move(s);
  }
  if (has_interior_flags()) {
    std::vector<bool> f;
    for (Vertex v : vertices) f.push_back(interior_[v]);
    g.interior_ = std::move(f);
  }
  return g;
}

Graph Graph::WithoutEdges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (Edge& e : drop) e = Edge::Of(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> keep;
  for (const Edge& e : edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
  }
  Graph g = FromEdges(vertex_count(), keep);
  g.sides_ = sides_;
  g.interior_ = interior_;
  return g;
}

Graph Graph::Permuted(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != vertex_count()) {
    throw InvalidArgument("permutation size mismatch");
  }
  std::vector<bool> seen(vertex_count(), false);
  for (Vertex p : perm) {
    CheckVertex(p);
    if (seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  for (const Edge& e : edges()) mapped.push_back(Edge::Of(perm[e.u], perm[e.v]));
  Graph g = FromEdges(vertex_count(), mapped);
  if (has_sides()) {
    g.sides_.assign(vertex_count(), Side::kUnassigned);
    for (Vertex v = 0; v < vertex_count(); ++v) g.sides_[perm[v]] = sides_[v];
  }
  if (has_interior_flags()) {
    g.interior_.assign(vertex_count(), false);
    for (Vertex v = 0; v < vertex_count(); ++v) {
      g.interior_[perm[v]] = interior_[v];
    }
  }
  return g;
}

std::vector<HopDistance> BfsDistances(const Graph& g, Vertex source) {
  g.CheckVertex(source);
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<HopDistance> out;
  out.reserve(dist.size());
  for (int d : dist) {
    out.push_back(d < 0 ? HopDistance::Unreachable() : HopDistance::Hops(d));
  }
  return out;
}

std::vector<Edge> SphereOfEdge(const Graph& g, const Edge& e) {
  g.CheckEdge(e);
  std::vector<Edge> out;
  for (Vertex end : {e.u, e.v}) {
    for (Vertex w : g.neighbors(end)) {
      if (!e.has_endpoint(w)) out.push_back(Edge::Of(end, w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> ConnectedComponents(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool IsConnected(const Graph& g) {
  return g.vertex_count() > 0 && ConnectedComponents(g).size() == 1;
}

bool IsForest(const Graph& g) {
  const int c = static_cast<int>(ConnectedComponents(g).size());
  return c == g.vertex_count() - g.edge_count();
}

std::vector<Vertex> CommonNeighbors(const Graph& g, Vertex a, Vertex b) {
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  std::vector<Vertex> out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                        std::back_inserter(out));
  return out;
}

bool IsClique(const Graph& g, std::span<const Vertex> vertices) {
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

std::vector<Side> TwoColoring(const Graph& g) {
  std::vector<Side> color(g.vertex_count(), Side::kUnassigned);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != Side::kUnassigned) continue;
    color[s] = Side::kA;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == Side::kUnassigned) {
          color[w] = Opposite(color[u]);
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return {};
        }
      }
    }
  }
  return color;
}

bool IsStar(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

Graph CompleteGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::FromEdges(n, edges);
}

Graph CycleGraph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::Of(i, (i + 1) % n));
  return Graph::FromEdges(n, edges);
}

Graph PathGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::FromEdges(n, edges);
}

Graph StarGraph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::FromEdges(leaves + 1, edges);
}

Graph PetersenGraph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge::Of(i, (i + 1) % 5));
    edges.push_back(Edge::Of(i, i + 5));
    edges.push_back(Edge::Of(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::FromEdges(10, edges);
}

Graph CompleteBipartite(int p, int q) {
  std::vector<Edge> edges;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < q; ++b) edges.push_back({a, p + b});
  }
  std::vector<Side> sides(p, Side::kA);
  sides.resize(p + q, Side::kB);
  return Graph::FromEdges(p + q, edges).WithSides(std::move(sides));
}

}  // namespace lly
