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

// Immutable simple undirected graphs and the metric and structural queries
// used throughout the library.

#ifndef LLY_GRAPH_H_
#define LLY_GRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lly {

using Vertex = int;

// Undirected edge in normalized form, u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Orders the endpoints. Throws InvalidArgument on a loop.
  static Edge Of(Vertex a, Vertex b);

  bool has_endpoint(Vertex w) const { return u == w || v == w; }
  // Endpoint that is not `w`. Precondition: has_endpoint(w).
  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool shares_endpoint(const Edge& o) const {
    return has_endpoint(o.u) || has_endpoint(o.v);
  }

  auto operator<=>(const Edge&) const = default;
  std::string ToString() const;
};

// Hop count between two vertices, or unreachable. Never a sentinel integer.
class HopDistance {
 public:
  static constexpr HopDistance Unreachable() { return HopDistance(); }
  static constexpr HopDistance Hops(int hops) { return HopDistance(hops); }

  constexpr bool reachable() const { return hops_ >= 0; }
  // Throws DisconnectedError when unreachable.
  int hops() const;

  friend constexpr bool operator==(HopDistance, HopDistance) = default;

 private:
  constexpr HopDistance() = default;
  constexpr explicit HopDistance(int hops) : hops_(hops) {}
  int hops_ = -1;
};

// Bipartition side annotation.
enum class Side : int8_t { kUnassigned = -1, kA = 0, kB = 1 };

inline Side Opposite(Side s) {
  return s == Side::kA ? Side::kB : (s == Side::kB ? Side::kA : s);
}

class Graph {
 public:
  Graph() = default;
  // Edgeless graph on `vertex_count` vertices.
  explicit Graph(int vertex_count);

  // Throws InvalidArgument on out-of-range endpoints, loops or duplicates.
  static Graph FromEdges(int vertex_count, std::span<const Edge> edges);
  static Graph FromPairs(int vertex_count,
                         std::initializer_list<std::pair<int, int>> pairs);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool contains(const Edge& e) const { return has_edge(e.u, e.v); }
  // All edges in lexicographic order.
  std::vector<Edge> edges() const;
  // 0 for a graph without vertices.
  int min_degree() const;
  int max_degree() const;
  std::vector<int> degree_sequence() const;

  // Throws InvalidArgument unless 0 <= v < vertex_count().
  void CheckVertex(Vertex v) const;
  // Throws InvalidArgument unless `e` is an edge of this graph.
  void CheckEdge(const Edge& e) const;

  bool has_sides() const { return !sides_.empty(); }
  Side side(Vertex v) const;
  const std::vector<Side>& sides() const { return sides_; }
  Graph WithSides(std::vector<Side> sides) const;

  bool has_interior_flags() const { return !interior_.empty(); }
  bool is_interior(Vertex v) const;
  Graph WithInteriorFlags(std::vector<bool> interior) const;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  // Annotations are carried over.
  Graph InducedSubgraph(std::span<const Vertex> vertices) const;
  Graph WithoutEdges(std::span<const Edge> removed) const;
  // Relabels vertex v as perm[v].
  Graph Permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.sides_ == b.sides_ &&
           a.interior_ == b.interior_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
  std::vector<Side> sides_;
  std::vector<bool> interior_;
};

// Shortest-path hop counts from `source`.
std::vector<HopDistance> BfsDistances(const Graph& g, Vertex source);

// Edges other than `e` sharing an endpoint with `e`.
std::vector<Edge> SphereOfEdge(const Graph& g, const Edge& e);

// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);

// Component count equals |V| - |E|.
bool IsForest(const Graph& g);

// Sorted common neighbours of a and b.
std::vector<Vertex> CommonNeighbors(const Graph& g, Vertex a, Vertex b);

// True when every pair of distinct vertices in `vertices` is adjacent.
bool IsClique(const Graph& g, std::span<const Vertex> vertices);

// Proper 2-colouring if one exists, else empty.
std::vector<Side> TwoColoring(const Graph& g);

// Connected graph with one vertex adjacent to all others and no other edges.
// K_1 is not a star.
bool IsStar(const Graph& g);

// Small named graphs.
Graph CompleteGraph(int n);
Graph CycleGraph(int n);
Graph PathGraph(int n);
Graph StarGraph(int leaves);
Graph PetersenGraph();
Graph CompleteBipartite(int p, int q);

}  // namespace lly

#endif  // LLY_GRAPH_H_
