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

#include "lly/canonical.h"

#include <algorithm>
#include <vector>

#include "lly/errors.h"

namespace lly {

namespace {

using Partition = std::vector<std::vector<Vertex>>;

class ComponentCanonizer {
 public:
  ComponentCanonizer(const Graph& g, std::vector<int> colors,
                     int64_t max_leaves)
      : g_(g), colors_(std::move(colors)), max_leaves_(max_leaves) {}

  std::string Run() {
    const int n = g_.vertex_count();
    Partition initial;
    std::vector<Vertex> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return colors_[a] < colors_[b]; });
    for (int i = 0; i < n; ++i) {
      if (i == 0 || colors_[order[i]] != colors_[order[i - 1]]) {
        initial.emplace_back();
      }
      initial.back().push_back(order[i]);
    }
    Search(Refine(std::move(initial)));
    return best_;
  }

 private:
  // Splits cells by neighbour counts into every cell until stable. The
  // result depends only on the isomorphism type of (graph, partition).
  Partition Refine(Partition cells) const {
    const int n = g_.vertex_count();
    std::vector<int> cell_of(n);
    while (true) {
      for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
        for (Vertex v : cells[c]) cell_of[v] = c;
      }
      const int k = static_cast<int>(cells.size());
      std::vector<std::vector<int>> counts(n, std::vector<int>(k, 0));
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g_.neighbors(v)) ++counts[v][cell_of[w]];
      }
      Partition next;
      for (auto& cell : cells) {
        std::stable_sort(cell.begin(), cell.end(), [&](Vertex a, Vertex b) {
          return counts[a] < counts[b];
        });
        for (size_t i = 0; i < cell.size(); ++i) {
          if (i == 0 || counts[cell[i]] != counts[cell[i - 1]]) {
            next.emplace_back();
          }
          next.back().push_back(cell[i]);
        }
      }
      if (next.size() == cells.size()) return next;
      cells = std::move(next);
    }
  }

  void Search(const Partition& cells) {
    int target = -1;
    for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
      if (cells[c].size() > 1 &&
          (target < 0 || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    if (target < 0) {
      Leaf(cells);
      return;
    }
    for (Vertex v : cells[target]) {
      Partition child;
      child.reserve(cells.size() + 1);
      for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      Search(Refine(std::move(child)));
    }
  }

  void Leaf(const Partition& cells) {
    if (++leaves_ > max_leaves_) {
      throw BudgetExceeded("canonical form search exceeded " +
                           std::to_string(max_leaves_) + " leaves");
    }
    const int n = g_.vertex_count();
    std::vector<Vertex> order;
    order.reserve(n);
    for (const auto& cell : cells) order.push_back(cell[0]);
    std::string code;
    code.push_back(static_cast<char>(n));
    for (Vertex v : order) code.push_back(static_cast<char>(colors_[v]));
    int acc = 0;
    int filled = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        acc = (acc << 1) | (g_.has_edge(order[i], order[j]) ? 1 : 0);
        if (++filled == 8) {
          code.push_back(static_cast<char>(acc));
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled > 0) code.push_back(static_cast<char>(acc << (8 - filled)));
    if (!have_best_ || code < best_) {
      best_ = std::move(code);
      have_best_ = true;
    }
  }

  const Graph& g_;
  std::vector<int> colors_;
  int64_t max_leaves_;
  int64_t leaves_ = 0;
  bool have_best_ = false;
  std::string best_;
};

std::string FormWithColors(const Graph& g, const std::vector<int>& colors,
                           int64_t max_leaves) {
  std::vector<std::string> parts;
  for (const auto& comp : ConnectedComponents(g)) {
    const Graph sub = g.InducedSubgraph(comp);
    std::vector<int> sub_colors;
    for (Vertex v : comp) sub_colors.push_back(colors[v]);
    parts.push_back(
        ComponentCanonizer(sub, std::move(sub_colors), max_leaves).Run());
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  out.push_back(static_cast<char>(parts.size()));
  for (const auto& p : parts) {
    const size_t len = p.size();
    out.push_back(static_cast<char>(len >> 8));
    out.push_back(static_cast<char>(len & 0xff));
    out += p;
  }
  return out;
}

}  // namespace

std::string CanonicalForm(const Graph& g, const CanonicalOptions& options) {
  const int n = g.vertex_count();
  if (n > options.max_vertices) {
    throw BudgetExceeded("canonical form limited to " +
                         std::to_string(options.max_vertices) + " vertices");
  }
  std::vector<int> colors(n, 0);
  if (!options.respect_bipartition) {
    return FormWithColors(g, colors, options.max_leaves);
  }
  if (!g.has_sides()) {
    throw InvalidArgument("bipartition requested but graph has no sides");
  }
  int size_a = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.side(v) == Side::kUnassigned) {
      throw InvalidArgument("vertex without a side");
    }
    colors[v] = g.side(v) == Side::kA ? 1 : 2;
    size_a += g.side(v) == Side::kA ? 1 : 0;
  }
  std::string form = FormWithColors(g, colors, options.max_leaves);
  if (2 * size_a == n) {
    for (int& c : colors) c = 3 - c;
    form = std::min(form, FormWithColors(g, colors, options.max_leaves));
  }
  return form;
}

}  // namespace lly
