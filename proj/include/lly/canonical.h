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

// Canonical byte strings for small graphs: two graphs get the same string
// exactly when they are isomorphic.
//
// Each connected component is canonicalized separately by colour refinement
// followed by individualization with backtracking over every vertex of the
// first smallest non-trivial cell; the lexicographically least adjacency
// encoding over all leaves wins. Component forms are sorted and concatenated.

#ifndef LLY_CANONICAL_H_
#define LLY_CANONICAL_H_

#include <cstdint>
#include <string>

#include "lly/graph.h"

namespace lly {

struct CanonicalOptions {
  // Only side-preserving maps are allowed, plus a global swap of the two
  // sides when they have equal size. Requires g.has_sides().
  bool respect_bipartition = false;
  int max_vertices = 16;
  // Upper bound on search-tree leaves per component.
  int64_t max_leaves = 2'000'000;
};

// Throws BudgetExceeded when a limit in `options` would be exceeded.
std::string CanonicalForm(const Graph& g, const CanonicalOptions& options = {});

inline std::string CanonicalForm(const Graph& g, bool respect_bipartition) {
  CanonicalOptions options;
  options.respect_bipartition = respect_bipartition;
  return CanonicalForm(g, options);
}

}  // namespace lly

#endif  // LLY_CANONICAL_H_
