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

// Readers and writers for graph6 and the plain "n m" edge-list format.

#ifndef LLY_GRAPH_IO_H_
#define LLY_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "lly/graph.h"

namespace lly {

enum class GraphFormat { kGraph6, kAdjacency };

// Parses one graph6 line. An optional ">>graph6<<" header and trailing
// whitespace are accepted. Throws ParseError.
Graph ParseGraph6(std::string_view text);
std::string ToGraph6(const Graph& g);

// "n m" header followed by m lines "u v", 0-indexed. Lines starting with '#'
// are comments. Throws ParseError on loops, duplicates or count mismatch.
Graph ParseAdjacency(std::string_view text);
std::string ToAdjacency(const Graph& g);

Graph ParseGraph(std::string_view text, GraphFormat format);
// Reads a whole file. Throws ParseError if it cannot be opened.
std::string ReadFileOrThrow(const std::string& path);
Graph ReadGraphFile(const std::string& path, GraphFormat format);

}  // namespace lly

#endif  // LLY_GRAPH_IO_H_
