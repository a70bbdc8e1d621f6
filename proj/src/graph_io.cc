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

#include "lly/graph_io.h"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "lly/errors.h"

namespace lly {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int SixBits(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) {
    throw ParseError(std::string("graph6: invalid byte '") + c + "'");
  }
  return v;
}

void AppendN(int64_t n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    return;
  }
  out.push_back(126);
  out.push_back(126);
  for (int shift = 30; shift >= 0; shift -= 6) {
    out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

Graph ParseGraph6(std::string_view text) {
  text = Trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  size_t pos = 0;
  int64_t n = 0;
  if (text[0] != 126) {
    n = SixBits(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == 126) {
    if (text.size() < 8) throw ParseError("graph6: truncated size field");
    for (size_t i = 2; i < 8; ++i) n = (n << 6) | SixBits(text[i]);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated size field");
    for (size_t i = 1; i < 4; ++i) n = (n << 6) | SixBits(text[i]);
    pos = 4;
  }
  if (n > 100000) throw ParseError("graph6: graph too large");
  const int64_t bits = n * (n - 1) / 2;
  const int64_t bytes = (bits + 5) / 6;
  if (static_cast<int64_t>(text.size() - pos) != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) +
                     " data bytes, got " + std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  int64_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = SixBits(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  for (int64_t j = k; j < bytes * 6; ++j) {
    if ((SixBits(text[pos + j / 6]) >> (5 - j % 6)) & 1) {
      throw ParseError("graph6: nonzero padding bits");
    }
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string ToGraph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  AppendN(n, out);
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph ParseAdjacency(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<long long, long long>> pairs;
  long long n = -1;
  long long m = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream fields{std::string(t)};
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError("adjacency: line " + std::to_string(line_no) +
                       ": expected two integers");
    }
    if (n < 0) {
      n = a;
      m = b;
      if (n < 0 || m < 0) throw ParseError("adjacency: negative header");
    } else {
      pairs.emplace_back(a, b);
    }
  }
  if (n < 0) throw ParseError("adjacency: missing header");
  if (static_cast<long long>(pairs.size()) != m) {
    throw ParseError("adjacency: header declares " + std::to_string(m) +
                     " edges, found " + std::to_string(pairs.size()));
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError("adjacency: vertex out of range in edge " +
                       std::to_string(a) + " " + std::to_string(b));
    }
    if (a == b) throw ParseError("adjacency: self-loop at " + std::to_string(a));
    const Edge e = Edge::Of(static_cast<int>(a), static_cast<int>(b));
    if (!seen.insert(e).second) {
      throw ParseError("adjacency: duplicate edge " + e.ToString());
    }
    edges.push_back(e);
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string ToAdjacency(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph ParseGraph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? ParseGraph6(text)
                                        : ParseAdjacency(text);
}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph ReadGraphFile(const std::string& path, GraphFormat format) {
  return ParseGraph(ReadFileOrThrow(path), format);
}

}  // namespace lly
