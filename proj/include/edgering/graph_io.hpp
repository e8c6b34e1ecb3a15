// Copyright 2026 The edgering Authors.
//
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

// Plain-text graph format:
//
//   c <comment>        ignored
//   p <d> <m>          header, exactly once, before any edge
//   e <i> <j>          exactly m edge lines, 1-based labels
//
// Blank lines are ignored. The writer emits edges in canonical order.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "edgering/error.hpp"
#include "edgering/graph.hpp"

namespace edgering {

namespace detail {

inline std::vector<std::string> SplitWords(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

inline long ParseLabel(const std::string& token, int line_no) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) {
    Fail(ErrorKind::kInvalidInput, "line " + std::to_string(line_no) +
                                       ": expected an integer, got '" +
                                       token + "'");
  }
  return value;
}

}  // namespace detail

inline Graph ParseGraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long d = 0;
  long m = 0;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    Fail(ErrorKind::kInvalidInput, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto words = detail::SplitWords(line);
    if (words.empty() || words[0] == "c") continue;
    if (words[0] == "p") {
      if (have_header) fail("second 'p' header");
      if (words.size() != 3) fail("header must be 'p <d> <m>'");
      d = detail::ParseLabel(words[1], line_no);
      m = detail::ParseLabel(words[2], line_no);
      if (d < 1 || d > VertexSet::kMaxVertex) fail("vertex count out of range");
      if (m < 0) fail("negative edge count");
      have_header = true;
    } else if (words[0] == "e") {
      if (!have_header) fail("edge before 'p' header");
      if (words.size() != 3) fail("edge line must be 'e <i> <j>'");
      long i = detail::ParseLabel(words[1], line_no);
      long j = detail::ParseLabel(words[2], line_no);
      if (i < 1 || i > d || j < 1 || j > d) fail("edge label outside 1.." + std::to_string(d));
      edges.push_back(Edge{static_cast<int>(i), static_cast<int>(j)});
    } else {
      fail("unknown line type '" + words[0] + "'");
    }
  }
  if (!have_header) Fail(ErrorKind::kInvalidInput, "missing 'p <d> <m>' header");
  if (static_cast<long>(edges.size()) != m) {
    Fail(ErrorKind::kInvalidInput,
         "header announces " + std::to_string(m) + " edges, found " +
             std::to_string(edges.size()));
  }
  return Graph::FromEdges(static_cast<int>(d), edges);
}

/// Serializes `g`. When the graph does not span all labels 1..d (an induced
/// subgraph), present vertices are renumbered 1..k in increasing order.
inline std::string FormatGraph(const Graph& g,
                               const std::vector<std::string>& comments = {}) {
  std::vector<int> relabel(g.vertex_count() + 1, 0);
  int k = 0;
  for (Vertex v : g.vertices()) relabel[v] = ++k;
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p " << k << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << relabel[e.u] << ' ' << relabel[e.v] << '\n';
  }
  return out.str();
}

inline Graph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kInvalidInput, "cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

inline void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorKind::kInvalidInput, "cannot write '" + path + "'");
  out << text;
}

}  // namespace edgering
