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

// Chordless odd cycles, bridges and exceptional pairs. A graph has no
// exceptional pair exactly when its edge ring is normal.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "edgering/error.hpp"
#include "edgering/graph.hpp"

namespace edgering {

/// A chordless cycle of odd length, in canonical orientation: smallest vertex
/// first, followed by its smaller cycle neighbour.
struct OddCycle {
  std::vector<Vertex> vertices;

  VertexSet vertex_set() const {
    return VertexSet::FromVector(vertices);
  }
  int length() const { return static_cast<int>(vertices.size()); }

  friend auto operator<=>(const OddCycle&, const OddCycle&) = default;
};

/// Two vertex-disjoint chordless odd cycles with no edge between them.
struct ExceptionalPair {
  OddCycle first;
  OddCycle second;

  friend auto operator<=>(const ExceptionalPair&,
                          const ExceptionalPair&) = default;
};

/// True when `cycle` is a cycle of `g` with no chord, of odd length >= 3.
inline bool IsMinimalOddCycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3 || k % 2 == 0) return false;
  VertexSet seen;
  for (Vertex v : cycle) {
    if (!g.contains(v) || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

namespace detail {

// Extends the induced path start, path[1], ..., path.back() through vertices
// in `allowed`. `blocked` holds the path and every neighbour of its interior
// (path[1..k-1]); a new vertex may not touch any of them.
inline void ExtendChordlessPath(const Graph& g, Vertex start, VertexSet allowed,
                                std::vector<Vertex>& path, VertexSet blocked,
                                std::vector<OddCycle>& out) {
  const Vertex tail = path.back();
  VertexSet candidates = (g.neighbors(tail) & allowed) - blocked;
  for (Vertex x : candidates) {
    if (g.adjacent(x, start)) {
      // Closing vertex. Each cycle is reached from both directions; keep the
      // one whose second vertex is smaller than its last.
      const int length = static_cast<int>(path.size()) + 1;
      if (length >= 3 && length % 2 == 1 && path[1] < x) {
        OddCycle cycle{path};
        cycle.vertices.push_back(x);
        out.push_back(std::move(cycle));
      }
      continue;
    }
    VertexSet next_blocked = blocked;
    next_blocked.insert(x);
    if (path.size() >= 2) next_blocked |= g.neighbors(tail);
    path.push_back(x);
    ExtendChordlessPath(g, start, allowed, path, next_blocked, out);
    path.pop_back();
  }
}

}  // namespace detail

/// All chordless odd cycles of `g`, each once, sorted lexicographically.
inline std::vector<OddCycle> MinimalOddCycles(const Graph& g) {
  std::vector<OddCycle> out;
  for (Vertex start : g.vertices()) {
    // Vertices above `start`: the cycle's minimum is `start`.
    VertexSet allowed = g.vertices() - VertexSet::Range(start);
    for (Vertex second : g.neighbors(start) & allowed) {
      std::vector<Vertex> path{start, second};
      VertexSet blocked{start, second};
      detail::ExtendChordlessPath(g, start, allowed, path, blocked, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether some edge joins the two (vertex-disjoint) cycles.
inline bool HasBridge(const Graph& g, const OddCycle& c, const OddCycle& other) {
  VertexSet a = c.vertex_set();
  VertexSet b = other.vertex_set();
  Require(!a.intersects(b), "cycles share a vertex; a bridge is undefined");
  for (Vertex v : a) {
    if (g.neighbors(v).intersects(b)) return true;
  }
  return false;
}

inline std::vector<ExceptionalPair> ExceptionalPairs(
    const Graph& g, const std::vector<OddCycle>& cycles) {
  std::vector<VertexSet> sets;
  sets.reserve(cycles.size());
  for (const auto& c : cycles) sets.push_back(c.vertex_set());
  std::vector<ExceptionalPair> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (sets[i].intersects(sets[j])) continue;
      if (!HasBridge(g, cycles[i], cycles[j])) {
        out.push_back(ExceptionalPair{cycles[i], cycles[j]});
      }
    }
  }
  return out;
}

inline std::vector<ExceptionalPair> ExceptionalPairs(const Graph& g) {
  return ExceptionalPairs(g, MinimalOddCycles(g));
}

/// Normality test for the edge ring of `g`.
inline bool SatisfiesOddCycleCondition(const Graph& g) {
  return ExceptionalPairs(g).empty();
}

inline std::string ToString(const OddCycle& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.vertices[i]);
  }
  return out + ")";
}

}  // namespace edgering
