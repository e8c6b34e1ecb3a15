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

// Labeled simple graphs on vertices 1..d and the elementary operations the
// rest of the library is built on. Graphs are immutable values.

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgering/error.hpp"

namespace edgering {

using Vertex = int;

/// A set of vertex labels drawn from 1..64, stored as a bitmask.
class VertexSet {
 public:
  static constexpr int kMaxVertex = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_) + 1; }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) insert(v);
  }

  /// Rejects labels outside 1..64 and repeated labels.
  static VertexSet FromVector(std::span<const Vertex> vertices) {
    VertexSet set;
    for (Vertex v : vertices) {
      Require(v >= 1 && v <= kMaxVertex,
              "vertex label " + std::to_string(v) + " out of range");
      Require(!set.contains(v),
              "duplicate vertex " + std::to_string(v) + " in vertex set");
      set.insert(v);
    }
    return set;
  }

  /// The full label range {1, ..., d}.
  static constexpr VertexSet Range(int d) {
    return VertexSet(d >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << d) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(Vertex v) const {
    return v >= 1 && v <= kMaxVertex && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  void insert(Vertex v) {
    Require(v >= 1 && v <= kMaxVertex,
            "vertex label " + std::to_string(v) + " out of range");
    bits_ |= std::uint64_t{1} << (v - 1);
  }
  void erase(Vertex v) {
    if (v >= 1 && v <= kMaxVertex) bits_ &= ~(std::uint64_t{1} << (v - 1));
  }

  /// Smallest member; the set must be non-empty.
  Vertex min() const { return std::countr_zero(bits_) + 1; }

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  VertexSet& operator|=(VertexSet other) {
    bits_ |= other.bits_;
    return *this;
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Lexicographic order on the sorted member lists.
 private:
  std::uint64_t bits_ = 0;
};

/// Orders sets by their ascending member lists.
inline bool LexLess(VertexSet a, VertexSet b) {
  auto av = a.to_vector();
  auto bv = b.to_vector();
  return std::lexicographical_compare(av.begin(), av.end(), bv.begin(),
                                      bv.end());
}

/// An unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge MakeEdge(Vertex i, Vertex j) {
  return i < j ? Edge{i, j} : Edge{j, i};
}

inline std::string ToString(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

class Graph {
 public:
  Graph() = default;

  /// Builds the canonical graph on vertices 1..d. Rejects out-of-range
  /// labels, self-loops and repeated edges. Connectivity is not required.
  static Graph FromEdgeList(int d, std::span<const std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [i, j] : pairs) edges.push_back(Edge{i, j});
    return FromEdges(d, edges);
  }

  static Graph FromEdgeList(int d,
                            std::initializer_list<std::pair<int, int>> pairs) {
    return FromEdgeList(
        d, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
  }

  static Graph FromEdges(int d, std::span<const Edge> edges) {
    Require(d >= 1 && d <= VertexSet::kMaxVertex,
            "vertex count must lie in 1.." +
                std::to_string(VertexSet::kMaxVertex) + ", got " +
                std::to_string(d));
    Graph g(d, VertexSet::Range(d));
    for (const Edge& raw : edges) {
      Require(raw.u >= 1 && raw.u <= d && raw.v >= 1 && raw.v <= d,
              "edge " + ToString(raw) + " has a label outside 1.." +
                  std::to_string(d));
      Require(raw.u != raw.v, "self-loop at vertex " + std::to_string(raw.u));
      Edge e = MakeEdge(raw.u, raw.v);
      Require(!g.adjacent(e.u, e.v), "duplicate edge " + ToString(e));
      g.Link(e);
    }
    g.Canonicalize();
    return g;
  }

  /// Number of labels in the universe; present vertices are a subset of 1..d.
  int vertex_count() const { return d_; }
  VertexSet vertices() const { return present_; }
  bool spans_all_labels() const { return present_ == VertexSet::Range(d_); }

  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  VertexSet neighbors(Vertex v) const {
    return contains(v) ? adjacency_[v] : VertexSet();
  }
  bool contains(Vertex v) const { return present_.contains(v); }
  bool adjacent(Vertex a, Vertex b) const {
    return contains(a) && adjacency_[a].contains(b);
  }
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }

  /// Position of `e` in the canonical edge list.
  std::optional<int> edge_index(Edge e) const {
    e = MakeEdge(e.u, e.v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  void RequireVertex(Vertex v) const {
    Require(contains(v), "vertex " + std::to_string(v) + " is not in the graph");
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.d_ == b.d_ && a.present_ == b.present_ && a.edges_ == b.edges_;
  }

  /// Subgraph induced on `keep`; labels are preserved.
  Graph Induced(VertexSet keep) const {
    Require(keep.subset_of(present_), "vertex set is not contained in the graph");
    Graph g(d_, keep);
    for (const Edge& e : edges_) {
      if (keep.contains(e.u) && keep.contains(e.v)) g.Link(e);
    }
    g.Canonicalize();
    return g;
  }

  /// Same vertex set, with `extra` edges added. Duplicates are rejected.
  Graph WithEdges(std::span<const Edge> extra) const {
    Graph g = *this;
    for (const Edge& raw : extra) {
      Edge e = MakeEdge(raw.u, raw.v);
      Require(contains(e.u) && contains(e.v) && e.u != e.v,
              "edge " + ToString(e) + " is not a valid pair of vertices");
      Require(!g.adjacent(e.u, e.v), "duplicate edge " + ToString(e));
      g.Link(e);
    }
    g.Canonicalize();
    return g;
  }

  Graph WithoutEdge(Edge e) const {
    e = MakeEdge(e.u, e.v);
    Require(has_edge(e), "edge " + ToString(e) + " is not in the graph");
    Graph g(d_, present_);
    for (const Edge& f : edges_) {
      if (f != e) g.Link(f);
    }
    g.Canonicalize();
    return g;
  }

 private:
  Graph(int d, VertexSet present)
      : d_(d), present_(present), adjacency_(d + 1) {}

  void Link(Edge e) {
    edges_.push_back(e);
    adjacency_[e.u].insert(e.v);
    adjacency_[e.v].insert(e.u);
  }
  void Canonicalize() { std::sort(edges_.begin(), edges_.end()); }

  int d_ = 0;
  VertexSet present_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
};

// ---------------------------------------------------------------------------
// Elementary operations.

inline Graph InducedSubgraph(const Graph& g, VertexSet keep) {
  return g.Induced(keep);
}

inline Graph DeleteVertex(const Graph& g, Vertex v) {
  g.RequireVertex(v);
  VertexSet keep = g.vertices();
  keep.erase(v);
  return g.Induced(keep);
}

/// N(G;T): every vertex adjacent to some member of T. May intersect T.
inline VertexSet Neighborhood(const Graph& g, VertexSet t) {
  VertexSet out;
  for (Vertex v : t) {
    g.RequireVertex(v);
    out |= g.neighbors(v);
  }
  return out;
}

inline bool IsIndependent(const Graph& g, VertexSet t) {
  for (Vertex v : t) {
    if (g.neighbors(v).intersects(t)) return false;
  }
  return true;
}

/// Components of the subgraph induced on `within`, sorted by smallest member.
inline std::vector<VertexSet> ComponentsWithin(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within & g.vertices();
  while (!unseen.empty()) {
    VertexSet component{unseen.min()};
    VertexSet frontier = component;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & unseen) - component;
      component |= next;
      frontier = next;
    }
    out.push_back(component);
    unseen = unseen - component;
  }
  return out;
}

inline std::vector<VertexSet> ConnectedComponents(const Graph& g) {
  return ComponentsWithin(g, g.vertices());
}

inline bool IsConnected(const Graph& g) {
  return ConnectedComponents(g).size() <= 1;
}

/// Two-colouring of the subgraph induced on `within`, or nullopt when that
/// subgraph has an odd cycle. Colour classes are returned as (first, second)
/// where the smallest vertex of each component lands in `first`.
inline std::optional<std::pair<VertexSet, VertexSet>> TwoColouring(
    const Graph& g, VertexSet within) {
  VertexSet first;
  VertexSet second;
  for (VertexSet component : ComponentsWithin(g, within)) {
    VertexSet side{component.min()};
    VertexSet other;
    VertexSet frontier = side;
    bool frontier_is_first = true;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v) & component;
      VertexSet& same = frontier_is_first ? side : other;
      VertexSet& opposite = frontier_is_first ? other : side;
      if (next.intersects(same)) return std::nullopt;
      next = next - opposite;
      opposite |= next;
      frontier = next;
      frontier_is_first = !frontier_is_first;
    }
    first |= side;
    second |= other;
  }
  return std::make_pair(first, second);
}

inline bool IsBipartiteOn(const Graph& g, VertexSet within) {
  return TwoColouring(g, within).has_value();
}

/// Colour classes of a connected graph, or nullopt if it has an odd cycle.
inline std::optional<std::pair<VertexSet, VertexSet>> Bipartition(
    const Graph& g) {
  if (!IsConnected(g)) {
    Fail(ErrorKind::kUnsupported, "bipartition requires a connected graph");
  }
  return TwoColouring(g, g.vertices());
}

/// The bipartite graph on T u N(G;T) whose edges join T to N(G;T).
inline Graph InducedBipartiteGraph(const Graph& g, VertexSet t) {
  Require(IsIndependent(g, t), "vertex set is not independent");
  VertexSet nbrs = Neighborhood(g, t);
  Graph h = g.Induced(t | nbrs);
  std::vector<Edge> keep;
  for (const Edge& e : h.edges()) {
    if (t.contains(e.u) != t.contains(e.v)) keep.push_back(e);
  }
  Graph shell = Graph::FromEdges(g.vertex_count(), std::span<const Edge>())
                    .Induced(t | nbrs);
  return shell.WithEdges(keep);
}

}  // namespace edgering
