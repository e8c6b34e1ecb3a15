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

// Supporting hyperplanes of the edge cone of a connected non-bipartite graph.
//
// Two families of candidates exist:
//   * x_v >= 0 for every regular vertex v (each component of G \ v has an
//     odd cycle);
//   * sum_{N(G;T)} x - sum_T x >= 0 for every fundamental set T.
// Every candidate is rank-checked: it is reported as a facet (validated) when
// the generators lying on it span a space of dimension d - 1.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "edgering/error.hpp"
#include "edgering/exact_linear_algebra.hpp"
#include "edgering/graph.hpp"

namespace edgering {

enum class FacetKind { kVertex, kFundamental };

inline const char* ToString(FacetKind kind) {
  return kind == FacetKind::kVertex ? "vertex" : "fundamental";
}

struct Facet {
  FacetKind kind = FacetKind::kVertex;
  /// {v} for a vertex facet, T for a fundamental-set facet.
  VertexSet vertices;
  /// Linear functional on Z^d; index v - 1 holds the coefficient of x_v.
  std::vector<std::int64_t> normal;
  std::vector<Edge> on_facet_edges;
  bool validated = false;

  std::int64_t Evaluate(std::span<const std::int64_t> x) const {
    Require(x.size() == normal.size(), "vector length does not match facet");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += normal[i] * x[i];
    return s;
  }
  std::int64_t EvaluateEdge(Edge e) const {
    return normal[e.u - 1] + normal[e.v - 1];
  }
  /// Cut vertex of a vertex-type facet.
  Vertex vertex() const { return vertices.min(); }

  friend bool operator==(const Facet&, const Facet&) = default;
};

struct FacetOptions {
  /// Fundamental sets are found by enumerating independent sets; refuse
  /// graphs larger than this.
  int max_vertices = 20;
};

inline bool IsRegularVertex(const Graph& g, Vertex v) {
  g.RequireVertex(v);
  VertexSet rest = g.vertices();
  rest.erase(v);
  for (VertexSet component : ComponentsWithin(g, rest)) {
    if (IsBipartiteOn(g, component)) return false;
  }
  return true;
}

inline bool IsFundamentalSet(const Graph& g, VertexSet t) {
  if (t.empty() || !t.subset_of(g.vertices()) || !IsIndependent(g, t)) {
    return false;
  }
  VertexSet nbrs = Neighborhood(g, t);
  if (!IsConnected(InducedBipartiteGraph(g, t))) return false;
  VertexSet rest = g.vertices() - (t | nbrs);
  for (VertexSet component : ComponentsWithin(g, rest)) {
    if (IsBipartiteOn(g, component)) return false;
  }
  return true;
}

namespace detail {

inline void RequireConnectedSpanning(const Graph& g, const char* what) {
  if (!g.spans_all_labels() || !IsConnected(g)) {
    Fail(ErrorKind::kUnsupported,
         std::string(what) + " requires a connected graph on all vertices 1..d");
  }
}

inline void EnumerateIndependentSets(const Graph& g, std::vector<Vertex>& order,
                                     std::size_t pos, VertexSet current,
                                     VertexSet forbidden,
                                     std::vector<VertexSet>& out) {
  if (pos == order.size()) {
    if (!current.empty()) out.push_back(current);
    return;
  }
  const Vertex v = order[pos];
  EnumerateIndependentSets(g, order, pos + 1, current, forbidden, out);
  if (!forbidden.contains(v)) {
    VertexSet with = current;
    with.insert(v);
    EnumerateIndependentSets(g, order, pos + 1, with, forbidden | g.neighbors(v),
                             out);
  }
}

inline std::vector<std::int64_t> VertexNormal(int d, Vertex v) {
  std::vector<std::int64_t> normal(d, 0);
  normal[v - 1] = 1;
  return normal;
}

inline std::vector<std::int64_t> FundamentalNormal(const Graph& g, VertexSet t) {
  std::vector<std::int64_t> normal(g.vertex_count(), 0);
  for (Vertex v : Neighborhood(g, t)) normal[v - 1] = 1;
  for (Vertex v : t) normal[v - 1] = -1;
  return normal;
}

inline std::vector<std::int64_t> Rho(int d, Edge e) {
  std::vector<std::int64_t> x(d, 0);
  x[e.u - 1] = 1;
  x[e.v - 1] = 1;
  return x;
}

inline std::vector<std::int64_t> Primitive(std::vector<std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

}  // namespace detail

/// All fundamental sets, sorted lexicographically by member list.
inline std::vector<VertexSet> FundamentalSets(const Graph& g,
                                              const FacetOptions& options = {}) {
  if (!IsConnected(g)) {
    Fail(ErrorKind::kUnsupported, "fundamental sets require a connected graph");
  }
  if (g.vertices().size() > options.max_vertices) {
    Fail(ErrorKind::kLimitExceeded,
         "fundamental set enumeration is limited to " +
             std::to_string(options.max_vertices) + " vertices");
  }
  std::vector<Vertex> order = g.vertices().to_vector();
  std::vector<VertexSet> independent;
  detail::EnumerateIndependentSets(g, order, 0, VertexSet(), VertexSet(),
                                   independent);
  std::vector<VertexSet> out;
  for (VertexSet t : independent) {
    if (IsFundamentalSet(g, t)) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), LexLess);
  return out;
}

/// Rank of the edge generators; d for connected non-bipartite graphs.
inline int ConeDimension(const Graph& g) {
  if (!IsConnected(g)) {
    Fail(ErrorKind::kUnsupported, "cone dimension requires a connected graph");
  }
  IntMatrix rows;
  for (const Edge& e : g.edges()) rows.push_back(detail::Rho(g.vertex_count(), e));
  return Rank(rows);
}

namespace detail {

inline Facet MakeFacet(const Graph& g, FacetKind kind, VertexSet vertices) {
  Facet f;
  f.kind = kind;
  f.vertices = vertices;
  f.normal = kind == FacetKind::kVertex
                 ? VertexNormal(g.vertex_count(), vertices.min())
                 : FundamentalNormal(g, vertices);
  IntMatrix rows;
  for (const Edge& e : g.edges()) {
    if (f.EvaluateEdge(e) == 0) {
      f.on_facet_edges.push_back(e);
      rows.push_back(Rho(g.vertex_count(), e));
    }
  }
  f.validated = Rank(rows) == g.vertex_count() - 1;
  return f;
}

}  // namespace detail

/// Candidate facets in deterministic order: vertex type by ascending vertex,
/// then fundamental type by member list. Candidates failing the rank check
/// are kept with validated == false.
inline std::vector<Facet> Facets(const Graph& g, const FacetOptions& options = {}) {
  detail::RequireConnectedSpanning(g, "facet computation");
  if (IsBipartiteOn(g, g.vertices())) {
    Fail(ErrorKind::kUnsupported, "facet computation requires an odd cycle");
  }
  std::vector<Facet> out;
  std::vector<std::vector<std::int64_t>> seen;
  auto add = [&](Facet f) {
    auto key = detail::Primitive(f.normal);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
    seen.push_back(std::move(key));
    out.push_back(std::move(f));
  };
  for (Vertex v : g.vertices()) {
    if (IsRegularVertex(g, v)) add(detail::MakeFacet(g, FacetKind::kVertex, {v}));
  }
  for (VertexSet t : FundamentalSets(g, options)) {
    add(detail::MakeFacet(g, FacetKind::kFundamental, t));
  }
  return out;
}

inline std::vector<Facet> ValidatedFacets(const Graph& g,
                                          const FacetOptions& options = {}) {
  std::vector<Facet> all = Facets(g, options);
  std::erase_if(all, [](const Facet& f) { return !f.validated; });
  return all;
}

/// Edges whose generator lies on `facet`. Throws if `facet` was not derived
/// from `g`.
inline std::vector<Edge> GeneratorsOnFacet(const Graph& g, const Facet& facet) {
  bool ours = facet.normal.size() == static_cast<std::size_t>(g.vertex_count()) &&
              facet.vertices.subset_of(g.vertices()) && !facet.vertices.empty();
  if (ours) {
    auto expected = facet.kind == FacetKind::kVertex
                        ? detail::VertexNormal(g.vertex_count(), facet.vertex())
                        : detail::FundamentalNormal(g, facet.vertices);
    ours = expected == facet.normal;
  }
  Require(ours, "facet does not belong to this graph");
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (facet.EvaluateEdge(e) == 0) out.push_back(e);
  }
  return out;
}

}  // namespace edgering
