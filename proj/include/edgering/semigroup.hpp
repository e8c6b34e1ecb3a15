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

// Exact membership in the edge semigroup S (nonnegative integer sums of
// edge vectors e_i + e_j), its lattice, its rational cone, and its
// normalization S-bar = cone ∩ lattice. Gap elements are the members of
// S-bar that are not in S.

#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stop_token>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "edgering/cycles.hpp"
#include "edgering/error.hpp"
#include "edgering/exact_linear_algebra.hpp"
#include "edgering/facets.hpp"
#include "edgering/graph.hpp"

namespace edgering {

/// Coordinates indexed by vertex label minus one.
using ExponentVector = std::vector<std::int64_t>;

inline std::int64_t CoordinateSum(std::span<const std::int64_t> x) {
  std::int64_t s = 0;
  for (auto v : x) s += v;
  return s;
}

inline std::string ToString(std::span<const std::int64_t> x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  return out + ")";
}

/// Multiplicities of edges whose generator sum reproduces a target vector.
struct MembershipWitness {
  /// Sorted by edge; every multiplicity is positive.
  std::vector<std::pair<Edge, int>> multiplicities;

  int edge_total() const {
    int n = 0;
    for (const auto& [e, k] : multiplicities) n += k;
    return n;
  }
  ExponentVector Sum(int d) const {
    ExponentVector x(d, 0);
    for (const auto& [e, k] : multiplicities) {
      x[e.u - 1] += k;
      x[e.v - 1] += k;
    }
    return x;
  }
  friend bool operator==(const MembershipWitness&, const MembershipWitness&) = default;
};

inline ExponentVector Rho(const Graph& g, Edge e) {
  e = MakeEdge(e.u, e.v);
  Require(g.has_edge(e), "edge " + ToString(e) + " is not in the graph");
  return detail::Rho(g.vertex_count(), e);
}

/// 0/1 indicator of the vertices of a cycle of `g`.
inline ExponentVector CycleIndicator(const Graph& g, const OddCycle& c) {
  const auto& vs = c.vertices;
  bool ok = vs.size() >= 3;
  for (std::size_t i = 0; ok && i < vs.size(); ++i) {
    ok = g.adjacent(vs[i], vs[(i + 1) % vs.size()]);
  }
  Require(ok, "cycle " + ToString(c) + " is not a cycle of the graph");
  ExponentVector x(g.vertex_count(), 0);
  for (Vertex v : c.vertex_set()) x[v - 1] = 1;
  return x;
}

namespace detail {

struct VectorHash {
  std::size_t operator()(const ExponentVector& x) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : x) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline ExponentVector Add(std::span<const std::int64_t> a,
                          std::span<const std::int64_t> b) {
  ExponentVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

// Exhaustive search for a multiset of allowed edges summing to a demand
// vector. The lowest vertex with remaining demand is always satisfied first,
// by distributing all of its demand over its neighbours at once; failed
// demand states are memoized.
class SemigroupSearch {
 public:
  SemigroupSearch(int d, std::span<const Edge> allowed) : adjacency_(d + 1) {
    for (const Edge& e : allowed) {
      adjacency_[e.u].insert(e.v);
      adjacency_[e.v].insert(e.u);
    }
  }

  std::optional<MembershipWitness> Solve(std::span<const std::int64_t> target) {
    demand_.assign(target.begin(), target.end());
    chosen_.clear();
    failed_.clear();
    for (auto v : demand_) {
      if (v < 0) return std::nullopt;
    }
    if (CoordinateSum(demand_) % 2 != 0) return std::nullopt;
    if (!Recurse()) return std::nullopt;
    std::sort(chosen_.begin(), chosen_.end());
    MembershipWitness w;
    for (const Edge& e : chosen_) {
      if (!w.multiplicities.empty() && w.multiplicities.back().first == e) {
        ++w.multiplicities.back().second;
      } else {
        w.multiplicities.emplace_back(e, 1);
      }
    }
    return w;
  }

 private:
  VertexSet Support() const {
    VertexSet s;
    for (std::size_t i = 0; i < demand_.size(); ++i) {
      if (demand_[i] > 0) s.insert(static_cast<Vertex>(i + 1));
    }
    return s;
  }

  // Necessary conditions per component of the support: even total, and for
  // bipartite components equal totals on both sides.
  bool Feasible(VertexSet support) const {
    VertexSet unseen = support;
    while (!unseen.empty()) {
      VertexSet side[2];
      side[0].insert(unseen.min());
      VertexSet component = side[0];
      VertexSet frontier = side[0];
      int parity = 0;
      bool bipartite = true;
      while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= adjacency_[v] & support;
        if (next.intersects(side[parity])) bipartite = false;
        next = next - component;
        parity ^= 1;
        side[parity] |= next;
        component |= next;
        frontier = next;
      }
      std::int64_t sums[2] = {0, 0};
      for (int s = 0; s < 2; ++s) {
        for (Vertex v : side[s]) sums[s] += demand_[v - 1];
      }
      if ((sums[0] + sums[1]) % 2 != 0) return false;
      if (bipartite && sums[0] != sums[1]) return false;
      unseen = unseen - component;
    }
    return true;
  }

  bool Recurse() {
    VertexSet support = Support();
    if (support.empty()) return true;
    if (failed_.contains(demand_)) return false;
    if (!Feasible(support)) {
      failed_.insert(demand_);
      return false;
    }
    const Vertex v = support.min();
    std::vector<Vertex> nbrs = (adjacency_[v] & support).to_vector();
    if (Distribute(v, nbrs, 0)) return true;
    failed_.insert(demand_);
    return false;
  }

  // Assigns the remaining demand of v to neighbours nbrs[idx..].
  bool Distribute(Vertex v, const std::vector<Vertex>& nbrs, std::size_t idx) {
    if (demand_[v - 1] == 0) return Recurse();
    if (idx == nbrs.size()) return false;
    const Vertex u = nbrs[idx];
    const std::int64_t most = std::min(demand_[v - 1], demand_[u - 1]);
    // Larger multiplicities first: tends to find witnesses sooner.
    for (std::int64_t k = most; k >= 0; --k) {
      demand_[v - 1] -= k;
      demand_[u - 1] -= k;
      for (std::int64_t i = 0; i < k; ++i) chosen_.push_back(MakeEdge(v, u));
      bool ok = Distribute(v, nbrs, idx + 1);
      if (ok) return true;
      chosen_.resize(chosen_.size() - static_cast<std::size_t>(k));
      demand_[v - 1] += k;
      demand_[u - 1] += k;
    }
    return false;
  }

  std::vector<VertexSet> adjacency_;
  ExponentVector demand_;
  std::vector<Edge> chosen_;
  std::unordered_set<ExponentVector, VectorHash> failed_;
};

}  // namespace detail

/// Decides x ∈ Z_{>=0}{e_i + e_j : {i,j} ∈ allowed}; returns a witness.
inline std::optional<MembershipWitness> InSemigroupGeneratedBy(
    int d, std::span<const Edge> allowed, std::span<const std::int64_t> x) {
  Require(x.size() == static_cast<std::size_t>(d),
          "vector length " + std::to_string(x.size()) + " does not match d=" +
              std::to_string(d));
  return detail::SemigroupSearch(d, allowed).Solve(x);
}

/// Membership in S_G. Negative coordinates are an error.
inline std::optional<MembershipWitness> InS(const Graph& g,
                                            std::span<const std::int64_t> x) {
  for (auto v : x) Require(v >= 0, "semigroup candidates must be nonnegative");
  return InSemigroupGeneratedBy(g.vertex_count(), g.edges(), x);
}

/// Lattice membership from the graph structure alone: even total for
/// non-bipartite graphs; equal side totals for bipartite ones.
inline bool InLatticeClosedForm(const Graph& g, std::span<const std::int64_t> x) {
  auto colouring = Bipartition(g);
  if (!colouring) return CoordinateSum(x) % 2 == 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  for (Vertex v : colouring->first) a += x[v - 1];
  for (Vertex v : colouring->second) b += x[v - 1];
  return a == b;
}

/// Every element of S-bar(G) ∩ {sum <= bound} is enumerable from the
/// normalization generators E_C + E_C' over exceptional pairs.
inline std::vector<ExponentVector> NormalizationGenerators(const Graph& g) {
  std::set<ExponentVector> out;
  for (const auto& pair : ExceptionalPairs(g)) {
    out.insert(detail::Add(CycleIndicator(g, pair.first),
                           CycleIndicator(g, pair.second)));
  }
  return {out.begin(), out.end()};
}

/// All elements of a semigroup generated by edge vectors with coordinate sum
/// at most `bound`, stored level by level as packed keys.
class SemigroupBall {
 public:
  SemigroupBall(int d, std::span<const Edge> edges, int bound,
                std::stop_token stop = {})
      : d_(d), bound_(bound) {
    Require(bound >= 0, "degree bound must be nonnegative");
    bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(bound))));
    if (bits_ * d > 64) {
      Fail(ErrorKind::kLimitExceeded,
           "degree bound " + std::to_string(bound) + " is too large for d=" +
               std::to_string(d));
    }
    std::vector<std::uint64_t> steps;
    for (const Edge& e : edges) {
      steps.push_back((std::uint64_t{1} << (bits_ * (e.u - 1))) +
                      (std::uint64_t{1} << (bits_ * (e.v - 1))));
    }
    levels_.push_back({0});
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    for (int level = 1; 2 * level <= bound; ++level) {
      if (stop.stop_requested()) Fail(ErrorKind::kCancelled, "cancelled");
      std::vector<std::uint64_t> next;
      next.reserve(levels_.back().size() * steps.size());
      for (std::uint64_t key : levels_.back()) {
        for (std::size_t i = 0; i < steps.size(); ++i) {
          const Edge& e = edges[i];
          // Coordinates never exceed bound, so a carry cannot happen.
          if (((key >> (bits_ * (e.u - 1))) & mask) + 1 > static_cast<std::uint64_t>(bound) ||
              ((key >> (bits_ * (e.v - 1))) & mask) + 1 > static_cast<std::uint64_t>(bound)) {
            continue;
          }
          next.push_back(key + steps[i]);
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      levels_.push_back(std::move(next));
    }
  }

  int bound() const { return bound_; }

  bool Contains(std::span<const std::int64_t> x) const {
    std::int64_t sum = 0;
    for (auto v : x) {
      if (v < 0 || v > bound_) return false;
      sum += v;
    }
    if (sum % 2 != 0 || sum > bound_ || x.size() != static_cast<std::size_t>(d_)) {
      return false;
    }
    const auto& level = levels_[static_cast<std::size_t>(sum / 2)];
    return std::binary_search(level.begin(), level.end(), Encode(x));
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& l : levels_) n += l.size();
    return n;
  }

  /// Visits elements by increasing coordinate sum; stops early when `fn`
  /// returns false.
  void ForEach(const std::function<bool(const ExponentVector&)>& fn) const {
    for (const auto& level : levels_) {
      for (std::uint64_t key : level) {
        if (!fn(Decode(key))) return;
      }
    }
  }

 private:
  std::uint64_t Encode(std::span<const std::int64_t> x) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      key |= static_cast<std::uint64_t>(x[i]) << (bits_ * i);
    }
    return key;
  }
  ExponentVector Decode(std::uint64_t key) const {
    ExponentVector x(d_);
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    for (int i = 0; i < d_; ++i) {
      x[i] = static_cast<std::int64_t>((key >> (bits_ * i)) & mask);
    }
    return x;
  }

  int d_ = 0;
  int bound_ = 0;
  int bits_ = 1;
  std::vector<std::vector<std::uint64_t>> levels_;
};

/// Cached cone and lattice data for one connected graph on 1..d.
class EdgeRing {
 public:
  explicit EdgeRing(Graph g, const FacetOptions& options = {})
      : graph_(std::move(g)) {
    detail::RequireConnectedSpanning(graph_, "the edge ring");
    bipartite_ = IsBipartiteOn(graph_, graph_.vertices());
    IntMatrix rows;
    for (const Edge& e : graph_.edges()) {
      rows.push_back(detail::Rho(graph_.vertex_count(), e));
    }
    lattice_ = LatticeBasis(rows);
    cycles_ = MinimalOddCycles(graph_);
    pairs_ = ExceptionalPairs(graph_, cycles_);
    if (!bipartite_) {
      facets_ = Facets(graph_, options);
      for (const Facet& f : facets_) {
        if (f.validated) validated_.push_back(f);
      }
    }
  }

  const Graph& graph() const { return graph_; }
  int dimension() const { return graph_.vertex_count(); }
  bool bipartite() const { return bipartite_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Facet>& validated_facets() const { return validated_; }
  const std::vector<OddCycle>& minimal_odd_cycles() const { return cycles_; }
  const std::vector<ExceptionalPair>& exceptional_pairs() const { return pairs_; }
  bool normal() const { return pairs_.empty(); }
  const LatticeBasis& lattice() const { return lattice_; }

  void RequireLength(std::span<const std::int64_t> x) const {
    Require(x.size() == static_cast<std::size_t>(dimension()),
            "vector length " + std::to_string(x.size()) +
                " does not match d=" + std::to_string(dimension()));
  }

  /// Lattice membership via the echelon basis, checked against the closed
  /// form in debug builds.
  bool InLattice(std::span<const std::int64_t> x) const {
    RequireLength(x);
    const bool in = lattice_.Contains(x);
    assert(in == InLatticeClosedForm(graph_, x));
    return in;
  }

  /// Cone membership through the validated facet inequalities.
  bool InConeByFacets(std::span<const std::int64_t> x) const {
    RequireLength(x);
    if (bipartite_) {
      Fail(ErrorKind::kUnsupported, "facet route requires a non-bipartite graph");
    }
    for (const Facet& f : validated_) {
      if (f.Evaluate(x) < 0) return false;
    }
    return true;
  }

  /// Cone membership by exact rational feasibility.
  bool InConeByFeasibility(std::span<const std::int64_t> x) const {
    RequireLength(x);
    IntMatrix columns;
    for (const Edge& e : graph_.edges()) {
      columns.push_back(detail::Rho(dimension(), e));
    }
    return NonnegativeCombination(columns, x).has_value();
  }

  bool InCone(std::span<const std::int64_t> x) const {
    return bipartite_ ? InConeByFeasibility(x) : InConeByFacets(x);
  }

  bool InSbar(std::span<const std::int64_t> x) const {
    return InCone(x) && InLattice(x);
  }

  std::optional<MembershipWitness> InS(std::span<const std::int64_t> x) const {
    RequireLength(x);
    return edgering::InS(graph_, x);
  }

 private:
  Graph graph_;
  bool bipartite_ = false;
  LatticeBasis lattice_;
  std::vector<OddCycle> cycles_;
  std::vector<ExceptionalPair> pairs_;
  std::vector<Facet> facets_;
  std::vector<Facet> validated_;
};

inline bool InLattice(const Graph& g, std::span<const std::int64_t> x) {
  return EdgeRing(g).InLattice(x);
}
inline bool InCone(const Graph& g, std::span<const std::int64_t> x) {
  return EdgeRing(g).InCone(x);
}
inline bool InSbar(const Graph& g, std::span<const std::int64_t> x) {
  return EdgeRing(g).InSbar(x);
}

enum class GapRoute {
  kDirect,   // lattice points of the cone, minus S
  kFormula,  // S + nonnegative sums of normalization generators, minus S
};

namespace detail {

inline void ForEachNonnegative(int d, int bound, ExponentVector& x, int pos,
                               std::int64_t remaining,
                               const std::function<void(const ExponentVector&)>& fn) {
  if (pos == d) {
    fn(x);
    return;
  }
  for (std::int64_t v = 0; v <= remaining; ++v) {
    x[pos] = v;
    ForEachNonnegative(d, bound, x, pos + 1, remaining - v, fn);
  }
  x[pos] = 0;
}

}  // namespace detail

/// Every element of S-bar \ S with coordinate sum <= degree_bound, sorted by
/// coordinate sum and then lexicographically.
inline std::vector<ExponentVector> GapElements(const EdgeRing& ring, int degree_bound,
                                               GapRoute route = GapRoute::kDirect,
                                               std::stop_token stop = {}) {
  if (ring.bipartite()) {
    Fail(ErrorKind::kUnsupported, "gap enumeration requires a non-bipartite graph");
  }
  Require(degree_bound >= 0, "degree bound must be nonnegative");
  const int d = ring.dimension();
  std::vector<ExponentVector> gap;
  if (route == GapRoute::kDirect) {
    SemigroupBall ball(d, ring.graph().edges(), degree_bound, stop);
    ExponentVector x(d, 0);
    std::uint64_t visited = 0;
    detail::ForEachNonnegative(d, degree_bound, x, 0, degree_bound,
                               [&](const ExponentVector& v) {
      if ((++visited & 0xffff) == 0 && stop.stop_requested()) {
        Fail(ErrorKind::kCancelled, "cancelled");
      }
      if (CoordinateSum(v) % 2 != 0) return;
      if (ring.InLattice(v) && ring.InConeByFacets(v) && !ball.Contains(v)) {
        gap.push_back(v);
      }
    });
  } else {
    // Nonnegative combinations of normalization generators within the bound.
    std::vector<ExponentVector> generators = NormalizationGenerators(ring.graph());
    std::set<ExponentVector> shifts;
    std::vector<ExponentVector> frontier{ExponentVector(d, 0)};
    while (!frontier.empty()) {
      std::vector<ExponentVector> next;
      for (const auto& base : frontier) {
        for (const auto& gen : generators) {
          ExponentVector s = detail::Add(base, gen);
          if (CoordinateSum(s) <= degree_bound && shifts.insert(s).second) {
            next.push_back(std::move(s));
          }
        }
      }
      frontier = std::move(next);
    }
    SemigroupBall ball(d, ring.graph().edges(), degree_bound, stop);
    std::set<ExponentVector> candidates;
    for (const auto& shift : shifts) {
      const std::int64_t room = degree_bound - CoordinateSum(shift);
      ball.ForEach([&](const ExponentVector& beta) {
        if (CoordinateSum(beta) > room) return false;
        candidates.insert(detail::Add(beta, shift));
        return true;
      });
      if (stop.stop_requested()) Fail(ErrorKind::kCancelled, "cancelled");
    }
    detail::SemigroupSearch search(d, ring.graph().edges());
    for (const auto& c : candidates) {
      if (!search.Solve(c)) gap.push_back(c);
    }
  }
  std::sort(gap.begin(), gap.end(), [](const ExponentVector& a, const ExponentVector& b) {
    auto sa = CoordinateSum(a);
    auto sb = CoordinateSum(b);
    return sa != sb ? sa < sb : a < b;
  });
  return gap;
}

inline std::vector<ExponentVector> GapElements(const Graph& g, int degree_bound,
                                               GapRoute route = GapRoute::kDirect) {
  return GapElements(EdgeRing(g), degree_bound, route);
}

}  // namespace edgering
