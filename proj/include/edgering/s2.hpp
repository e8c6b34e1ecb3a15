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

// Serre's (S2) condition for edge rings, in semigroup form: S' = S, where
//
//   S_F = { x in ZA : x + y in S for some y in S ∩ F }   for a facet F,
//   S'  = intersection of S_F over all facets.
//
// Since S ⊆ S' ⊆ S-bar, (S2) holds iff no gap element lies in S'. A gap
// element a is kept out of S' by a single facet F with a ∉ S_F.
//
// Exclusion at a vertex facet F_v is decided exactly by parity: every
// generator on F_v avoids v, so it lies inside one component of G \ v and
// adds an even amount to that component's coordinate sum. If a_v = 0 and some
// component of G \ v carries an odd sum of a, then a + y has the same
// property for all y in S ∩ F_v, and no element of S does.

#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

#include "edgering/cycles.hpp"
#include "edgering/error.hpp"
#include "edgering/facets.hpp"
#include "edgering/graph.hpp"
#include "edgering/semigroup.hpp"

namespace edgering {

struct ExclusionCertificate {
  Vertex vertex = 0;
  /// Component of G \ vertex on which the candidate has odd coordinate sum.
  VertexSet component;
  ExponentVector candidate;

  std::int64_t component_sum() const {
    std::int64_t s = 0;
    for (Vertex v : component) s += candidate[v - 1];
    return s;
  }
  friend bool operator==(const ExclusionCertificate&,
                         const ExclusionCertificate&) = default;
};

/// Membership of y in S ∩ F (the semigroup of the generators on F).
inline std::optional<MembershipWitness> InSCapF(const Graph& g, const Facet& facet,
                                                std::span<const std::int64_t> y) {
  for (auto v : y) Require(v >= 0, "y must be nonnegative");
  std::vector<Edge> on = GeneratorsOnFacet(g, facet);
  return InSemigroupGeneratedBy(g.vertex_count(), on, y);
}

/// Parity certificate that `alpha` ∉ S_{F_v}, if one exists.
inline std::optional<ExclusionCertificate> VertexParityCertificate(
    const Graph& g, Vertex v, std::span<const std::int64_t> alpha) {
  Require(alpha.size() == static_cast<std::size_t>(g.vertex_count()),
          "vector length does not match the graph");
  if (!IsRegularVertex(g, v)) {
    Fail(ErrorKind::kInvalidInput,
         "vertex " + std::to_string(v) + " is not regular; F_v is not a facet");
  }
  if (alpha[v - 1] != 0) return std::nullopt;
  VertexSet rest = g.vertices();
  rest.erase(v);
  for (VertexSet component : ComponentsWithin(g, rest)) {
    std::int64_t s = 0;
    for (Vertex u : component) s += alpha[u - 1];
    if (s % 2 != 0) {
      return ExclusionCertificate{v, component, ExponentVector(alpha.begin(), alpha.end())};
    }
  }
  return std::nullopt;
}

/// Re-checks a certificate from scratch.
inline bool VerifyCertificate(const Graph& g, const ExclusionCertificate& cert) {
  if (cert.candidate.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  if (!g.contains(cert.vertex) || !IsRegularVertex(g, cert.vertex)) return false;
  if (cert.candidate[cert.vertex - 1] != 0) return false;
  VertexSet rest = g.vertices();
  rest.erase(cert.vertex);
  auto comps = ComponentsWithin(g, rest);
  if (std::find(comps.begin(), comps.end(), cert.component) == comps.end()) return false;
  return cert.component_sum() % 2 != 0;
}

enum class SfStatus { kYes, kNoCertified, kNoUpToBound };

inline const char* ToString(SfStatus s) {
  switch (s) {
    case SfStatus::kYes: return "yes";
    case SfStatus::kNoCertified: return "no-certified";
    case SfStatus::kNoUpToBound: return "no-up-to-bound";
  }
  return "?";
}

struct SfResult {
  SfStatus status = SfStatus::kNoUpToBound;
  /// For kYes: the element of S ∩ F and a witness that alpha + y ∈ S.
  ExponentVector y;
  MembershipWitness witness;
  std::optional<ExclusionCertificate> certificate;
};

/// Bounded semidecision of alpha ∈ S_F: searches y ∈ S ∩ F with coordinate
/// sum <= search_bound. A parity certificate (vertex facets only) settles
/// non-membership for every bound.
inline SfResult InSFBounded(const EdgeRing& ring, const Facet& facet,
                            std::span<const std::int64_t> alpha, int search_bound) {
  const Graph& g = ring.graph();
  Require(ring.InLattice(alpha), "alpha must lie in the lattice of the graph");
  SfResult result;
  if (facet.kind == FacetKind::kVertex) {
    result.certificate = VertexParityCertificate(g, facet.vertex(), alpha);
    if (result.certificate) {
      result.status = SfStatus::kNoCertified;
      return result;
    }
  }
  std::vector<Edge> on = GeneratorsOnFacet(g, facet);
  SemigroupBall ball(g.vertex_count(), on, search_bound);
  detail::SemigroupSearch search(g.vertex_count(), g.edges());
  ball.ForEach([&](const ExponentVector& y) {
    ExponentVector sum = detail::Add(alpha, y);
    for (auto v : sum) {
      if (v < 0) return true;
    }
    if (auto w = search.Solve(sum)) {
      result.status = SfStatus::kYes;
      result.y = y;
      result.witness = std::move(*w);
      return false;
    }
    return true;
  });
  return result;
}

/// What was checked when an exceptional pair met both sufficient conditions
/// for (S2) to fail.
struct HkWitness {
  ExceptionalPair pair;
  /// Regular vertices outside the pair; each leaves both cycles connected.
  std::vector<Vertex> regular_vertices_checked;
  /// Fundamental sets T with T ∪ N(T) avoiding the pair; removing T ∪ N(T)
  /// leaves both cycles connected.
  std::vector<VertexSet> fundamental_sets_checked;
};

namespace detail {

inline bool SameComponent(const Graph& g, VertexSet within, Vertex a, Vertex b) {
  for (VertexSet c : ComponentsWithin(g, within)) {
    if (c.contains(a)) return c.contains(b);
  }
  return false;
}

}  // namespace detail

/// Searches for an exceptional pair certifying that (S2) fails: for every
/// regular vertex v off the pair the two cycles stay connected in G \ v, and
/// for every fundamental set T whose closed neighbourhood misses the pair
/// they stay connected after deleting T ∪ N(T). Then E_C + E_C' ∈ S' \ S.
inline std::optional<HkWitness> HkNotS2(const EdgeRing& ring) {
  const Graph& g = ring.graph();
  if (ring.exceptional_pairs().empty()) return std::nullopt;
  std::vector<Vertex> regular;
  for (Vertex v : g.vertices()) {
    if (IsRegularVertex(g, v)) regular.push_back(v);
  }
  std::vector<VertexSet> fundamental = FundamentalSets(g);
  for (const ExceptionalPair& pair : ring.exceptional_pairs()) {
    const VertexSet on_pair = pair.first.vertex_set() | pair.second.vertex_set();
    const Vertex a = pair.first.vertices.front();
    const Vertex b = pair.second.vertices.front();
    HkWitness w{pair, {}, {}};
    bool ok = true;
    for (Vertex v : regular) {
      if (on_pair.contains(v)) continue;
      VertexSet rest = g.vertices();
      rest.erase(v);
      if (!detail::SameComponent(g, rest, a, b)) {
        ok = false;
        break;
      }
      w.regular_vertices_checked.push_back(v);
    }
    if (!ok) continue;
    for (VertexSet t : fundamental) {
      const VertexSet closed = t | Neighborhood(g, t);
      if (closed.intersects(on_pair)) continue;
      if (!detail::SameComponent(g, g.vertices() - closed, a, b)) {
        ok = false;
        break;
      }
      w.fundamental_sets_checked.push_back(t);
    }
    if (ok) return w;
  }
  return std::nullopt;
}

inline std::optional<HkWitness> HkNotS2(const Graph& g) {
  return HkNotS2(EdgeRing(g));
}

enum class Verdict { kNormal, kNonNormalS2Verified, kNonNormalNotS2, kUnknown };

inline const char* ToString(Verdict v) {
  switch (v) {
    case Verdict::kNormal: return "Normal";
    case Verdict::kNonNormalS2Verified: return "NonNormalS2Verified";
    case Verdict::kNonNormalNotS2: return "NonNormalNotS2";
    case Verdict::kUnknown: return "Unknown";
  }
  return "?";
}

struct ClassifyOptions {
  int degree_bound = 16;
  int search_bound = 12;
  std::stop_token stop;
};

struct ClassificationReport {
  Verdict verdict = Verdict::kUnknown;
  int degree_bound = 0;
  int search_bound = 0;
  /// Gap elements with coordinate sum <= degree_bound (empty when normal).
  std::vector<ExponentVector> gap;
  /// One certificate per gap element excluded by parity.
  std::vector<ExclusionCertificate> certificates;
  /// Gap elements excluded only by exhausting the y-search at some facet.
  std::vector<ExponentVector> bounded_exclusions;
  std::optional<HkWitness> hk_witness;
  /// A gap element found in every S_F within the search bound.
  std::optional<ExponentVector> s2_violation;
  /// True when every gap element was excluded by a parity certificate.
  bool exhaustive = false;
  double elapsed_ms = 0;

  int gap_count() const { return static_cast<int>(gap.size()); }
};

/// Decides normality and, for non-normal graphs, verifies or refutes (S2)
/// up to the configured bounds.
inline ClassificationReport Classify(const Graph& g, const ClassifyOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  Require(options.degree_bound > 0 && options.degree_bound % 2 == 0,
          "degree bound must be a positive even integer");
  Require(options.search_bound >= 0 && options.search_bound % 2 == 0,
          "search bound must be a nonnegative even integer");
  EdgeRing ring(g);
  if (ring.bipartite()) {
    Fail(ErrorKind::kUnsupported, "classification requires a non-bipartite graph");
  }
  ClassificationReport report;
  report.degree_bound = options.degree_bound;
  report.search_bound = options.search_bound;
  auto finish = [&](Verdict v) {
    report.verdict = v;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
  };
  if (ring.normal()) return finish(Verdict::kNormal);

  report.gap = GapElements(ring, options.degree_bound, GapRoute::kDirect, options.stop);
  report.hk_witness = HkNotS2(ring);
  if (report.hk_witness) return finish(Verdict::kNonNormalNotS2);
  if (report.gap.empty()) return finish(Verdict::kUnknown);

  bool all_certified = true;
  for (const ExponentVector& alpha : report.gap) {
    if (options.stop.stop_requested()) Fail(ErrorKind::kCancelled, "cancelled");
    std::optional<ExclusionCertificate> cert;
    for (const Facet& f : ring.validated_facets()) {
      if (f.kind != FacetKind::kVertex) continue;
      cert = VertexParityCertificate(g, f.vertex(), alpha);
      if (cert) break;
    }
    if (cert) {
      report.certificates.push_back(std::move(*cert));
      continue;
    }
    all_certified = false;
    bool excluded = false;
    for (const Facet& f : ring.validated_facets()) {
      if (InSFBounded(ring, f, alpha, options.search_bound).status != SfStatus::kYes) {
        excluded = true;
        break;
      }
    }
    if (!excluded) {
      report.s2_violation = alpha;
      return finish(Verdict::kNonNormalNotS2);
    }
    report.bounded_exclusions.push_back(alpha);
  }
  report.exhaustive = all_certified;
  return finish(Verdict::kNonNormalS2Verified);
}

}  // namespace edgering
