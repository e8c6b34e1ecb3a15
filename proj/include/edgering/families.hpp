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

// The two-clique family: G(a,b) is K_{a+1} on {u_1..u_a, w} glued to
// K_{b+1} on {v_1..v_b, w} at the single vertex w, for 3 <= a <= b.
//
// Labels are fixed: u_i -> i, w -> a+1, v_j -> a+1+j.
//
// The removal schedule deletes one edge per step, first on the u-side, then
// identically on the v-side (x_0 denotes w):
//
//   for i = 1..a-3:  {x_0,x_i}, then {x_i,x_j} for j = i+1..a-1
//   then:            {x_0,x_{a-2}}, {x_0,x_{a-1}}
//
// Each side ends as the triangle {x_{a-2},x_{a-1},x_a} plus a tree hanging
// off x_a, which keeps w as the only link between the sides. The fully pruned
// graph has a+b+2 = d+1 edges.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgering/error.hpp"
#include "edgering/graph.hpp"
#include "edgering/semigroup.hpp"

namespace edgering {

/// One step of the removal schedule. Deleting `edge` produces the
/// intermediate with superscript x_i and subscript j on side `phase`.
struct RemovalStep {
  Edge edge;
  char phase = 'u';
  int i = 0;
  int j = 0;

  friend bool operator==(const RemovalStep&, const RemovalStep&) = default;
};

struct RemovalSchedule {
  std::vector<RemovalStep> u_phase;
  std::vector<RemovalStep> v_phase;

  std::vector<RemovalStep> steps() const {
    std::vector<RemovalStep> all = u_phase;
    all.insert(all.end(), v_phase.begin(), v_phase.end());
    return all;
  }
  int size() const { return static_cast<int>(u_phase.size() + v_phase.size()); }
};

inline int Binomial2(int n) { return n * (n - 1) / 2; }

/// Largest edge count covered by the family for d >= 7: C(4,2) + C(d-3,2).
inline int MaxTheoremEdges(int d) { return (d * d - 7 * d + 24) / 2; }

class FamilyGraph {
 public:
  Graph graph;
  int a = 0;
  int b = 0;
  /// Length of the removal-schedule prefix applied to G(a,b).
  int removed = 0;
  /// Cross edges {u_i, v_j} added to G(a,b).
  std::vector<Edge> added;

  int d() const { return a + b + 1; }
  Vertex u(int i) const { return i; }
  Vertex w() const { return a + 1; }
  Vertex v(int j) const { return a + 1 + j; }
  VertexSet u_side() const { return VertexSet::Range(a); }
  VertexSet v_side() const { return VertexSet::Range(d()) - VertexSet::Range(a + 1); }

  std::string name(Vertex x) const {
    Require(x >= 1 && x <= d(), "vertex " + std::to_string(x) + " out of range");
    if (x <= a) return "u" + std::to_string(x);
    if (x == a + 1) return "w";
    return "v" + std::to_string(x - a - 1);
  }

  Vertex vertex(std::string_view role) const {
    for (Vertex x = 1; x <= d(); ++x) {
      if (name(x) == role) return x;
    }
    Fail(ErrorKind::kInvalidInput, "no vertex named '" + std::string(role) + "'");
  }

  /// Role name -> integer label, e.g. {"u1": 1, ..., "w": a+1, ...}.
  std::map<std::string, int> labels() const {
    std::map<std::string, int> out;
    for (Vertex x = 1; x <= d(); ++x) out[name(x)] = x;
    return out;
  }

  std::string ToString(Edge e) const {
    return "{" + name(e.u) + "," + name(e.v) + "}";
  }
};

inline void RequireFamilyParameters(int a, int b) {
  Require(a >= 3 && a <= b, "family parameters need 3 <= a <= b, got a=" +
                                std::to_string(a) + ", b=" + std::to_string(b));
  Require(a + b + 1 <= VertexSet::kMaxVertex, "family graph is too large");
}

inline FamilyGraph BuildGab(int a, int b) {
  RequireFamilyParameters(a, b);
  FamilyGraph f;
  f.a = a;
  f.b = b;
  std::vector<Edge> edges;
  std::vector<Vertex> left{f.w()};
  std::vector<Vertex> right{f.w()};
  for (int i = 1; i <= a; ++i) left.push_back(f.u(i));
  for (int j = 1; j <= b; ++j) right.push_back(f.v(j));
  for (const auto* side : {&left, &right}) {
    for (std::size_t p = 0; p < side->size(); ++p) {
      for (std::size_t q = p + 1; q < side->size(); ++q) {
        edges.push_back(MakeEdge((*side)[p], (*side)[q]));
      }
    }
  }
  f.graph = Graph::FromEdges(f.d(), edges);
  return f;
}

namespace detail {

// `x(k)` maps side index k (0 = w) to a vertex label.
template <typename Label>
std::vector<RemovalStep> SidePhase(char phase, int size, Label x) {
  std::vector<RemovalStep> out;
  for (int i = 1; i <= size - 3; ++i) {
    out.push_back({MakeEdge(x(0), x(i)), phase, i, i});
    for (int j = i + 1; j <= size - 1; ++j) {
      out.push_back({MakeEdge(x(i), x(j)), phase, i, j});
    }
  }
  const int last = size - 2;
  out.push_back({MakeEdge(x(0), x(last)), phase, last, last});
  out.push_back({MakeEdge(x(0), x(last + 1)), phase, last, last + 1});
  return out;
}

}  // namespace detail

inline RemovalSchedule MakeRemovalSchedule(int a, int b) {
  RequireFamilyParameters(a, b);
  const Vertex w = a + 1;
  RemovalSchedule s;
  s.u_phase = detail::SidePhase('u', a, [&](int k) { return k == 0 ? w : k; });
  s.v_phase = detail::SidePhase('v', b, [&](int k) { return k == 0 ? w : w + k; });
  return s;
}

/// Applies the first `prefix` schedule steps to G(a,b).
inline FamilyGraph ApplySchedulePrefix(int a, int b, int prefix) {
  FamilyGraph f = BuildGab(a, b);
  RemovalSchedule s = MakeRemovalSchedule(a, b);
  Require(prefix >= 0 && prefix <= s.size(),
          "schedule prefix must lie in 0.." + std::to_string(s.size()));
  auto steps = s.steps();
  for (int k = 0; k < prefix; ++k) f.graph = f.graph.WithoutEdge(steps[k].edge);
  f.removed = prefix;
  return f;
}

/// The schedule intermediate of G(a,b) with exactly n edges.
inline FamilyGraph FamilyGraphWithEdges(int a, int b, int n) {
  RequireFamilyParameters(a, b);
  const int full = Binomial2(a + 1) + Binomial2(b + 1);
  const int least = a + b + 2;
  Require(n >= least && n <= full,
          "edge count for G(" + std::to_string(a) + "," + std::to_string(b) +
              ") must lie in [" + std::to_string(least) + ", " +
              std::to_string(full) + "], got " + std::to_string(n));
  return ApplySchedulePrefix(a, b, full - n);
}

/// A graph on d vertices with n edges from the family G(3, d-4).
inline FamilyGraph GraphForTheorem(int d, int n) {
  Require(d >= 7, "d must be at least 7, got " + std::to_string(d));
  Require(d <= VertexSet::kMaxVertex, "d is too large");
  Require(n >= d + 1 && n <= MaxTheoremEdges(d),
          "n must lie in [" + std::to_string(d + 1) + ", " +
              std::to_string(MaxTheoremEdges(d)) + "] for d=" +
              std::to_string(d) + ", got " + std::to_string(n));
  return FamilyGraphWithEdges(3, d - 4, n);
}

/// Human-readable name of the schedule position, e.g. "G^{u_1}_{2}".
inline std::string StageName(const FamilyGraph& f) {
  if (!f.added.empty()) return "G_{" + std::to_string(f.a) + "," + std::to_string(f.b) + "}+cross";
  if (f.removed == 0) return "G_{" + std::to_string(f.a) + "," + std::to_string(f.b) + "}";
  RemovalStep step = MakeRemovalSchedule(f.a, f.b).steps()[f.removed - 1];
  std::string prefix = step.phase == 'u' ? "G" : "G~";
  return prefix + "^{" + std::string(1, step.phase) + "_" + std::to_string(step.i) +
         "}_{" + std::to_string(step.j) + "}";
}

/// G(a,b) plus cross edges {u_i, v_j}.
inline FamilyGraph AddCrossEdges(const FamilyGraph& f, const std::vector<Edge>& extra) {
  Require(f.removed == 0 && f.added.empty(),
          "cross edges can only be added to an unmodified G(a,b)");
  std::vector<Edge> normalized;
  for (const Edge& raw : extra) {
    Edge e = MakeEdge(raw.u, raw.v);
    bool cross = f.u_side().contains(e.u) && f.v_side().contains(e.v);
    Require(cross, "edge " + ToString(e) + " is not of the form {u_i, v_j}");
    normalized.push_back(e);
  }
  FamilyGraph out = f;
  out.graph = f.graph.WithEdges(normalized);
  out.added = normalized;
  std::sort(out.added.begin(), out.added.end());
  return out;
}

/// x_w = 0 and both side sums odd.
inline bool InSetA(const FamilyGraph& f, std::span<const std::int64_t> x) {
  Require(x.size() == static_cast<std::size_t>(f.d()),
          "vector length does not match d=" + std::to_string(f.d()));
  if (x[f.w() - 1] != 0) return false;
  std::int64_t su = 0;
  std::int64_t sv = 0;
  for (Vertex v : f.u_side()) su += x[v - 1];
  for (Vertex v : f.v_side()) sv += x[v - 1];
  return su % 2 != 0 && sv % 2 != 0;
}

}  // namespace edgering
