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

// JSON and TSV rendering of classification results, facets and family
// graphs. Vectors are integer arrays in vertex-label order; vertex sets are
// ascending label arrays. Wall-clock fields are emitted only on request so
// that reports are byte-stable.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "edgering/cycles.hpp"
#include "edgering/facets.hpp"
#include "edgering/families.hpp"
#include "edgering/s2.hpp"

namespace edgering {

using Json = nlohmann::ordered_json;

inline Json ToJson(VertexSet s) { return s.to_vector(); }

inline Json ToJson(const OddCycle& c) { return c.vertices; }

inline Json ToJson(const ExceptionalPair& p) {
  return Json{{"first", ToJson(p.first)}, {"second", ToJson(p.second)}};
}

inline Json ToJson(const Facet& f) {
  return Json{{"kind", ToString(f.kind)},
              {"vertices", ToJson(f.vertices)},
              {"normal_vector", f.normal},
              {"validated", f.validated}};
}

inline Json ToJson(const ExclusionCertificate& c) {
  return Json{{"vertex", c.vertex},
              {"component", ToJson(c.component)},
              {"candidate", c.candidate}};
}

inline Json ToJson(const HkWitness& w) {
  Json sets = Json::array();
  for (VertexSet t : w.fundamental_sets_checked) sets.push_back(ToJson(t));
  return Json{{"pair", ToJson(w.pair)},
              {"regular_vertices_checked", w.regular_vertices_checked},
              {"fundamental_sets_checked", sets}};
}

struct ReportOptions {
  bool timings = false;
};

inline Json ToJson(const ClassificationReport& r, const ReportOptions& opts = {}) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(ToJson(c));
  Json out{{"verdict", ToString(r.verdict)},
           {"degree_bound", r.degree_bound},
           {"search_bound", r.search_bound},
           {"gap_count", r.gap_count()},
           {"gap", r.gap.empty() ? Json::array() : Json(r.gap)},
           {"certificates", certs},
           {"bounded_exclusions",
            r.bounded_exclusions.empty() ? Json::array() : Json(r.bounded_exclusions)},
           {"hk_witness", r.hk_witness ? ToJson(*r.hk_witness) : Json(nullptr)},
           {"s2_violation", r.s2_violation ? Json(*r.s2_violation) : Json(nullptr)},
           {"exhaustive", r.exhaustive}};
  if (opts.timings) out["timings_ms"] = r.elapsed_ms;
  return out;
}

/// Structural summary of a graph: cycles, exceptional pairs and facets.
inline Json GraphSummary(const Graph& g) {
  Json cycles = Json::array();
  auto odd = MinimalOddCycles(g);
  for (const auto& c : odd) cycles.push_back(ToJson(c));
  Json pairs = Json::array();
  for (const auto& p : ExceptionalPairs(g, odd)) pairs.push_back(ToJson(p));
  Json out{{"d", g.vertex_count()},
           {"edges", g.edge_count()},
           {"minimal_odd_cycles", cycles},
           {"exceptional_pairs", pairs},
           {"odd_cycle_condition", pairs.empty()}};
  if (IsConnected(g) && !IsBipartiteOn(g, g.vertices())) {
    Json facets = Json::array();
    for (const auto& f : Facets(g)) facets.push_back(ToJson(f));
    out["facets"] = facets;
  }
  return out;
}

inline Json FamilySidecar(const FamilyGraph& f) {
  Json labels = Json::object();
  for (Vertex x = 1; x <= f.d(); ++x) labels[f.name(x)] = x;
  Json added = Json::array();
  for (const Edge& e : f.added) added.push_back({e.u, e.v});
  return Json{{"a", f.a},
              {"b", f.b},
              {"d", f.d()},
              {"edges", f.graph.edge_count()},
              {"stage", StageName(f)},
              {"schedule_prefix", f.removed},
              {"added_edges", added},
              {"labels", labels}};
}

/// One line per row, columns taken from the first row's keys. Arrays and
/// objects are written as compact JSON.
inline std::string ToTsv(const Json& rows) {
  std::ostringstream out;
  if (!rows.is_array() || rows.empty()) return "";
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "\t" : "") << keys[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const Json& v = row.contains(keys[i]) ? row.at(keys[i]) : Json(nullptr);
      out << (i ? "\t" : "") << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace edgering
