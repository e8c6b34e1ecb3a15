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

// The four commands behind the edgering tool, callable in-process.
//
// Exit codes:
//   0  success
//   1  property violation (a theorem row or an addition run disagrees)
//   2  input, parse or range error
//   3  unsupported graph class (bipartite, disconnected) or size limit
//   4  unknown verdict

#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgering/error.hpp"
#include "edgering/families.hpp"
#include "edgering/graph_io.hpp"
#include "edgering/jobs.hpp"
#include "edgering/report.hpp"
#include "edgering/s2.hpp"

namespace edgering {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInput = 2,
  kExitUnsupported = 3,
  kExitUnknown = 4,
};

struct RunConfig {
  std::string input;
  std::string output;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<int> d;
  std::optional<int> n;
  std::optional<int> n_min;
  std::optional<int> n_max;
  int max_extra = 1;
  int degree_bound = 16;
  int search_bound = 12;
  int jobs = 1;
  std::string format = "json";
  bool timings = false;
};

struct CommandResult {
  int exit_code = kExitOk;
  /// Primary output (report, table or graph file).
  std::string out;
  /// Optional JSON sidecar, written next to the primary output.
  std::string sidecar;
  std::string error;
};

inline int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return kExitInput;
    case ErrorKind::kUnsupported:
    case ErrorKind::kLimitExceeded:
      return kExitUnsupported;
    case ErrorKind::kCancelled:
      return kExitUnknown;
  }
  return kExitInput;
}

namespace detail {

inline void CheckCommon(const RunConfig& c) {
  Require(c.format == "json" || c.format == "tsv",
          "format must be json or tsv, got '" + c.format + "'");
  Require(c.degree_bound > 0 && c.degree_bound % 2 == 0,
          "degree bound must be a positive even integer");
  Require(c.search_bound >= 0 && c.search_bound % 2 == 0,
          "search bound must be a nonnegative even integer");
  Require(c.jobs >= 1, "jobs must be at least 1");
}

inline ClassifyOptions Options(const RunConfig& c) {
  ClassifyOptions o;
  o.degree_bound = c.degree_bound;
  o.search_bound = c.search_bound;
  return o;
}

inline std::string Render(const Json& doc, const Json& rows, const RunConfig& c) {
  if (c.format == "tsv") return ToTsv(rows);
  return doc.dump(2) + "\n";
}

template <typename Body>
CommandResult Guarded(Body body) {
  try {
    return body();
  } catch (const Error& e) {
    CommandResult r;
    r.exit_code = ExitCodeFor(e.kind());
    r.error = e.what();
    return r;
  }
}

}  // namespace detail

inline CommandResult CmdAnalyze(const RunConfig& c) {
  return detail::Guarded([&] {
    detail::CheckCommon(c);
    Require(!c.input.empty(), "analyze needs --input");
    Graph g = ReadGraphFile(c.input);
    ClassificationReport report = Classify(g, detail::Options(c));
    Json doc = ToJson(report, {c.timings});
    doc["graph"] = GraphSummary(g);
    CommandResult r;
    if (c.format == "tsv") {
      Json row{{"d", g.vertex_count()},
               {"edges", g.edge_count()},
               {"verdict", ToString(report.verdict)},
               {"exhaustive", report.exhaustive},
               {"gap_count", report.gap_count()},
               {"certificate_count", report.certificates.size()}};
      r.out = ToTsv(Json::array({row}));
    } else {
      r.out = doc.dump(2) + "\n";
    }
    r.exit_code = report.verdict == Verdict::kUnknown ? kExitUnknown : kExitOk;
    return r;
  });
}

inline CommandResult CmdFamily(const RunConfig& c) {
  return detail::Guarded([&] {
    FamilyGraph f;
    if (c.d) {
      Require(!c.a && !c.b, "use either --d/--n or --a/--b");
      Require(c.n.has_value(), "family --d needs --n");
      f = GraphForTheorem(*c.d, *c.n);
    } else {
      Require(c.a && c.b, "family needs --a and --b, or --d and --n");
      f = c.n ? FamilyGraphWithEdges(*c.a, *c.b, *c.n) : BuildGab(*c.a, *c.b);
    }
    Json sidecar = FamilySidecar(f);
    CommandResult r;
    r.out = FormatGraph(f.graph, {StageName(f) + " a=" + std::to_string(f.a) +
                                  " b=" + std::to_string(f.b)});
    r.sidecar = sidecar.dump(2) + "\n";
    return r;
  });
}

inline CommandResult CmdVerifyTheorem(const RunConfig& c) {
  return detail::Guarded([&] {
    detail::CheckCommon(c);
    Require(c.d.has_value(), "verify-theorem needs --d");
    const int d = *c.d;
    Require(d >= 7, "d must be at least 7, got " + std::to_string(d));
    Require(d <= VertexSet::kMaxVertex, "d is too large");
    const int lo_valid = d + 1;
    const int hi_valid = MaxTheoremEdges(d);
    int lo = c.n ? *c.n : c.n_min.value_or(lo_valid);
    int hi = c.n ? *c.n : c.n_max.value_or(hi_valid);
    const std::string range = "[" + std::to_string(lo_valid) + ", " +
                              std::to_string(hi_valid) + "]";
    Require(lo >= lo_valid && hi <= hi_valid && lo <= hi,
            "n range must be a non-empty subrange of " + range + " for d=" +
                std::to_string(d));
    auto rows = RunJobs<Json>(hi - lo + 1, c.jobs, [&](int k) {
      const int n = lo + k;
      FamilyGraph f = GraphForTheorem(d, n);
      ClassificationReport report = Classify(f.graph, detail::Options(c));
      Json row{{"d", d},
               {"n", n},
               {"edges", f.graph.edge_count()},
               {"stage", StageName(f)},
               {"verdict", ToString(report.verdict)},
               {"exhaustive", report.exhaustive},
               {"certificate_count", report.certificates.size()},
               {"gap_count", report.gap_count()}};
      if (c.timings) row["ms"] = report.elapsed_ms;
      return row;
    });
    bool all = true;
    for (const Json& row : rows) {
      all = all && row["verdict"] == ToString(Verdict::kNonNormalS2Verified);
    }
    Json doc{{"command", "verify-theorem"},
             {"d", d},
             {"degree_bound", c.degree_bound},
             {"search_bound", c.search_bound},
             {"rows", rows},
             {"all_verified", all}};
    CommandResult r;
    r.out = detail::Render(doc, doc["rows"], c);
    r.exit_code = all ? kExitOk : kExitViolation;
    return r;
  });
}

/// Non-empty subsets of `pool` of size <= k, by size then lexicographically.
inline std::vector<std::vector<Edge>> EdgeSubsets(const std::vector<Edge>& pool, int k) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      rec(i + 1, left - 1);
      current.pop_back();
    }
  };
  for (int size = 1; size <= k && size <= static_cast<int>(pool.size()); ++size) {
    rec(0, size);
  }
  return out;
}

inline CommandResult CmdAdditions(const RunConfig& c) {
  return detail::Guarded([&] {
    detail::CheckCommon(c);
    Require(c.a && c.b, "additions needs --a and --b");
    Require(c.max_extra >= 1, "max-extra must be at least 1");
    FamilyGraph base = BuildGab(*c.a, *c.b);
    std::vector<Edge> pool;
    for (Vertex u : base.u_side()) {
      for (Vertex v : base.v_side()) pool.push_back(MakeEdge(u, v));
    }
    Require(c.max_extra <= static_cast<int>(pool.size()),
            "max-extra must not exceed the " + std::to_string(pool.size()) +
                " available cross edges");
    auto subsets = EdgeSubsets(pool, c.max_extra);
    auto rows = RunJobs<Json>(static_cast<int>(subsets.size()), c.jobs, [&](int k) {
      FamilyGraph f = AddCrossEdges(base, subsets[k]);
      ClassificationReport report = Classify(f.graph, detail::Options(c));
      Json added = Json::array();
      for (const Edge& e : f.added) added.push_back(f.ToString(e));
      Json row{{"added", added},
               {"edges", f.graph.edge_count()},
               {"verdict", ToString(report.verdict)},
               {"hk_witness", report.hk_witness ? ToJson(*report.hk_witness) : Json(nullptr)},
               {"gap_count", report.gap_count()}};
      if (c.timings) row["ms"] = report.elapsed_ms;
      return row;
    });
    bool ok = true;
    for (const Json& row : rows) {
      ok = ok && (row["verdict"] == ToString(Verdict::kNormal) ||
                  row["verdict"] == ToString(Verdict::kNonNormalNotS2));
    }
    Json doc{{"command", "additions"},
             {"a", *c.a},
             {"b", *c.b},
             {"max_extra", c.max_extra},
             {"rows", rows},
             {"all_normal_or_not_s2", ok}};
    CommandResult r;
    r.out = detail::Render(doc, doc["rows"], c);
    r.exit_code = ok ? kExitOk : kExitViolation;
    return r;
  });
}

}  // namespace edgering
