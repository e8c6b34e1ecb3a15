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

// edgering: classify edge rings of graphs and reproduce the two-clique
// family results from the command line.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "edgering/commands.hpp"

namespace {

using edgering::CommandResult;
using edgering::RunConfig;

void AddBounds(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--degree-bound", c.degree_bound, "Gap enumeration bound (even)")
      ->capture_default_str();
  cmd->add_option("--search-bound", c.search_bound, "S_F search bound (even)")
      ->capture_default_str();
  cmd->add_option("--format", c.format, "Output format: json or tsv")
      ->capture_default_str();
  cmd->add_option("--output", c.output, "Write output here instead of stdout");
  cmd->add_flag("--timings", c.timings, "Include wall-clock timings");
}

int Emit(const CommandResult& r, const RunConfig& c) {
  if (!r.error.empty()) {
    std::cerr << "error: " << r.error << '\n';
    return r.exit_code;
  }
  try {
    if (c.output.empty()) {
      std::cout << r.out;
    } else {
      edgering::WriteTextFile(c.output, r.out);
      if (!r.sidecar.empty()) edgering::WriteTextFile(c.output + ".json", r.sidecar);
    }
  } catch (const edgering::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return edgering::kExitInput;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge rings of graphs: normality and Serre's (S2) condition"};
  app.require_subcommand(1);
  RunConfig c;

  auto* analyze = app.add_subcommand("analyze", "Classify a graph file");
  analyze->add_option("--input", c.input, "Graph file")->required();
  AddBounds(analyze, c);

  auto* family = app.add_subcommand("family", "Write a two-clique family graph");
  family->add_option("--a", c.a, "Size of the u-side clique minus w");
  family->add_option("--b", c.b, "Size of the v-side clique minus w");
  family->add_option("--d", c.d, "Vertex count (theorem map, a = 3)");
  family->add_option("--n", c.n, "Edge count");
  family->add_option("--output", c.output, "Graph file; sidecar goes to <output>.json");

  auto* verify = app.add_subcommand("verify-theorem",
                                    "Classify the family graph for every edge count");
  verify->add_option("--d", c.d, "Vertex count")->required();
  verify->add_option("--n", c.n, "Single edge count");
  verify->add_option("--n-min", c.n_min, "Smallest edge count");
  verify->add_option("--n-max", c.n_max, "Largest edge count");
  verify->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
  AddBounds(verify, c);

  auto* additions = app.add_subcommand("additions",
                                       "Classify cross-edge additions to G(a,b)");
  additions->add_option("--a", c.a, "Size of the u-side clique minus w")->required();
  additions->add_option("--b", c.b, "Size of the v-side clique minus w")->required();
  additions->add_option("--max-extra", c.max_extra, "Largest subset size")
      ->capture_default_str();
  additions->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
  AddBounds(additions, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : edgering::kExitInput;
  }

  CommandResult r;
  if (*analyze) r = edgering::CmdAnalyze(c);
  if (*family) r = edgering::CmdFamily(c);
  if (*verify) r = edgering::CmdVerifyTheorem(c);
  if (*additions) r = edgering::CmdAdditions(c);
  return Emit(r, c);
}
