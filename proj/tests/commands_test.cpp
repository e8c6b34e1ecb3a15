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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace edgering {
namespace {

const std::string kData = EDGERING_DATA_DIR;

RunConfig Analyze(const std::string& file) {
  RunConfig c;
  c.input = kData + "/" + file;
  return c;
}

TEST(AnalyzeTest, Verdicts) {
  CommandResult g33 = CmdAnalyze(Analyze("g33.graph"));
  ASSERT_EQ(g33.exit_code, kExitOk) << g33.error;
  Json doc = Json::parse(g33.out);
  EXPECT_EQ(doc["verdict"], "NonNormalS2Verified");
  EXPECT_EQ(doc["exhaustive"], true);
  EXPECT_EQ(doc["degree_bound"], 16);
  EXPECT_EQ(doc["search_bound"], 12);
  EXPECT_EQ(doc["gap_count"], doc["gap"].size());
  EXPECT_EQ(doc["certificates"][0]["vertex"], 4);
  EXPECT_EQ(doc["certificates"][0]["component"], Json::array({1, 2, 3}));
  EXPECT_EQ(doc["gap"][0], Json::array({1, 1, 1, 0, 1, 1, 1}));
  EXPECT_TRUE(doc["hk_witness"].is_null());
  EXPECT_FALSE(doc.contains("timings_ms"));
  EXPECT_EQ(doc["graph"]["facets"].size(), 23u);
  EXPECT_EQ(doc["graph"]["facets"][0]["kind"], "vertex");
  EXPECT_EQ(doc["graph"]["facets"][0]["normal_vector"], Json::array({1, 0, 0, 0, 0, 0, 0}));

  CommandResult k4 = CmdAnalyze(Analyze("k4.graph"));
  EXPECT_EQ(k4.exit_code, kExitOk);
  EXPECT_EQ(Json::parse(k4.out)["verdict"], "Normal");

  EXPECT_EQ(CmdAnalyze(Analyze("c6.graph")).exit_code, kExitUnsupported);
  EXPECT_EQ(CmdAnalyze(Analyze("missing.graph")).exit_code, kExitInput);
}

TEST(AnalyzeTest, ParseErrorAndOptions) {
  const std::string bad = ::testing::TempDir() + "bad.graph";
  WriteTextFile(bad, "p 3 2\ne 1 2\n");
  RunConfig c;
  c.input = bad;
  CommandResult r = CmdAnalyze(c);
  EXPECT_EQ(r.exit_code, kExitInput);
  EXPECT_FALSE(r.error.empty());

  RunConfig timed = Analyze("g33.graph");
  timed.timings = true;
  EXPECT_TRUE(Json::parse(CmdAnalyze(timed).out).contains("timings_ms"));

  RunConfig odd = Analyze("g33.graph");
  odd.degree_bound = 15;
  EXPECT_EQ(CmdAnalyze(odd).exit_code, kExitInput);

  RunConfig tsv = Analyze("g33.graph");
  tsv.format = "tsv";
  CommandResult t = CmdAnalyze(tsv);
  EXPECT_EQ(t.out.substr(0, t.out.find('\n')),
            "d\tedges\tverdict\texhaustive\tgap_count\tcertificate_count");
}

TEST(FamilyCommandTest, Examples) {
  RunConfig gt;
  gt.d = 7;
  gt.n = 8;
  CommandResult r = CmdFamily(gt);
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  EXPECT_EQ(ParseGraph(r.out).edge_count(), 8);
  Json side = Json::parse(r.sidecar);
  EXPECT_EQ(side["labels"]["w"], 4);
  EXPECT_EQ(side["stage"], "G~^{v_1}_{2}");
  EXPECT_EQ(side["schedule_prefix"], 4);

  RunConfig g34;
  g34.a = 3;
  g34.b = 4;
  CommandResult full = CmdFamily(g34);
  EXPECT_EQ(ParseGraph(full.out).edge_count(), 16);

  RunConfig low;
  low.d = 6;
  low.n = 8;
  CommandResult err = CmdFamily(low);
  EXPECT_EQ(err.exit_code, kExitInput);
  EXPECT_NE(err.error.find("at least 7"), std::string::npos);

  RunConfig both = gt;
  both.a = 3;
  EXPECT_EQ(CmdFamily(both).exit_code, kExitInput);
}

TEST(VerifyTheoremCommandTest, SevenAndRangeErrors) {
  RunConfig c;
  c.d = 7;
  CommandResult r = CmdVerifyTheorem(c);
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  Json doc = Json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(doc["rows"][i]["n"], 8 + i);
    EXPECT_EQ(doc["rows"][i]["edges"], 8 + i);
    EXPECT_EQ(doc["rows"][i]["verdict"], "NonNormalS2Verified");
    EXPECT_EQ(doc["rows"][i]["exhaustive"], true);
    EXPECT_FALSE(doc["rows"][i].contains("ms"));
  }
  EXPECT_EQ(doc["all_verified"], true);

  RunConfig high = c;
  high.n = 13;
  CommandResult err = CmdVerifyTheorem(high);
  EXPECT_EQ(err.exit_code, kExitInput);
  EXPECT_NE(err.error.find("[8, 12]"), std::string::npos) << err.error;

  RunConfig inverted = c;
  inverted.n_min = 11;
  inverted.n_max = 9;
  EXPECT_EQ(CmdVerifyTheorem(inverted).exit_code, kExitInput);

  RunConfig six;
  six.d = 6;
  EXPECT_EQ(CmdVerifyTheorem(six).exit_code, kExitInput);
}

TEST(VerifyTheoremCommandTest, EightHasEightRows) {
  RunConfig c;
  c.d = 8;
  c.jobs = 2;
  Json doc = Json::parse(CmdVerifyTheorem(c).out);
  ASSERT_EQ(doc["rows"].size(), 8u);
  EXPECT_EQ(doc["rows"][0]["n"], 9);
  EXPECT_EQ(doc["rows"][7]["n"], 16);
}

TEST(VerifyTheoremCommandTest, TsvIsARenderingOfRows) {
  RunConfig c;
  c.d = 7;
  c.n_min = 8;
  c.n_max = 9;
  c.format = "tsv";
  CommandResult r = CmdVerifyTheorem(c);
  EXPECT_EQ(r.out,
            "d\tn\tedges\tstage\tverdict\texhaustive\tcertificate_count\tgap_count\n"
            "7\t8\t8\tG~^{v_1}_{2}\tNonNormalS2Verified\ttrue\t462\t462\n"
            "7\t9\t9\tG~^{v_1}_{1}\tNonNormalS2Verified\ttrue\t462\t462\n");
}

TEST(AdditionsCommandTest, SingleEdges) {
  RunConfig c;
  c.a = 3;
  c.b = 3;
  CommandResult r = CmdAdditions(c);
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  Json doc = Json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 9u);
  EXPECT_EQ(doc["rows"][0]["added"], Json::array({"{u1,v1}"}));
  for (const auto& row : doc["rows"]) EXPECT_NE(row["verdict"], "NonNormalS2Verified");

  RunConfig big = c;
  big.max_extra = 10;
  EXPECT_EQ(CmdAdditions(big).exit_code, kExitInput);
  RunConfig zero = c;
  zero.max_extra = 0;
  EXPECT_EQ(CmdAdditions(zero).exit_code, kExitInput);
}

TEST(AdditionsCommandTest, SubsetEnumeration) {
  std::vector<Edge> pool;
  for (int i = 0; i < 9; ++i) pool.push_back({1, i + 2});
  EXPECT_EQ(EdgeSubsets(pool, 9).size(), 511u);
  EXPECT_EQ(EdgeSubsets(pool, 1).size(), 9u);
  EXPECT_EQ(EdgeSubsets(pool, 2).size(), 45u);
  auto two = EdgeSubsets(pool, 2);
  EXPECT_EQ(two[9], (std::vector<Edge>{{1, 2}, {1, 3}}));
}

TEST(JobsTest, OrderIsIndependentOfWorkers) {
  auto square = [](int i) { return i * i; };
  EXPECT_EQ(RunJobs<int>(50, 1, square), RunJobs<int>(50, 8, square));
  EXPECT_TRUE(RunJobs<int>(0, 4, square).empty());
  try {
    RunJobs<int>(20, 4, [](int i) -> int {
      if (i >= 5) Fail(ErrorKind::kUnsupported, "job " + std::to_string(i));
      return i;
    });
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "job 5");
  }
}

TEST(DeterminismTest, JobsDoNotChangeReportBytes) {
  RunConfig serial;
  serial.d = 8;
  serial.n_max = 12;
  RunConfig parallel = serial;
  parallel.jobs = 8;
  EXPECT_EQ(CmdVerifyTheorem(serial).out, CmdVerifyTheorem(parallel).out);
}

}  // namespace
}  // namespace edgering
