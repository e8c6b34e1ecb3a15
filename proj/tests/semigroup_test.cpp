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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace edgering {
namespace {

using testing::BruteInS;
using testing::Complete;
using testing::Cycle;
using testing::G33;
using testing::G34;
using testing::Vec;

constexpr Vertex kW = 4;

void ExpectWitness(const std::optional<MembershipWitness>& w, const ExponentVector& x) {
  ASSERT_TRUE(w.has_value()) << ToString(x);
  EXPECT_EQ(w->Sum(static_cast<int>(x.size())), x);
  EXPECT_EQ(2 * w->edge_total(), CoordinateSum(x));
}

TEST(RhoTest, Examples) {
  EXPECT_EQ(Rho(Complete(3), {1, 2}), Vec({1, 1, 0}));
  ExponentVector x = Rho(G33(), {7, kW});
  EXPECT_EQ(x, Vec({0, 0, 0, 1, 0, 0, 1}));
  Graph g34 = G34();
  for (const Edge& e : g34.edges()) EXPECT_EQ(CoordinateSum(Rho(g34, e)), 2);
  EXPECT_THROW(Rho(G33(), {1, 5}), Error);
}

TEST(CycleIndicatorTest, Examples) {
  Graph g = G33();
  ExponentVector c = CycleIndicator(g, OddCycle{{1, 2, 3}});
  ExponentVector c2 = CycleIndicator(g, OddCycle{{5, 6, 7}});
  EXPECT_EQ(c, Vec({1, 1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(detail::Add(c, c2), Vec({1, 1, 1, 0, 1, 1, 1}));
  EXPECT_EQ(detail::Add(detail::Add(c, c2), detail::Add(c, c2)), Vec({2, 2, 2, 0, 2, 2, 2}));
  EXPECT_THROW(CycleIndicator(g, OddCycle{{1, 2, 5}}), Error);
}

TEST(LatticeTest, Examples) {
  Graph g = G33();
  EXPECT_TRUE(InLattice(g, Vec({1, 1, 1, 0, 1, 1, 1})));
  EXPECT_FALSE(InLattice(g, Vec({1, 0, 0, 0, 0, 0, 0})));
  Graph c6 = Cycle(6);
  for (const Edge& e : c6.edges()) EXPECT_TRUE(InLattice(c6, Rho(c6, e)));
  EXPECT_FALSE(InLattice(Cycle(6), Vec({1, 0, 1, 0, 0, 0})));
  EXPECT_THROW(InLattice(Graph::FromEdgeList(4, {{1, 2}, {3, 4}}), Vec({1, 1, 0, 0})),
               Error);
  EXPECT_THROW(InLattice(g, Vec({1, 1})), Error);
}

TEST(LatticeTest, CanonicalBasisAgreesWithClosedForm) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> coord(-4, 4);
  std::vector<Graph> graphs{G33(), Cycle(6), Cycle(5), Complete(4),
                            Graph::FromEdgeList(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}})};
  for (int i = 0; i < 10; ++i) {
    graphs.push_back(testing::RandomConnectedNonBipartite(rng, 6 + i % 3, 0.25));
  }
  for (const Graph& g : graphs) {
    EdgeRing ring(g);
    for (int trial = 0; trial < 300; ++trial) {
      ExponentVector x(g.vertex_count());
      for (auto& v : x) v = coord(rng);
      EXPECT_EQ(ring.lattice().Contains(x), InLatticeClosedForm(g, x)) << ToString(x);
    }
  }
}

TEST(ConeTest, Examples) {
  Graph g = G33();
  EXPECT_TRUE(InCone(g, Vec({1, 1, 1, 0, 1, 1, 1})));
  EXPECT_FALSE(InCone(g, Vec({0, 0, 0, -1, 0, 0, 0})));
  EXPECT_TRUE(InCone(g, detail::Add(Rho(g, {1, 2}), Rho(g, {4, 6}))));
  // Decided by the rational-feasibility oracle before freezing: the
  // fundamental-set facet of T = {u1} is violated.
  EXPECT_FALSE(InCone(g, Vec({1, 0, 0, 0, 1, 0, 0})));
  EXPECT_FALSE(EdgeRing(g).InConeByFeasibility(Vec({1, 0, 0, 0, 1, 0, 0})));
  // Bipartite graphs fall back to feasibility.
  EXPECT_TRUE(InCone(Cycle(6), Vec({1, 1, 1, 1, 1, 1})));
  EXPECT_FALSE(InCone(Cycle(6), Vec({2, 0, 0, 0, 0, 0})));
}

TEST(SbarTest, Examples) {
  Graph g = G33();
  EXPECT_TRUE(InSbar(g, Vec({1, 1, 1, 0, 1, 1, 1})));
  EXPECT_TRUE(InSbar(g, Vec({1, 1, 0, 0, 0, 0, 0})));
  EXPECT_TRUE(InLattice(g, Vec({1, 0, 0, 0, 1, 0, 0})));
  EXPECT_FALSE(InSbar(g, Vec({1, 0, 0, 0, 1, 0, 0})));
}

TEST(InSTest, Examples) {
  Graph g = G33();
  auto w = InS(g, Vec({1, 1, 0, 1, 1, 0, 0}));
  ExpectWitness(w, Vec({1, 1, 0, 1, 1, 0, 0}));
  EXPECT_FALSE(InS(g, Vec({1, 1, 1, 0, 1, 1, 1})).has_value());
  auto doubled = InS(g, Vec({2, 2, 2, 0, 2, 2, 2}));
  ExpectWitness(doubled, Vec({2, 2, 2, 0, 2, 2, 2}));
  std::vector<std::pair<Edge, int>> six{{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1},
                                        {{5, 6}, 1}, {{5, 7}, 1}, {{6, 7}, 1}};
  EXPECT_EQ(doubled->multiplicities, six);
  EXPECT_FALSE(InS(g, Vec({1, 0, 0, 0, 0, 0, 0})).has_value());
  EXPECT_THROW(InS(g, Vec({-1, 1, 0, 0, 0, 0, 0})), Error);
}

TEST(InSTest, AgreesWithMultisetEnumeration) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> coord(0, 3);
  for (int i = 0; i < 12; ++i) {
    Graph g = testing::RandomConnectedNonBipartite(rng, 5 + i % 3, 0.3);
    for (int trial = 0; trial < 60; ++trial) {
      ExponentVector x(g.vertex_count());
      for (auto& v : x) v = coord(rng);
      auto w = InS(g, x);
      ASSERT_EQ(w.has_value(), BruteInS(g, x)) << FormatGraph(g) << ToString(x);
      if (w) ExpectWitness(w, x);
    }
  }
}

TEST(NormalizationGeneratorsTest, Examples) {
  EXPECT_EQ(NormalizationGenerators(G33()),
            std::vector<ExponentVector>{Vec({1, 1, 1, 0, 1, 1, 1})});
  EXPECT_TRUE(NormalizationGenerators(Complete(5)).empty());
  // G_{3,4}: {u1,u2,u3} against each of the four triangles of K4 on v1..v4.
  auto gens = NormalizationGenerators(G34());
  ASSERT_EQ(gens.size(), 4u);
  for (const auto& x : gens) {
    EXPECT_EQ(x[kW - 1], 0);
    EXPECT_EQ(CoordinateSum(x), 6);
  }
}

TEST(SemigroupBallTest, MatchesReferenceBall) {
  for (const Graph& g : {G33(), Complete(4), testing::Cycle(5), GraphForTheorem(7, 9).graph}) {
    SemigroupBall ball(g.vertex_count(), g.edges(), 8);
    auto reference = testing::ReferenceBall(g, 8);
    EXPECT_EQ(ball.size(), reference.size());
    for (const auto& x : reference) EXPECT_TRUE(ball.Contains(x));
    std::size_t visited = 0;
    std::int64_t last = 0;
    ball.ForEach([&](const ExponentVector& x) {
      EXPECT_TRUE(reference.count(x));
      EXPECT_GE(CoordinateSum(x), last);
      last = CoordinateSum(x);
      ++visited;
      return true;
    });
    EXPECT_EQ(visited, reference.size());
  }
}

TEST(SemigroupBallTest, AgreesWithBacktrackingSearch) {
  Graph g = G34();
  SemigroupBall ball(g.vertex_count(), g.edges(), 10);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    ExponentVector x(g.vertex_count());
    for (auto& v : x) v = coord(rng);
    if (CoordinateSum(x) > 10) continue;
    EXPECT_EQ(ball.Contains(x), InS(g, x).has_value()) << ToString(x);
  }
}

TEST(SemigroupBallTest, RefusesOversizedKeys) {
  Graph k = Complete(20);
  try {
    SemigroupBall ball(20, k.edges(), 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLimitExceeded);
  }
}

TEST(SemigroupBallTest, Cancellation) {
  std::stop_source source;
  source.request_stop();
  try {
    SemigroupBall ball(7, G33().edges(), 8, source.get_token());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCancelled);
  }
}

TEST(GapTest, Examples) {
  const ExponentVector pair_sum = Vec({1, 1, 1, 0, 1, 1, 1});
  for (GapRoute route : {GapRoute::kDirect, GapRoute::kFormula}) {
    EXPECT_EQ(GapElements(G33(), 6, route), std::vector<ExponentVector>{pair_sum});
    EXPECT_TRUE(GapElements(Complete(5), 10, route).empty());
    EXPECT_EQ(GapElements(GraphForTheorem(7, 8).graph, 6, route),
              std::vector<ExponentVector>{pair_sum});
  }
  EXPECT_THROW(GapElements(Cycle(6), 6), Error);
}

TEST(GapTest, MatchesReferenceEnumeration) {
  std::mt19937 rng(31);
  std::vector<Graph> graphs{G33(), GraphForTheorem(7, 8).graph};
  for (int i = 0; i < 8; ++i) {
    graphs.push_back(testing::RandomConnectedNonBipartite(rng, 6 + i % 2, 0.15));
  }
  for (const Graph& g : graphs) {
    EXPECT_EQ(GapElements(g, 8), testing::ReferenceGap(g, 8)) << FormatGraph(g);
  }
}

TEST(GapTest, RoutesAgreeOnFamilyIntermediates) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}}) {
    for (const Graph& g : testing::ScheduleGraphs(a, b)) {
      EdgeRing ring(g);
      EXPECT_EQ(GapElements(ring, 10, GapRoute::kDirect),
                GapElements(ring, 10, GapRoute::kFormula))
          << FormatGraph(g);
    }
  }
}

TEST(GapTest, NormalGraphsHaveNoGap) {
  std::mt19937 rng(41);
  int checked = 0;
  while (checked < 10) {
    Graph g = testing::RandomConnectedNonBipartite(rng, 6, 0.5);
    if (!SatisfiesOddCycleCondition(g)) continue;
    EXPECT_TRUE(GapElements(g, 10).empty()) << FormatGraph(g);
    ++checked;
  }
}

TEST(FamilyGapTest, PairPlusVertexAndWIsInS) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}}) {
    FamilyGraph f = BuildGab(a, b);
    for (const auto& p : ExceptionalPairs(f.graph)) {
      ExponentVector base =
          detail::Add(CycleIndicator(f.graph, p.first), CycleIndicator(f.graph, p.second));
      for (Vertex v = 1; v <= f.d(); ++v) {
        ExponentVector x = base;
        ++x[v - 1];
        ++x[f.w() - 1];
        auto w = InS(f.graph, x);
        ExpectWitness(w, x);
      }
    }
  }
}

TEST(FamilyGapTest, PairPlusWNeighbourIsInSOnIntermediates) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}}) {
    const int steps = MakeRemovalSchedule(a, b).size();
    for (int k = 0; k <= steps; ++k) {
      FamilyGraph f = ApplySchedulePrefix(a, b, k);
      for (const auto& p : ExceptionalPairs(f.graph)) {
        ExponentVector base = detail::Add(CycleIndicator(f.graph, p.first),
                                          CycleIndicator(f.graph, p.second));
        for (Vertex v : f.graph.neighbors(f.w())) {
          ExponentVector x = base;
          ++x[v - 1];
          ++x[f.w() - 1];
          ExpectWitness(InS(f.graph, x), x);
        }
      }
    }
  }
}

TEST(FamilyGapTest, GapLiesInSetA) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}}) {
    const int steps = MakeRemovalSchedule(a, b).size();
    for (int k = 0; k <= steps; ++k) {
      FamilyGraph f = ApplySchedulePrefix(a, b, k);
      for (const auto& x : GapElements(f.graph, 10)) {
        EXPECT_TRUE(InSetA(f, x)) << StageName(f) << " " << ToString(x);
      }
    }
  }
}

}  // namespace
}  // namespace edgering
