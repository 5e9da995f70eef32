// Copyright 2026 The IMCPP Authors.
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

#include "imcpp/objectives.h"

#include <cstdio>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "imcpp/live_edge.h"
#include "imcpp/mia.h"
#include "imcpp/rng.h"
#include "test_util.h"

namespace imcpp {
namespace {

using ::imcpp::testing::BruteIcValue;
using ::imcpp::testing::BruteLtValue;
using ::imcpp::testing::MakeGraph;
using ::imcpp::testing::Path3;
using ::imcpp::testing::RandomSmallGraph;

Assignment FromPairs(int m, int n, std::initializer_list<GroundPair> pairs) {
  Assignment a(m, n);
  for (const GroundPair& p : pairs) a.Insert(p);
  return a;
}

EvalParams Params() {
  EvalParams p;
  p.theta = MiaTheta::Default();
  p.mc_runs = 200;
  p.seed = 5;
  return p;
}

TEST(AssignmentTest, IndependenceExamples) {
  EXPECT_TRUE(IsIndependent(Assignment(2, 3)));
  EXPECT_FALSE(IsIndependent(FromPairs(2, 3, {{0, 1}, {1, 1}})));
  Partition p(3, {2, 0, 1, 1});
  EXPECT_TRUE(IsIndependent(p.ToAssignment()));
  EXPECT_EQ(p.ToAssignment().size(), 4);
}

TEST(AssignmentTest, CommunityViews) {
  Assignment a = FromPairs(2, 4, {{0, 0}, {1, 2}, {0, 3}});
  EXPECT_EQ(a.CommunityOf(0), 0);
  EXPECT_EQ(a.CommunityOf(1), -1);
  EXPECT_EQ(a.CommunityOf(2), 1);
  auto sets = a.Communities();
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(sets[0].size(), 2);
  EXPECT_TRUE(sets[1].contains(2));
}

TEST(PartitionTest, FromAssignmentNeedsTotalIndependentSet) {
  EXPECT_FALSE(Partition::FromAssignment(FromPairs(2, 2, {{0, 0}})).ok());
  EXPECT_FALSE(
      Partition::FromAssignment(FromPairs(2, 2, {{0, 0}, {1, 0}, {0, 1}})).ok());
  auto p = Partition::FromAssignment(FromPairs(2, 2, {{1, 0}, {0, 1}}));
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->community_of(), (std::vector<int>{1, 0}));
}

TEST(FractionalAssignmentTest, PolytopeAndSupport) {
  FractionalAssignment x(2, 2);
  EXPECT_TRUE(x.InPolytope());
  EXPECT_TRUE(x.IsIntegral());
  x.at(0, 0) = 0.6;
  x.at(1, 0) = 0.4;
  EXPECT_TRUE(x.InPolytope());
  EXPECT_FALSE(x.IsIntegral());
  EXPECT_DOUBLE_EQ(x.ColumnSum(0), 1.0);
  x.at(1, 0) = 0.5;
  EXPECT_FALSE(x.InPolytope());

  Assignment a = FromPairs(2, 2, {{1, 0}});
  FractionalAssignment ind = FractionalAssignment::Indicator(a);
  EXPECT_TRUE(ind.IsIntegral());
  EXPECT_EQ(ind.Support().pairs(), a.pairs());
}

TEST(EvaluateFTest, EmptyAssignmentIsZeroForEveryModel) {
  InfluenceGraph g = Path3(0.5);
  for (SpreadModel model :
       {SpreadModel::kIcMonteCarlo, SpreadModel::kLtMonteCarlo,
        SpreadModel::kIcExact, SpreadModel::kLtExact, SpreadModel::kMia}) {
    auto v = EvaluateF(g, Assignment(2, 3), model, Params());
    ASSERT_TRUE(v.ok());
    EXPECT_EQ(v->mean, 0.0);
  }
}

TEST(EvaluateFTest, PathPartitionExample) {
  InfluenceGraph g = Path3(0.5);
  Assignment a = FromPairs(2, 3, {{0, 0}, {0, 1}, {1, 2}});
  auto v = EvaluateF(g, a, SpreadModel::kIcExact, Params());
  ASSERT_TRUE(v.ok());
  EXPECT_DOUBLE_EQ(v->mean, 0.5);
  EXPECT_EQ(v->std_error, 0.0);
}

TEST(EvaluateFTest, OneCommunityIsWholeGraphSpread) {
  InfluenceGraph g = testing::Diamond(0.5);
  Assignment a = Partition(1, {0, 0, 0, 0}).ToAssignment();
  EXPECT_DOUBLE_EQ(EvaluateF(g, a, SpreadModel::kIcExact, Params())->mean,
                   *ExactSigmaIc(g));
  EXPECT_DOUBLE_EQ(EvaluateF(g, a, SpreadModel::kMia, Params())->mean, 2.25);
}

TEST(EvaluateFTest, Errors) {
  InfluenceGraph g = Path3(0.5);
  Assignment a = FromPairs(1, 3, {{0, 0}, {0, 1}});
  EvalParams no_theta = Params();
  no_theta.theta.reset();
  EXPECT_FALSE(EvaluateF(g, a, SpreadModel::kMia, no_theta).ok());
  EvalParams tiny = Params();
  tiny.exact_edge_cap = 0;
  auto refused = EvaluateF(g, a, SpreadModel::kIcExact, tiny);
  ASSERT_FALSE(refused.ok());
  EXPECT_EQ(refused.status().code(), absl::StatusCode::kResourceExhausted);
  InfluenceGraph heavy = MakeGraph(3, {{0, 2, 0.8}, {1, 2, 0.8}});
  EXPECT_FALSE(EvaluateF(heavy, Partition(1, {0, 0, 0}).ToAssignment(),
                         SpreadModel::kLtMonteCarlo, Params())
                   .ok());
}

TEST(EvaluateFTest, SandwichOrderingAndOracles) {
  Rng rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    InfluenceGraph g = RandomSmallGraph(rng, 6, 10, true);
    const int n = g.node_count();
    std::vector<int> c(n);
    for (NodeId v = 0; v < n; ++v) c[v] = static_cast<int>(rng.Below(2));
    Partition p(2, c);
    Assignment a = p.ToAssignment();
    const double lt = EvaluateF(g, a, SpreadModel::kLtExact, Params())->mean;
    const double ic = EvaluateF(g, a, SpreadModel::kIcExact, Params())->mean;
    const double mia = EvaluateF(g, a, SpreadModel::kMia, Params())->mean;
    EXPECT_GE(lt, ic - 1e-12);
    EXPECT_GE(ic, mia - 1e-12);
    uint32_t m0 = 0, m1 = 0;
    for (NodeId v = 0; v < n; ++v) (c[v] ? m1 : m0) |= 1u << v;
    EXPECT_NEAR(ic, BruteIcValue(g, m0) + BruteIcValue(g, m1), 1e-12);
    EXPECT_NEAR(lt, BruteLtValue(g, m0) + BruteLtValue(g, m1), 1e-12);
  }
}

TEST(EvaluateFTest, MonotoneInAssignmentForMiaAndLt) {
  Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    InfluenceGraph g = RandomSmallGraph(rng, 6, 10, true);
    const int n = g.node_count();
    Assignment a(2, n);
    double lt_prev = 0.0, mia_prev = 0.0;
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    rng.Shuffle(order.begin(), order.end());
    for (NodeId v : order) {
      a.Insert({static_cast<int>(rng.Below(2)), v});
      const double lt = EvaluateF(g, a, SpreadModel::kLtExact, Params())->mean;
      const double mia = EvaluateF(g, a, SpreadModel::kMia, Params())->mean;
      EXPECT_GE(lt, lt_prev - 1e-12);
      EXPECT_GE(mia, mia_prev - 1e-12);
      lt_prev = lt;
      mia_prev = mia;
    }
  }
}

TEST(EvaluateFTest, MonteCarloDeterministic) {
  InfluenceGraph g = testing::Diamond(0.5);
  Assignment a = Partition(1, {0, 0, 0, 0}).ToAssignment();
  auto x = EvaluateF(g, a, SpreadModel::kIcMonteCarlo, Params());
  auto y = EvaluateF(g, a, SpreadModel::kIcMonteCarlo, Params());
  ASSERT_TRUE(x.ok() && y.ok());
  EXPECT_EQ(x->mean, y->mean);
  EXPECT_GT(x->std_error, 0.0);
}

TEST(CompleteAssignmentTest, Examples) {
  InfluenceGraph path = MakeGraph(2, {{0, 1, 0.5}});
  MiaFunction f(path, MiaTheta::Default());
  Partition joined = CompleteAssignment(FromPairs(2, 2, {{0, 0}}), f);
  EXPECT_EQ(joined.community_of(), (std::vector<int>{0, 0}));
  // The same holds when a sits in community 1: b follows it.
  Partition follow = CompleteAssignment(FromPairs(2, 2, {{1, 0}}), f);
  EXPECT_EQ(follow.community_of(), (std::vector<int>{1, 1}));

  InfluenceGraph isolated = MakeGraph(1, {});
  MiaFunction g(isolated, MiaTheta::Default());
  EXPECT_EQ(CompleteAssignment(Assignment(3, 1), g).community_of(),
            (std::vector<int>{0}));

  Partition total(2, {1, 0});
  EXPECT_EQ(CompleteAssignment(total.ToAssignment(), f), total);
}

TEST(CompleteAssignmentTest, KeepsAssignedNodesAndIsTotal) {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    InfluenceGraph g = RandomSmallGraph(rng, 8, 16, false);
    MiaFunction f(g, MiaTheta::Default());
    const int n = g.node_count();
    Assignment a(3, n);
    for (NodeId v = 0; v < n; ++v) {
      if (rng.Bernoulli(0.5)) a.Insert({static_cast<int>(rng.Below(3)), v});
    }
    Partition p = CompleteAssignment(a, f);
    ASSERT_EQ(p.node_count(), n);
    for (NodeId v = 0; v < n; ++v) {
      EXPECT_GE(p.community_of(v), 0);
      EXPECT_LT(p.community_of(v), 3);
      if (a.CommunityOf(v) >= 0) EXPECT_EQ(p.community_of(v), a.CommunityOf(v));
    }
  }
}

TEST(PartitionCsvTest, RoundTripAndErrors) {
  auto g = ParseEdgeList("alpha beta\nbeta gamma\n", Weighting::kInverseInDegree);
  ASSERT_TRUE(g.ok());
  Partition p(3, {2, 0, 2});
  const std::string path = ::testing::TempDir() + "/partition.csv";
  ASSERT_TRUE(WritePartitionCsv(*g, p, path).ok());
  auto back = ReadPartitionCsv(*g, 3, path);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, p);
  EXPECT_FALSE(ReadPartitionCsv(*g, 2, path).ok());  // community 2 out of range
  EXPECT_FALSE(ReadPartitionCsv(*g, 3, path + ".missing").ok());
  std::remove(path.c_str());
}

}  // namespace
}  // namespace imcpp
