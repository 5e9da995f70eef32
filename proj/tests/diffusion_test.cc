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

#include "imcpp/diffusion.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "imcpp/rng.h"
#include "test_util.h"

namespace imcpp {
namespace {

using ::imcpp::testing::BruteIcValue;
using ::imcpp::testing::BruteLtValue;
using ::imcpp::testing::Diamond;
using ::imcpp::testing::MakeGraph;
using ::imcpp::testing::Path3;
using ::imcpp::testing::RandomSmallGraph;

std::vector<NodeId> Seeds(std::initializer_list<NodeId> ids) { return ids; }

TEST(SimulateIcTest, DeterministicCascades) {
  InfluenceGraph g = MakeGraph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {3, 0, 1.0}});
  const auto seeds = Seeds({0});
  EXPECT_EQ(SimulateIc(g, seeds, 5), (std::vector<NodeId>{0, 1, 2}));
  InfluenceGraph zero = MakeGraph(3, {{0, 1, 0.0}, {1, 2, 0.0}});
  EXPECT_EQ(SimulateIc(zero, seeds, 5), (std::vector<NodeId>{0}));
}

TEST(SimulateIcTest, SingleEdgeFrequency) {
  InfluenceGraph g = MakeGraph(2, {{0, 1, 0.5}});
  const auto seeds = Seeds({0});
  const int runs = 100000;
  double sum = 0.0;
  for (int k = 0; k < runs; ++k) {
    sum += static_cast<double>(SimulateIc(g, seeds, DeriveSeed(9, {uint64_t(k)})).size() - 1);
  }
  const double sigma = std::sqrt(0.25 / runs);
  EXPECT_NEAR(sum / runs, 0.5, 3 * sigma);
}

TEST(SimulateIcTest, CoupledRunsAreMonotoneInSeeds) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    InfluenceGraph g = RandomSmallGraph(rng, 7, 14, false);
    const auto small = Seeds({0});
    const auto big = Seeds({0, 1});
    const uint64_t seed = rng.Below(1u << 30);
    auto a = SimulateIc(g, small, seed);
    auto b = SimulateIc(g, big, seed);
    EXPECT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST(SimulateLtTest, FullWeightAlwaysActivates) {
  InfluenceGraph g = MakeGraph(3, {{0, 2, 0.5}, {1, 2, 0.5}});
  const auto seeds = Seeds({0, 1});
  for (uint64_t s = 0; s < 200; ++s) {
    auto r = SimulateLt(g, seeds, s);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(*r, (std::vector<NodeId>{0, 1, 2}));
  }
  auto none = SimulateLt(g, {}, 1);
  ASSERT_TRUE(none.ok());
  EXPECT_TRUE(none->empty());
}

TEST(SimulateLtTest, RejectsInvalidWeights) {
  InfluenceGraph g = MakeGraph(3, {{0, 2, 0.7}, {1, 2, 0.7}});
  const auto seeds = Seeds({0});
  EXPECT_FALSE(SimulateLt(g, seeds, 1).ok());
  EXPECT_FALSE(SigmaCommunityLt(g, 10, 1).ok());
}

TEST(SimulateLtTest, DiamondFromUMatchesLiveEdgeValue) {
  InfluenceGraph g = Diamond(0.5);
  const auto seeds = Seeds({0});
  const int runs = 100000;
  double sum = 0.0, sq = 0.0;
  for (int k = 0; k < runs; ++k) {
    auto r = SimulateLt(g, seeds, DeriveSeed(4, {uint64_t(k)}));
    ASSERT_TRUE(r.ok());
    const double x = static_cast<double>(r->size() - 1);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / runs;
  const double se = std::sqrt((sq / runs - mean * mean) / runs);
  EXPECT_NEAR(mean, 1.5, 4 * se);
}

TEST(ExactSigmaTest, SpecExamples) {
  InfluenceGraph single = MakeGraph(2, {{0, 1, 0.7}});
  EXPECT_NEAR(*ExactSigmaIc(single), 0.7, 1e-15);
  EXPECT_NEAR(*ExactSigmaLt(single), 0.7, 1e-15);

  InfluenceGraph path = Path3(0.5);
  EXPECT_NEAR(*ExactSigmaIc(path), 1.25, 1e-15);
  EXPECT_NEAR(*ExactSigmaLt(path), 1.25, 1e-15);

  InfluenceGraph diamond = Diamond(0.5);
  auto ic = ExactNodeSpreadsIc(diamond);
  auto lt = ExactNodeSpreadsLt(diamond);
  ASSERT_TRUE(ic.ok() && lt.ok());
  EXPECT_NEAR((*ic)[0], 1.4375, 1e-15);
  EXPECT_NEAR((*lt)[0], 1.5, 1e-15);
  EXPECT_GT(*ExactSigmaLt(diamond), *ExactSigmaIc(diamond));
}

TEST(ExactSigmaTest, EmptyAndSingleton) {
  InfluenceGraph empty = MakeGraph(0, {});
  EXPECT_EQ(*ExactSigmaIc(empty), 0.0);
  EXPECT_EQ(*ExactSigmaLt(empty), 0.0);
  InfluenceGraph one = MakeGraph(1, {});
  EXPECT_EQ(*ExactSigmaIc(one), 0.0);
  EXPECT_EQ(SigmaCommunityIc(one, 10, 1)->mean, 0.0);
}

TEST(ExactSigmaTest, CapsRefuse) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < 21; ++v) edges.push_back({v, v + 1, 0.5});
  InfluenceGraph long_path = MakeGraph(22, edges);
  auto refused = ExactSigmaIc(long_path);
  ASSERT_FALSE(refused.ok());
  EXPECT_EQ(refused.status().code(), absl::StatusCode::kResourceExhausted);
  EXPECT_TRUE(ExactSigmaIc(long_path, 21).ok());
  EXPECT_FALSE(ExactSigmaLt(long_path, 1000).ok());
}

TEST(ExactSigmaTest, AgreesWithIndependentOracles) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    InfluenceGraph g = RandomSmallGraph(rng, 6, 10, true);
    const uint32_t all = (1u << g.node_count()) - 1;
    EXPECT_NEAR(*ExactSigmaIc(g), BruteIcValue(g, all), 1e-12);
    EXPECT_NEAR(*ExactSigmaLt(g), BruteLtValue(g, all), 1e-12);
  }
}

TEST(ExactSigmaTest, SinglePathModelsCoincide) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(6));
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, rng.Uniform()});
    InfluenceGraph g = MakeGraph(n, edges);
    EXPECT_NEAR(*ExactSigmaIc(g), *ExactSigmaLt(g), 1e-12);
  }
}

TEST(ExactSigmaTest, LtDominatesIc) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    InfluenceGraph g = RandomSmallGraph(rng, 6, 10, true);
    EXPECT_GE(*ExactSigmaLt(g), *ExactSigmaIc(g) - 1e-12);
  }
}

TEST(SigmaCommunityTest, McConsistentWithExact) {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    InfluenceGraph g = RandomSmallGraph(rng, 6, 9, true);
    auto ic = SigmaCommunityIc(g, 10000, 100 + trial);
    auto lt = SigmaCommunityLt(g, 10000, 200 + trial);
    ASSERT_TRUE(ic.ok() && lt.ok());
    EXPECT_EQ(ic->samples, 10000);
    EXPECT_LE(std::abs(ic->mean - *ExactSigmaIc(g)),
              4 * ic->std_error + 1e-12);
    EXPECT_LE(std::abs(lt->mean - *ExactSigmaLt(g)),
              4 * lt->std_error + 1e-12);
  }
}

TEST(SigmaCommunityTest, PathExample) {
  auto est = SigmaCommunityIc(Path3(0.5), 20000, 3);
  ASSERT_TRUE(est.ok());
  EXPECT_NEAR(est->mean, 1.25, 4 * est->std_error);
  auto lt = SigmaCommunityLt(Path3(0.5), 20000, 3);
  ASSERT_TRUE(lt.ok());
  EXPECT_NEAR(lt->mean, 1.25, 4 * lt->std_error);
}

TEST(SigmaCommunityTest, DeterministicAndValidated) {
  InfluenceGraph g = Diamond(0.5);
  auto a = SigmaCommunityIc(g, 300, 77);
  auto b = SigmaCommunityIc(g, 300, 77);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->mean, b->mean);
  EXPECT_EQ(a->std_error, b->std_error);
  EXPECT_FALSE(SigmaCommunityIc(g, 0, 1).ok());
  EXPECT_FALSE(SigmaCommunityLt(g, 0, 1).ok());
  EXPECT_GE(a->mean, 0.0);
  EXPECT_LE(a->mean, 4.0 * 3.0);
}

}  // namespace
}  // namespace imcpp
