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

#include "imcpp/graph.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "imcpp/rng.h"
#include "test_util.h"

namespace imcpp {
namespace {

using ::imcpp::testing::MakeGraph;
using ::imcpp::testing::RandomSmallGraph;

double ProbOf(const InfluenceGraph& g, const std::string& s,
              const std::string& t) {
  for (const Edge& e : g.edges()) {
    if (g.label(e.src) == s && g.label(e.dst) == t) return e.prob;
  }
  return -1.0;
}

TEST(GraphTest, CreateRejectsBadInput) {
  EXPECT_FALSE(InfluenceGraph::Create(2, {{0, 2, 0.5}}).ok());
  EXPECT_FALSE(InfluenceGraph::Create(2, {{1, 1, 0.5}}).ok());
  EXPECT_FALSE(InfluenceGraph::Create(2, {{0, 1, 0.5}, {0, 1, 0.2}}).ok());
  EXPECT_FALSE(InfluenceGraph::Create(2, {{0, 1, 1.5}}).ok());
  EXPECT_FALSE(InfluenceGraph::Create(2, {{0, 1, -0.1}}).ok());
}

TEST(GraphTest, AdjacencyAndLtFlag) {
  InfluenceGraph g = MakeGraph(3, {{0, 2, 0.7}, {1, 2, 0.6}, {0, 1, 0.2}});
  EXPECT_EQ(g.out_degree(0), 2);
  EXPECT_EQ(g.in_degree(2), 2);
  EXPECT_NEAR(g.in_weight(2), 1.3, 1e-15);
  EXPECT_FALSE(g.lt_valid());
  EXPECT_TRUE(MakeGraph(2, {{0, 1, 1.0}}).lt_valid());
}

TEST(EdgeListTest, InverseInDegreeExample) {
  auto g = ParseEdgeList("a b\nb c\na c\n", Weighting::kInverseInDegree);
  ASSERT_TRUE(g.ok()) << g.status();
  EXPECT_EQ(g->node_count(), 3);
  EXPECT_DOUBLE_EQ(ProbOf(*g, "a", "b"), 1.0);
  EXPECT_DOUBLE_EQ(ProbOf(*g, "b", "c"), 0.5);
  EXPECT_DOUBLE_EQ(ProbOf(*g, "a", "c"), 0.5);
  EXPECT_TRUE(g->lt_valid());
}

TEST(EdgeListTest, ExplicitProbability) {
  auto g = ParseEdgeList("# comment\n0 1 0.5\n", Weighting::kExplicit);
  ASSERT_TRUE(g.ok()) << g.status();
  ASSERT_EQ(g->edge_count(), 1);
  EXPECT_EQ(g->edge(0).prob, 0.5);
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  auto missing = ParseEdgeList("0 1 0.5\n1 2\n", Weighting::kExplicit);
  ASSERT_FALSE(missing.ok());
  EXPECT_NE(std::string(missing.status().message()).find("line 2"),
            std::string::npos);
  auto bad = ParseEdgeList("0 1 zz\n", Weighting::kExplicit);
  EXPECT_FALSE(bad.ok());
  auto range = ParseEdgeList("\n\n0 1 1.5\n", Weighting::kExplicit);
  ASSERT_FALSE(range.ok());
  EXPECT_NE(std::string(range.status().message()).find("line 3"),
            std::string::npos);
  EXPECT_FALSE(ParseEdgeList("0 1 0.5\n0 1 0.5\n", Weighting::kExplicit).ok());
  EXPECT_FALSE(ParseEdgeList("0 1 0.5 9\n", Weighting::kExplicit).ok());
}

TEST(EdgeListTest, SelfLoopsDroppedWithWarning) {
  std::vector<std::string> warnings;
  auto g = ParseEdgeList("a a\na b\n", Weighting::kInverseInDegree, &warnings);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->edge_count(), 1);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("line 1"), std::string::npos);
}

TEST(EdgeListTest, InverseWeightingSumsToZeroOrOne) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    InfluenceGraph g = RandomSmallGraph(rng, 8, 20, false);
    auto reloaded = ParseEdgeList(FormatEdgeList(g), Weighting::kInverseInDegree);
    ASSERT_TRUE(reloaded.ok());
    for (NodeId v = 0; v < reloaded->node_count(); ++v) {
      const double w = reloaded->in_weight(v);
      if (reloaded->in_degree(v) == 0) {
        EXPECT_EQ(w, 0.0);
      } else {
        EXPECT_NEAR(w, 1.0, 1e-12);
      }
    }
  }
}

TEST(EdgeListTest, RoundTripIsBitExact) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    InfluenceGraph g = RandomSmallGraph(rng, 8, 20, false);
    auto once = ParseEdgeList(FormatEdgeList(g), Weighting::kExplicit);
    ASSERT_TRUE(once.ok());
    auto twice = ParseEdgeList(FormatEdgeList(*once), Weighting::kExplicit);
    ASSERT_TRUE(twice.ok());
    ASSERT_EQ(once->edge_count(), twice->edge_count());
    // Ids follow first appearance in the file, so compare through labels.
    for (const Edge& e : once->edges()) {
      EXPECT_EQ(ProbOf(*twice, once->label(e.src), once->label(e.dst)), e.prob);
    }
    // Labels are node ids, so probabilities line up with the original.
    for (const Edge& e : g.edges()) {
      EXPECT_EQ(ProbOf(*once, g.label(e.src), g.label(e.dst)), e.prob);
    }
  }
}

TEST(EdgeListTest, LoadFromFileAndMissingFile) {
  const std::string path = ::testing::TempDir() + "/edges.txt";
  {
    std::ofstream out(path);
    out << "x y 0.25\ny z 1\n";
  }
  auto g = LoadEdgeList(path, Weighting::kExplicit);
  ASSERT_TRUE(g.ok()) << g.status();
  EXPECT_EQ(g->node_count(), 3);
  EXPECT_FALSE(LoadEdgeList(path + ".missing", Weighting::kExplicit).ok());
  std::remove(path.c_str());
}

TEST(InducedSubgraphTest, PathSubsetHasNoEdges) {
  InfluenceGraph g = testing::Path3(0.5);
  const std::vector<NodeId> nodes = {0, 2};
  auto sub = MakeInducedSubgraph(g, nodes);
  ASSERT_TRUE(sub.ok());
  EXPECT_EQ(sub->graph.node_count(), 2);
  EXPECT_EQ(sub->graph.edge_count(), 0);
}

TEST(InducedSubgraphTest, DiamondSubset) {
  InfluenceGraph g = testing::Diamond(0.5);
  const std::vector<NodeId> nodes = {0, 1, 3};
  auto sub = MakeInducedSubgraph(g, nodes);
  ASSERT_TRUE(sub.ok());
  ASSERT_EQ(sub->graph.edge_count(), 2);
  std::vector<std::pair<NodeId, NodeId>> parent_edges;
  for (const Edge& e : sub->graph.edges()) {
    parent_edges.emplace_back(sub->to_parent[e.src], sub->to_parent[e.dst]);
    EXPECT_EQ(e.prob, 0.5);
  }
  std::sort(parent_edges.begin(), parent_edges.end());
  EXPECT_EQ(parent_edges, (std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 3}}));
}

TEST(InducedSubgraphTest, FullSetIsIdentityAndIdempotent) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    InfluenceGraph g = RandomSmallGraph(rng, 7, 15, false);
    std::vector<NodeId> all(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
    auto sub = MakeInducedSubgraph(g, all);
    ASSERT_TRUE(sub.ok());
    EXPECT_EQ(FormatEdgeList(sub->graph), FormatEdgeList(g));

    std::vector<NodeId> some;
    for (NodeId v = 0; v < g.node_count(); v += 2) some.push_back(v);
    auto once = MakeInducedSubgraph(g, some);
    ASSERT_TRUE(once.ok());
    std::vector<NodeId> local(once->graph.node_count());
    for (NodeId v = 0; v < once->graph.node_count(); ++v) local[v] = v;
    auto twice = MakeInducedSubgraph(once->graph, local);
    ASSERT_TRUE(twice.ok());
    EXPECT_EQ(FormatEdgeList(twice->graph), FormatEdgeList(once->graph));
  }
}

TEST(InducedSubgraphTest, OutOfRangeNode) {
  InfluenceGraph g = testing::Path3(0.5);
  const std::vector<NodeId> nodes = {0, 7};
  EXPECT_FALSE(MakeInducedSubgraph(g, nodes).ok());
}

TEST(BundledCorpusTest, FirstDatasetSize) {
  auto g = LoadEdgeList(std::string(IMCPP_DATA_DIR) + "/synthetic_379.txt",
                        Weighting::kInverseInDegree);
  ASSERT_TRUE(g.ok()) << g.status();
  EXPECT_EQ(g->node_count(), 379);
  EXPECT_EQ(g->edge_count(), 914);
  EXPECT_TRUE(g->lt_valid());
  auto h = LoadEdgeList(std::string(IMCPP_DATA_DIR) + "/synthetic_914.txt",
                        Weighting::kInverseInDegree);
  ASSERT_TRUE(h.ok()) << h.status();
  EXPECT_EQ(h->node_count(), 914);
  EXPECT_EQ(h->edge_count(), 2914);
}

}  // namespace
}  // namespace imcpp
