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

#ifndef IMCPP_LIVE_EDGE_H_
#define IMCPP_LIVE_EDGE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "imcpp/community_function.h"
#include "imcpp/diffusion.h"
#include "imcpp/graph.h"

namespace imcpp {

// Community functions used by the optimizers.
//
// The Monte-Carlo variants draw `runs` live-edge realizations of the whole
// graph once, at construction. Restricting a realization to a community's
// induced subgraph yields a realization of that subgraph with the right
// distribution, so every community, candidate and method is scored on the
// same samples (common random numbers) and the function is deterministic.

// IC: every edge is live independently with its probability; sigma(S) counts
// ordered pairs (i, l) of S with l reachable from i over live edges inside S.
class IcLiveEdgeFunction : public CommunityFunction {
 public:
  static absl::StatusOr<IcLiveEdgeFunction> Create(const InfluenceGraph& graph,
                                                   int runs, uint64_t seed);

  int node_count() const override { return graph_->node_count(); }
  int runs() const { return runs_; }
  double Value(const NodeSet& community) const override;
  double Gain(const NodeSet& community, NodeId v) const override;

  // Mean and standard error over realizations of the summed community
  // values.
  SpreadEstimate Estimate(const std::vector<NodeSet>& communities) const;

 private:
  IcLiveEdgeFunction() = default;
  int64_t RealizationValue(int run, const NodeSet& community) const;
  int64_t RealizationGain(int run, const NodeSet& community, NodeId v) const;

  const InfluenceGraph* graph_ = nullptr;
  int runs_ = 0;
  int n_ = 0;
  // Live adjacency per realization, CSR with offsets of size n + 1.
  std::vector<std::vector<int>> out_offset_, out_target_;
  std::vector<std::vector<int>> in_offset_, in_source_;
};

// LT: every node keeps at most one incoming edge, (u, v) with probability
// b_uv; sigma(S) counts, for each l in S, the distinct nodes on l's chain of
// kept edges inside S.
class LtLiveEdgeFunction : public CommunityFunction {
 public:
  // Fails unless graph.lt_valid().
  static absl::StatusOr<LtLiveEdgeFunction> Create(const InfluenceGraph& graph,
                                                   int runs, uint64_t seed);

  int node_count() const override { return n_; }
  int runs() const { return runs_; }
  double Value(const NodeSet& community) const override;
  double Gain(const NodeSet& community, NodeId v) const override;
  SpreadEstimate Estimate(const std::vector<NodeSet>& communities) const;

 private:
  LtLiveEdgeFunction() = default;
  int64_t RealizationValue(int run, const NodeSet& community) const;
  int64_t RealizationGain(int run, const NodeSet& community, NodeId v) const;

  int runs_ = 0;
  int n_ = 0;
  std::vector<std::vector<NodeId>> parent_;  // -1 when no edge is kept
  std::vector<std::vector<int>> child_offset_, children_;
};

// Exact evaluation by enumeration on the induced subgraph. Create() checks
// the whole graph against the cap, so every community fits.
class ExactIcFunction : public CommunityFunction {
 public:
  static absl::StatusOr<ExactIcFunction> Create(
      const InfluenceGraph& graph, int max_edges = kDefaultExactEdgeCap);
  int node_count() const override { return graph_->node_count(); }
  double Value(const NodeSet& community) const override;

 private:
  explicit ExactIcFunction(const InfluenceGraph& graph) : graph_(&graph) {}
  const InfluenceGraph* graph_;
};

class ExactLtFunction : public CommunityFunction {
 public:
  static absl::StatusOr<ExactLtFunction> Create(
      const InfluenceGraph& graph,
      int64_t max_configurations = kDefaultExactLtConfigCap);
  int node_count() const override { return graph_->node_count(); }
  double Value(const NodeSet& community) const override;

 private:
  ExactLtFunction(const InfluenceGraph& graph, int64_t max_configurations)
      : graph_(&graph), max_configurations_(max_configurations) {}
  const InfluenceGraph* graph_;
  int64_t max_configurations_;
};

}  // namespace imcpp

#endif  // IMCPP_LIVE_EDGE_H_
