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

#ifndef IMCPP_MIA_H_
#define IMCPP_MIA_H_

#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "imcpp/community_function.h"
#include "imcpp/graph.h"

namespace imcpp {

// Path-probability threshold for arborescence pruning; must lie in (0, 1].
class MiaTheta {
 public:
  static absl::StatusOr<MiaTheta> Create(double theta);
  static MiaTheta Default() { return MiaTheta(0.1); }
  double value() const { return value_; }

 private:
  explicit MiaTheta(double value) : value_(value) {}
  double value_;
};

struct InfluencePath {
  std::vector<NodeId> nodes;
  double pp = 0.0;  // product of edge probabilities along `nodes`
};

// In-tree of maximum influence paths into `root`. Entries are in the order
// the search settled them (root first), so every parent precedes its
// children.
struct Arborescence {
  NodeId root = -1;
  std::vector<NodeId> nodes;
  std::vector<int> parent;          // index into `nodes`; -1 for the root
  std::vector<double> edge_prob;    // p(nodes[k] -> nodes[parent[k]])
  std::vector<double> path_prob;    // pp of the tree path nodes[k] -> root

  int size() const { return static_cast<int>(nodes.size()); }
  // Index of `v` in `nodes`, or -1.
  int IndexOf(NodeId v) const;
};

// Highest-pp path from u to v. Ties between equally probable paths are broken
// towards the smallest next hop, consistently with BuildMiia. Returns nullopt
// when v is unreachable; u == v is an error.
absl::StatusOr<std::optional<InfluencePath>> MaxInfluencePath(
    const InfluenceGraph& graph, NodeId u, NodeId v);

// Union of the maximum influence paths into `root` with pp >= theta, limited
// to nodes admitted by `within`. Edges with p = 0 are never used.
Arborescence BuildMiia(const InfluenceGraph& graph, NodeId root, MiaTheta theta,
                       Within within = {});

// Bottom-up noisy-or recursion over the tree: seeds have ap = 1, non-seed
// leaves 0. Returns ap(root).
double ActivationProbability(const Arborescence& tree,
                             std::span<const NodeId> seeds);

// Arborescence of every node of `graph`, indexed by node id.
std::vector<Arborescence> BuildMiiaCache(const InfluenceGraph& graph,
                                         MiaTheta theta);

// Sum over v != i of ap(v, {i}, MIIA(v)); `cache` must come from
// BuildMiiaCache on the same graph.
double SigmaMNode(const InfluenceGraph& graph, NodeId i, MiaTheta theta,
                  std::span<const Arborescence> cache);

// Sum of SigmaMNode over all nodes of `graph` (one community).
double SigmaMCommunity(const InfluenceGraph& graph, MiaTheta theta);

// The MIA spread as a community function on a fixed parent graph; a
// community is evaluated on its induced subgraph without materializing it.
class MiaFunction : public CommunityFunction {
 public:
  MiaFunction(const InfluenceGraph& graph, MiaTheta theta)
      : graph_(&graph), theta_(theta) {}

  int node_count() const override { return graph_->node_count(); }
  double Value(const NodeSet& community) const override;
  // Only targets that `v` reaches with pp >= theta change their in-tree, so
  // the gain re-evaluates just those.
  double Gain(const NodeSet& community, NodeId v) const override;

  MiaTheta theta() const { return theta_; }

 private:
  const InfluenceGraph* graph_;
  MiaTheta theta_;
};

}  // namespace imcpp

#endif  // IMCPP_MIA_H_
