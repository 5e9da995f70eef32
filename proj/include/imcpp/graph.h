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

#ifndef IMCPP_GRAPH_H_
#define IMCPP_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace imcpp {

using NodeId = int32_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  double prob = 0.0;
};

// Directed influence graph with per-edge activation probabilities.
//
// Immutable after construction. Edges are stored sorted by (src, dst); the
// out- and in-adjacency lists hold indices into edges().
class InfluenceGraph {
 public:
  // Tolerance applied when checking that incoming LT weights sum to <= 1.
  static constexpr double kLtSlack = 1e-9;

  InfluenceGraph() = default;

  // Validates and builds a graph. Fails on out-of-range endpoints, self-loops,
  // duplicate (src, dst) pairs, and probabilities outside [0, 1]. `labels`
  // may be empty, in which case node ids are used as labels.
  static absl::StatusOr<InfluenceGraph> Create(
      int node_count, std::vector<Edge> edges,
      std::vector<std::string> labels = {});

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  std::span<const int> out_edges(NodeId v) const {
    return {out_index_.data() + out_offset_[v],
            out_index_.data() + out_offset_[v + 1]};
  }
  std::span<const int> in_edges(NodeId v) const {
    return {in_index_.data() + in_offset_[v],
            in_index_.data() + in_offset_[v + 1]};
  }
  int in_degree(NodeId v) const { return in_offset_[v + 1] - in_offset_[v]; }
  int out_degree(NodeId v) const {
    return out_offset_[v + 1] - out_offset_[v];
  }

  // Sum of incoming probabilities, used as LT weights b_uv = p_uv.
  double in_weight(NodeId v) const { return in_weight_[v]; }
  // True when every node's incoming weights sum to at most 1.
  bool lt_valid() const { return lt_valid_; }

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> out_offset_{0};
  std::vector<int> out_index_;
  std::vector<int> in_offset_{0};
  std::vector<int> in_index_;
  std::vector<double> in_weight_;
  std::vector<std::string> labels_;
  bool lt_valid_ = true;
};

enum class Weighting {
  kExplicit,         // third column carries the probability
  kInverseInDegree,  // p(u, v) = 1 / in_degree(v)
};

// Reads a whitespace-separated `src dst [prob]` edge list. Lines starting
// with '#' and blank lines are skipped. Self-loops are dropped and reported
// through `warnings` when it is non-null.
absl::StatusOr<InfluenceGraph> LoadEdgeList(
    const std::string& path, Weighting weighting,
    std::vector<std::string>* warnings = nullptr);

// Same as LoadEdgeList but parses from an in-memory buffer.
absl::StatusOr<InfluenceGraph> ParseEdgeList(
    absl::string_view text, Weighting weighting,
    std::vector<std::string>* warnings = nullptr);

// Writes `src_label dst_label prob` lines; probabilities are printed with
// enough digits to round-trip exactly.
absl::Status WriteEdgeList(const InfluenceGraph& graph,
                           const std::string& path);
std::string FormatEdgeList(const InfluenceGraph& graph);

struct InducedSubgraph {
  InfluenceGraph graph;
  // Local id -> id in the parent graph.
  std::vector<NodeId> to_parent;
};

// Keeps the listed nodes (in the given order, duplicates ignored) and every
// edge with both endpoints among them.
absl::StatusOr<InducedSubgraph> MakeInducedSubgraph(
    const InfluenceGraph& graph, std::span<const NodeId> nodes);

}  // namespace imcpp

#endif  // IMCPP_GRAPH_H_
