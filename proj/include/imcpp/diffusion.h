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

#ifndef IMCPP_DIFFUSION_H_
#define IMCPP_DIFFUSION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "imcpp/graph.h"

namespace imcpp {

// Expected number of non-seed activations. `std_error` is zero for exact
// enumeration.
struct SpreadEstimate {
  double mean = 0.0;
  int samples = 0;
  double std_error = 0.0;
};

// Default Monte-Carlo run count.
inline constexpr int kDefaultMcRuns = 500;

// One independent-cascade realization. Edge coins are keyed by (seed, edge)
// so two calls with the same seed see the same live edges; the result is the
// sorted set of nodes reachable from `seeds` over live edges.
std::vector<NodeId> SimulateIc(const InfluenceGraph& graph,
                               std::span<const NodeId> seeds, uint64_t seed);

// One linear-threshold realization with thresholds drawn uniformly in [0, 1]
// (keyed by (seed, node)). Requires graph.lt_valid().
absl::StatusOr<std::vector<NodeId>> SimulateLt(const InfluenceGraph& graph,
                                               std::span<const NodeId> seeds,
                                               uint64_t seed);

// Sum over every node i of the community of its single-seed spread, each
// averaged over `runs` simulations with per-(node, run) derived seeds.
absl::StatusOr<SpreadEstimate> SigmaCommunityIc(const InfluenceGraph& community,
                                                int runs, uint64_t seed);
absl::StatusOr<SpreadEstimate> SigmaCommunityLt(const InfluenceGraph& community,
                                                int runs, uint64_t seed);

inline constexpr int kDefaultExactEdgeCap = 20;
inline constexpr int64_t kDefaultExactLtConfigCap = int64_t{1} << 22;

// Exact per-node single-seed IC spread by enumerating all 2^|E| live-edge
// subgraphs. Refuses graphs with more than `max_edges` edges.
absl::StatusOr<std::vector<double>> ExactNodeSpreadsIc(
    const InfluenceGraph& community, int max_edges = kDefaultExactEdgeCap);
absl::StatusOr<double> ExactSigmaIc(const InfluenceGraph& community,
                                    int max_edges = kDefaultExactEdgeCap);

// Exact per-node LT spread via the live-edge equivalence: every node keeps at
// most one incoming edge, edge (u, v) with probability b_uv. Refuses when the
// product over nodes of (in_degree + 1) exceeds `max_configurations`.
absl::StatusOr<std::vector<double>> ExactNodeSpreadsLt(
    const InfluenceGraph& community,
    int64_t max_configurations = kDefaultExactLtConfigCap);
absl::StatusOr<double> ExactSigmaLt(
    const InfluenceGraph& community,
    int64_t max_configurations = kDefaultExactLtConfigCap);

}  // namespace imcpp

#endif  // IMCPP_DIFFUSION_H_
