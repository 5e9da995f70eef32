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

#ifndef IMCPP_EXTENSIONS_H_
#define IMCPP_EXTENSIONS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "imcpp/community_function.h"
#include "imcpp/diffusion.h"
#include "imcpp/objectives.h"
#include "imcpp/rng.h"

namespace imcpp {

enum class GradientKind { kLovasz, kMultilinear };

inline constexpr int kDefaultGradientSamples = 100;

struct GradientMatrix {
  GradientMatrix() = default;
  GradientMatrix(int communities, int node_count, GradientKind kind)
      : communities(communities),
        node_count(node_count),
        provenance(kind),
        w(static_cast<size_t>(communities) * node_count, 0.0) {}

  double& at(int community, NodeId node) {
    return w[static_cast<size_t>(community) * node_count + node];
  }
  double at(int community, NodeId node) const {
    return w[static_cast<size_t>(community) * node_count + node];
  }

  int communities = 0;
  int node_count = 0;
  GradientKind provenance = GradientKind::kLovasz;
  int samples_used = 0;
  std::vector<double> w;
};

// Cells of x by non-increasing value; equal values keep (community, node)
// order.
std::vector<GroundPair> SortedOrder(const FractionalAssignment& x);

// Lovasz extension: sum_k (x'_k - x'_{k+1}) f(S_k) with S_k the first k
// cells of SortedOrder(x) and x'_{N+1} = 0. The prefix sets are arbitrary
// subsets of the ground set, so a node may sit in several communities.
double LovaszValue(const FractionalAssignment& x, const CommunityFunction& f);

// Partial derivatives of the Lovasz extension: the cell at position k of
// the sorted order gets f(S_k) - f(S_{k-1}).
GradientMatrix LovaszGradient(const FractionalAssignment& x,
                              const CommunityFunction& f);

// Draws a random assignment: each cell is included independently with
// probability x, then a node drawn into several communities keeps the one
// with the largest x (lowest community on ties).
std::vector<NodeSet> SampleCommunities(const FractionalAssignment& x, Rng& rng);

// Monte-Carlo multilinear gradient. For each cell (i, j) and each of
// `samples` random sets R (shared across cells, with (i, j) itself left
// out): f(R with j moved to community i) - f(R).
absl::StatusOr<GradientMatrix> MultilinearGradient(
    const FractionalAssignment& x, const CommunityFunction& f, int samples,
    uint64_t seed);

// E[f(R)] over `samples` sets drawn by SampleCommunities.
absl::StatusOr<SpreadEstimate> MultilinearValueEstimate(
    const FractionalAssignment& x, const CommunityFunction& f, int samples,
    uint64_t seed);

}  // namespace imcpp

#endif  // IMCPP_EXTENSIONS_H_
