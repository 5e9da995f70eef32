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

#ifndef IMCPP_OPTIMIZERS_H_
#define IMCPP_OPTIMIZERS_H_

#include <cstdint>
#include <functional>

#include "absl/status/statusor.h"
#include "imcpp/community_function.h"
#include "imcpp/extensions.h"
#include "imcpp/objectives.h"

namespace imcpp {

// ---------------------------------------------------------------------------
// Continuous greedy over the partition-matroid polytope.

struct ContinuousGreedyConfig {
  double delta_t = 0.05;  // 1 / delta_t must be a positive integer
  GradientKind gradient_kind = GradientKind::kLovasz;
  int samples = kDefaultGradientSamples;  // multilinear only
  uint64_t seed = 0;
};

// Called after every step with the step index and the current point.
using StepObserver = std::function<void(int, const FractionalAssignment&)>;

// x(0) = 0; at each of 1 / delta_t steps adds delta_t on the maximum-weight
// independent set of the current gradient of the chosen extension of `f`.
absl::StatusOr<FractionalAssignment> ContinuousGreedy(
    const CommunityFunction& f, int communities,
    const ContinuousGreedyConfig& config,
    const StepObserver& observer = nullptr);

// Exact for the partition matroid: each node takes its best community when
// that weight is positive, lowest community on ties.
Assignment MaxWeightIndependentSet(const GradientMatrix& w);

// ---------------------------------------------------------------------------
// Rounding

// Node j joins community i with probability x_ij and stays unassigned with
// probability 1 - sum_i x_ij, independently across nodes.
Assignment RandomizedRounding(const FractionalAssignment& x, uint64_t seed);

struct PipageConfig {
  int samples = kDefaultGradientSamples;
  uint64_t seed = 0;
};

// Pipage rounding against the multilinear extension of `f`. Nodes are
// rounded in id order; within a column, mass moves between two fractional
// coordinates (or one coordinate and the unassigned slack) towards the one
// with the larger estimated extension value until one of them is integral.
Assignment PipageRounding(const FractionalAssignment& x,
                          const CommunityFunction& f,
                          const PipageConfig& config);

// ---------------------------------------------------------------------------
// Combinatorial solvers and baselines. All return total partitions.

// Repeatedly adds the feasible (community, node) pair with the largest gain
// until every node is assigned; ties go to the lexicographically smallest
// pair.
Partition SimpleGreedy(const CommunityFunction& f, int communities);

Partition RandomPartition(int node_count, int communities, uint64_t seed);

// Split heuristic: starts from one community and performs communities - 1
// bisections, each time splitting the community whose best bisection gives
// the largest total. A bisection starts from a random split and makes one
// local-move sweep.
Partition Samkcp(const CommunityFunction& f, int communities, uint64_t seed);

// Merge heuristic: starts from singletons and merges the pair with the
// largest gain until `communities` remain. Requires communities <= nodes.
// Communities with no edge between them merge at gain zero, so only
// adjacent pairs are scored; `graph` supplies the adjacency.
absl::StatusOr<Partition> Mamkcp(const InfluenceGraph& graph,
                                 const CommunityFunction& f, int communities);

// ---------------------------------------------------------------------------
// Sandwich framework

struct SandwichObjectives {
  const CommunityFunction* original = nullptr;  // IC spread
  const CommunityFunction* upper = nullptr;     // LT spread
  const CommunityFunction* lower = nullptr;     // MIA spread
};

struct SandwichConfig {
  double delta_t = 0.05;
  int samples = kDefaultGradientSamples;
  uint64_t seed = 0;
};

struct SandwichCandidate {
  Partition partition;
  double original_value = 0.0;
};

struct SandwichResult {
  Partition chosen;
  int chosen_index = 0;  // 0 = upper, 1 = lower, 2 = greedy
  SandwichCandidate upper, lower, greedy;
  double upper_bound_of_upper = 0.0;  // upper(S_U)
  double lower_bound_of_lower = 0.0;  // lower(S_L)

  // f(S_U) / upper(S_U); 1 when upper(S_U) is zero.
  double UpperRatio() const;
};

// The two bound branches of the sandwich. Unassigned nodes left by rounding
// are placed with CompleteAssignment against `lower`.
// Upper: continuous greedy on the Lovasz extension + randomized rounding.
absl::StatusOr<Partition> SolveUpperBound(const CommunityFunction& upper,
                                          const CommunityFunction& lower,
                                          int communities,
                                          const SandwichConfig& config);
// Lower: continuous greedy on the multilinear extension + pipage rounding.
absl::StatusOr<Partition> SolveLowerBound(const CommunityFunction& lower,
                                          int communities,
                                          const SandwichConfig& config);

absl::StatusOr<SandwichResult> Sandwich(const SandwichObjectives& objectives,
                                        int communities,
                                        const SandwichConfig& config);

}  // namespace imcpp

#endif  // IMCPP_OPTIMIZERS_H_
