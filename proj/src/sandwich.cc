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

#include "absl/status/status.h"
#include "imcpp/optimizers.h"
#include "imcpp/rng.h"

namespace imcpp {

double SandwichResult::UpperRatio() const {
  if (upper_bound_of_upper <= 0.0) return 1.0;
  return upper.original_value / upper_bound_of_upper;
}

absl::StatusOr<Partition> SolveUpperBound(const CommunityFunction& upper,
                                          const CommunityFunction& lower,
                                          int communities,
                                          const SandwichConfig& config) {
  ContinuousGreedyConfig cg;
  cg.delta_t = config.delta_t;
  cg.gradient_kind = GradientKind::kLovasz;
  auto x = ContinuousGreedy(upper, communities, cg);
  if (!x.ok()) return x.status();
  return CompleteAssignment(
      RandomizedRounding(*x, DeriveSeed(config.seed, {1})), lower);
}

absl::StatusOr<Partition> SolveLowerBound(const CommunityFunction& lower,
                                          int communities,
                                          const SandwichConfig& config) {
  ContinuousGreedyConfig cg;
  cg.delta_t = config.delta_t;
  cg.gradient_kind = GradientKind::kMultilinear;
  cg.samples = config.samples;
  cg.seed = DeriveSeed(config.seed, {2});
  auto x = ContinuousGreedy(lower, communities, cg);
  if (!x.ok()) return x.status();
  const PipageConfig pipage{config.samples, DeriveSeed(config.seed, {3})};
  return CompleteAssignment(PipageRounding(*x, lower, pipage), lower);
}

absl::StatusOr<SandwichResult> Sandwich(const SandwichObjectives& objectives,
                                        int communities,
                                        const SandwichConfig& config) {
  if (objectives.original == nullptr || objectives.upper == nullptr ||
      objectives.lower == nullptr) {
    return absl::InvalidArgumentError("sandwich needs all three objectives");
  }
  const CommunityFunction& f = *objectives.original;
  const CommunityFunction& upper = *objectives.upper;
  const CommunityFunction& lower = *objectives.lower;
  SandwichResult result;

  auto upper_partition = SolveUpperBound(upper, lower, communities, config);
  if (!upper_partition.ok()) return upper_partition.status();
  result.upper.partition = *std::move(upper_partition);
  auto lower_partition = SolveLowerBound(lower, communities, config);
  if (!lower_partition.ok()) return lower_partition.status();
  result.lower.partition = *std::move(lower_partition);

  result.greedy.partition = SimpleGreedy(f, communities);

  SandwichCandidate* candidates[] = {&result.upper, &result.lower,
                                     &result.greedy};
  double best = -1.0;
  for (int k = 0; k < 3; ++k) {
    candidates[k]->original_value = Evaluate(f, candidates[k]->partition);
    if (candidates[k]->original_value > best) {
      best = candidates[k]->original_value;
      result.chosen_index = k;
    }
  }
  result.chosen = candidates[result.chosen_index]->partition;
  result.upper_bound_of_upper = Evaluate(upper, result.upper.partition);
  result.lower_bound_of_lower = Evaluate(lower, result.lower.partition);
  return result;
}

}  // namespace imcpp
