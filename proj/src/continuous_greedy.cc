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

#include <cmath>

#include "absl/strings/str_cat.h"
#include "imcpp/optimizers.h"
#include "imcpp/rng.h"

namespace imcpp {

Assignment MaxWeightIndependentSet(const GradientMatrix& w) {
  Assignment chosen(w.communities, w.node_count);
  for (NodeId j = 0; j < w.node_count; ++j) {
    int best = -1;
    double best_weight = 0.0;
    for (int i = 0; i < w.communities; ++i) {
      if (w.at(i, j) > best_weight) {
        best_weight = w.at(i, j);
        best = i;
      }
    }
    if (best >= 0) chosen.Insert({best, j});
  }
  return chosen;
}

absl::StatusOr<FractionalAssignment> ContinuousGreedy(
    const CommunityFunction& f, int communities,
    const ContinuousGreedyConfig& config, const StepObserver& observer) {
  if (communities < 1) {
    return absl::InvalidArgumentError("need at least one community");
  }
  if (!(config.delta_t > 0.0 && config.delta_t <= 1.0)) {
    return absl::InvalidArgumentError("delta_t must lie in (0, 1]");
  }
  const double inverse = 1.0 / config.delta_t;
  const long steps = std::lround(inverse);
  if (std::abs(inverse - static_cast<double>(steps)) > 1e-9 * inverse) {
    return absl::InvalidArgumentError(
        absl::StrCat("1 / delta_t must be an integer, got ", inverse));
  }

  const int n = f.node_count();
  // Entries are tracked as step counts so x stays on the delta_t grid.
  std::vector<int> count(static_cast<size_t>(communities) * n, 0);
  FractionalAssignment x(communities, n);
  for (long step = 0; step < steps; ++step) {
    GradientMatrix w;
    if (config.gradient_kind == GradientKind::kLovasz) {
      w = LovaszGradient(x, f);
    } else {
      auto grad = MultilinearGradient(
          x, f, config.samples,
          DeriveSeed(config.seed, {static_cast<uint64_t>(step)}));
      if (!grad.ok()) return grad.status();
      w = *std::move(grad);
    }
    const Assignment direction = MaxWeightIndependentSet(w);
    for (const GroundPair& p : direction.pairs()) {
      const size_t cell = static_cast<size_t>(p.community) * n + p.node;
      ++count[cell];
      x.at(p.community, p.node) =
          static_cast<double>(count[cell]) / static_cast<double>(steps);
    }
    if (observer) observer(static_cast<int>(step), x);
  }
  return x;
}

}  // namespace imcpp
