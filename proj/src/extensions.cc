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

#include "imcpp/extensions.h"

#include <algorithm>
#include <cmath>

namespace imcpp {
namespace {

absl::Status ValidateSamples(int samples) {
  if (samples <= 0) {
    return absl::InvalidArgumentError("sample count must be >= 1");
  }
  return absl::OkStatus();
}

}  // namespace

std::vector<GroundPair> SortedOrder(const FractionalAssignment& x) {
  std::vector<GroundPair> order;
  order.reserve(x.cell_count());
  for (int i = 0; i < x.communities(); ++i) {
    for (NodeId j = 0; j < x.node_count(); ++j) order.push_back({i, j});
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](const GroundPair& a, const GroundPair& b) {
                     return x.at(a.community, a.node) >
                            x.at(b.community, b.node);
                   });
  return order;
}

double LovaszValue(const FractionalAssignment& x, const CommunityFunction& f) {
  const std::vector<GroundPair> order = SortedOrder(x);
  std::vector<NodeSet> prefix(x.communities(), NodeSet(x.node_count()));
  double prefix_value = 0.0;
  double total = 0.0;
  for (size_t k = 0; k < order.size(); ++k) {
    const double here = x.at(order[k].community, order[k].node);
    if (here <= 0.0) break;  // remaining terms carry zero weight
    NodeSet& set = prefix[order[k].community];
    prefix_value += f.Gain(set, order[k].node);
    set.Insert(order[k].node);
    const double next =
        k + 1 < order.size()
            ? x.at(order[k + 1].community, order[k + 1].node)
            : 0.0;
    total += (here - next) * prefix_value;
  }
  return total;
}

GradientMatrix LovaszGradient(const FractionalAssignment& x,
                              const CommunityFunction& f) {
  GradientMatrix grad(x.communities(), x.node_count(), GradientKind::kLovasz);
  std::vector<NodeSet> prefix(x.communities(), NodeSet(x.node_count()));
  for (const GroundPair& cell : SortedOrder(x)) {
    NodeSet& set = prefix[cell.community];
    grad.at(cell.community, cell.node) = f.Gain(set, cell.node);
    set.Insert(cell.node);
  }
  return grad;
}

std::vector<NodeSet> SampleCommunities(const FractionalAssignment& x,
                                       Rng& rng) {
  std::vector<NodeSet> sets(x.communities(), NodeSet(x.node_count()));
  for (NodeId j = 0; j < x.node_count(); ++j) {
    int keep = -1;
    for (int i = 0; i < x.communities(); ++i) {
      // Every cell consumes one draw so streams stay aligned across x.
      const bool drawn = rng.Bernoulli(x.at(i, j));
      if (drawn && (keep < 0 || x.at(i, j) > x.at(keep, j))) keep = i;
    }
    if (keep >= 0) sets[keep].Insert(j);
  }
  return sets;
}

absl::StatusOr<GradientMatrix> MultilinearGradient(
    const FractionalAssignment& x, const CommunityFunction& f, int samples,
    uint64_t seed) {
  if (auto status = ValidateSamples(samples); !status.ok()) return status;
  const int m = x.communities();
  const int n = x.node_count();
  GradientMatrix grad(m, n, GradientKind::kMultilinear);
  grad.samples_used = samples;
  Rng rng(seed);
  std::vector<double> gains(m);
  for (int s = 0; s < samples; ++s) {
    std::vector<NodeSet> sets = SampleCommunities(x, rng);
    for (NodeId j = 0; j < n; ++j) {
      int home = -1;
      for (int i = 0; i < m; ++i) {
        if (sets[i].contains(j)) home = i;
      }
      if (home >= 0) sets[home].Erase(j);
      // Moving j into community i also takes it out of `home`.
      const double removal = home >= 0 ? f.Gain(sets[home], j) : 0.0;
      for (int i = 0; i < m; ++i) {
        const double added = i == home ? removal : f.Gain(sets[i], j);
        grad.at(i, j) += i == home ? added : added - removal;
      }
      if (home >= 0) sets[home].Insert(j);
    }
  }
  for (double& w : grad.w) w /= samples;
  return grad;
}

absl::StatusOr<SpreadEstimate> MultilinearValueEstimate(
    const FractionalAssignment& x, const CommunityFunction& f, int samples,
    uint64_t seed) {
  if (auto status = ValidateSamples(samples); !status.ok()) return status;
  Rng rng(seed);
  std::vector<double> values(samples);
  for (int s = 0; s < samples; ++s) {
    values[s] = EvaluateCommunities(f, SampleCommunities(x, rng));
  }
  SpreadEstimate est;
  est.samples = samples;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / samples;
  if (samples > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - est.mean) * (v - est.mean);
    est.std_error = std::sqrt(ss / (samples - 1) / samples);
  }
  return est;
}

}  // namespace imcpp
