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

#include <vector>

#include "imcpp/optimizers.h"
#include "imcpp/rng.h"

namespace imcpp {
namespace {

constexpr double kSnap = 1e-12;

double Snap(double v) {
  if (v < kSnap) return 0.0;
  if (v > 1.0 - kSnap) return 1.0;
  return v;
}

bool Fractional(double v) { return v > kSnap && v < 1.0 - kSnap; }

}  // namespace

Assignment RandomizedRounding(const FractionalAssignment& x, uint64_t seed) {
  Assignment rounded(x.communities(), x.node_count());
  Rng rng(seed);
  for (NodeId j = 0; j < x.node_count(); ++j) {
    const double u = rng.Uniform();
    const bool full = x.ColumnSum(j) >= 1.0 - kSnap;
    int last_positive = -1;
    double cumulative = 0.0;
    int chosen = -1;
    for (int i = 0; i < x.communities(); ++i) {
      if (x.at(i, j) <= 0.0) continue;
      last_positive = i;
      cumulative += x.at(i, j);
      if (u < cumulative) {
        chosen = i;
        break;
      }
    }
    // A full column must always place the node, whatever the rounding error.
    if (chosen < 0 && full) chosen = last_positive;
    if (chosen >= 0) rounded.Insert({chosen, j});
  }
  return rounded;
}

Assignment PipageRounding(const FractionalAssignment& x,
                          const CommunityFunction& f,
                          const PipageConfig& config) {
  const int m = x.communities();
  const int n = x.node_count();
  const int samples = std::max(1, config.samples);
  FractionalAssignment y = x;
  Rng rng(config.seed);
  std::vector<double> value(m + 1);
  for (NodeId j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) y.at(i, j) = Snap(y.at(i, j));
    // Coordinate m is the slack "unassigned" entry.
    std::vector<int> open;
    for (int i = 0; i < m; ++i) {
      if (Fractional(y.at(i, j))) open.push_back(i);
    }
    if (open.empty()) continue;
    const double slack = 1.0 - y.ColumnSum(j);
    if (Fractional(slack)) open.push_back(m);

    // The extension is linear in column j, so its slope along any exchange
    // of mass inside the column is a difference of per-coordinate values.
    FractionalAssignment others = y;
    for (int i = 0; i < m; ++i) others.at(i, j) = 0.0;
    std::fill(value.begin(), value.end(), 0.0);
    for (int s = 0; s < samples; ++s) {
      const std::vector<NodeSet> sets = SampleCommunities(others, rng);
      for (int i : open) {
        if (i < m) value[i] += f.Gain(sets[i], j);
      }
    }

    std::vector<double> mass(m + 1);
    for (int i = 0; i < m; ++i) mass[i] = y.at(i, j);
    mass[m] = slack;
    while (open.size() >= 2) {
      const int a = open[0];
      const int b = open[1];
      const int keep = value[a] >= value[b] ? a : b;
      const int drop = keep == a ? b : a;
      mass[keep] = Snap(mass[keep] + mass[drop]);
      mass[drop] = 0.0;
      std::erase(open, drop);
      if (!Fractional(mass[keep])) std::erase(open, keep);
    }
    for (int i = 0; i < m; ++i) y.at(i, j) = mass[i];
  }
  return y.Support();
}

}  // namespace imcpp
