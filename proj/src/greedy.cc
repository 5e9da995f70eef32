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

#include <limits>
#include <vector>

#include "imcpp/optimizers.h"

namespace imcpp {

Partition SimpleGreedy(const CommunityFunction& f, int communities) {
  const int n = f.node_count();
  std::vector<NodeSet> sets(communities, NodeSet(n));
  std::vector<int> community_of(n, -1);
  // gain[k][j] stays valid until community k changes, because the objective
  // is a sum of independent per-community terms.
  std::vector<std::vector<double>> gain(communities, std::vector<double>(n));
  for (int k = 0; k < communities; ++k) {
    for (NodeId j = 0; j < n; ++j) gain[k][j] = f.Gain(sets[k], j);
  }
  for (int placed = 0; placed < n; ++placed) {
    int best_k = -1;
    NodeId best_j = -1;
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < communities; ++k) {
      for (NodeId j = 0; j < n; ++j) {
        if (community_of[j] < 0 && gain[k][j] > best) {
          best = gain[k][j];
          best_k = k;
          best_j = j;
        }
      }
    }
    community_of[best_j] = best_k;
    sets[best_k].Insert(best_j);
    for (NodeId j = 0; j < n; ++j) {
      if (community_of[j] < 0) gain[best_k][j] = f.Gain(sets[best_k], j);
    }
  }
  return Partition(communities, std::move(community_of));
}

}  // namespace imcpp
