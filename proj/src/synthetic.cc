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

#include "imcpp/synthetic.h"

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "imcpp/rng.h"

namespace imcpp {

absl::StatusOr<InfluenceGraph> GenerateSynthetic(const SyntheticSpec& spec) {
  const int n = spec.nodes;
  if (n < 2 || spec.blocks < 1 || 2 * spec.blocks > n) {
    return absl::InvalidArgumentError(
        "need nodes >= 2 and 1 <= blocks <= nodes / 2");
  }
  if (spec.edges < n ||
      static_cast<int64_t>(spec.edges) > static_cast<int64_t>(n) * (n - 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge count ", spec.edges, " is out of range for ", n,
                     " nodes"));
  }
  if (!(spec.intra_fraction >= 0.0 && spec.intra_fraction <= 1.0)) {
    return absl::InvalidArgumentError("intra_fraction must lie in [0, 1]");
  }
  Rng rng(spec.seed);
  auto block_begin = [&](int b) {
    return static_cast<int>(static_cast<int64_t>(b) * n / spec.blocks);
  };
  std::set<std::pair<NodeId, NodeId>> arcs;
  std::vector<int> degree(n, 0);
  auto pick_target = [&](NodeId src) {
    while (true) {
      NodeId dst;
      if (rng.Bernoulli(spec.intra_fraction)) {
        int b = 0;
        while (b + 1 < spec.blocks && block_begin(b + 1) <= src) ++b;
        const int lo = block_begin(b);
        const int hi = b + 1 < spec.blocks ? block_begin(b + 1) : n;
        if (hi - lo < 2) continue;
        dst = lo + static_cast<NodeId>(rng.Below(hi - lo));
      } else {
        dst = static_cast<NodeId>(rng.Below(n));
      }
      if (dst != src && !arcs.contains({src, dst})) return dst;
    }
  };
  // Cover every node once, then fill up to the requested edge count.
  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  rng.Shuffle(order.begin(), order.end());
  for (NodeId v : order) {
    while (degree[v] == 0) {
      const NodeId w = pick_target(v);
      const auto arc =
          rng.Bernoulli(0.5) ? std::make_pair(v, w) : std::make_pair(w, v);
      if (!arcs.insert(arc).second) continue;
      ++degree[v];
      ++degree[w];
    }
  }
  while (static_cast<int>(arcs.size()) < spec.edges) {
    const NodeId src = static_cast<NodeId>(rng.Below(n));
    arcs.insert({src, pick_target(src)});
  }

  std::vector<int> in_degree(n, 0);
  for (const auto& [s, t] : arcs) ++in_degree[t];
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (const auto& [s, t] : arcs) {
    edges.push_back({s, t, 1.0 / in_degree[t]});
  }
  std::vector<std::string> labels(n);
  for (NodeId v = 0; v < n; ++v) labels[v] = absl::StrCat("n", v);
  return InfluenceGraph::Create(n, std::move(edges), std::move(labels));
}

}  // namespace imcpp
