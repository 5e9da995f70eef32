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

#include "imcpp/diffusion.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "imcpp/rng.h"

namespace imcpp {
namespace {

// Mean and standard error of per-run totals.
SpreadEstimate Summarize(const std::vector<double>& run_totals) {
  SpreadEstimate est;
  est.samples = static_cast<int>(run_totals.size());
  if (run_totals.empty()) return est;
  double sum = 0.0;
  for (double t : run_totals) sum += t;
  est.mean = sum / est.samples;
  if (est.samples > 1) {
    double ss = 0.0;
    for (double t : run_totals) ss += (t - est.mean) * (t - est.mean);
    est.std_error = std::sqrt(ss / (est.samples - 1) / est.samples);
  }
  return est;
}

using Simulator = std::vector<NodeId> (*)(const InfluenceGraph&,
                                          std::span<const NodeId>, uint64_t);

std::vector<NodeId> SimulateLtUnchecked(const InfluenceGraph& graph,
                                        std::span<const NodeId> seeds,
                                        uint64_t seed) {
  const int n = graph.node_count();
  std::vector<char> active(n, 0);
  std::vector<double> weight(n, 0.0);
  std::vector<NodeId> frontier;
  for (NodeId s : seeds) {
    if (!active[s]) {
      active[s] = 1;
      frontier.push_back(s);
    }
  }
  std::vector<NodeId> result = frontier;
  // Weights only grow, so checking a node when it receives weight reaches
  // the same fixpoint as synchronous rounds.
  while (!frontier.empty()) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (int e : graph.out_edges(u)) {
        const Edge& edge = graph.edge(e);
        if (active[edge.dst]) continue;
        weight[edge.dst] += edge.prob;
        if (weight[edge.dst] >= HashUniform(seed, edge.dst)) {
          active[edge.dst] = 1;
          next.push_back(edge.dst);
        }
      }
    }
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

absl::StatusOr<SpreadEstimate> SigmaCommunity(const InfluenceGraph& community,
                                              int runs, uint64_t seed,
                                              Simulator simulate) {
  if (runs <= 0) {
    return absl::InvalidArgumentError("Monte-Carlo run count must be >= 1");
  }
  std::vector<double> totals(runs, 0.0);
  for (NodeId i = 0; i < community.node_count(); ++i) {
    const NodeId seeds[] = {i};
    for (int k = 0; k < runs; ++k) {
      uint64_t run_seed = DeriveSeed(seed, {static_cast<uint64_t>(i),
                                            static_cast<uint64_t>(k)});
      totals[k] += static_cast<double>(
          simulate(community, std::span<const NodeId>(seeds), run_seed).size() -
          1);
    }
  }
  return Summarize(totals);
}

// Number of nodes reachable from `source` (excluding it) over edges whose bit
// is set in `live`.
int CountReach(const InfluenceGraph& g, NodeId source, uint32_t live,
               std::vector<int>& stamp, int epoch, std::vector<NodeId>& stack) {
  stack.clear();
  stack.push_back(source);
  stamp[source] = epoch;
  int count = 0;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (int e : g.out_edges(u)) {
      if (!(live >> e & 1u)) continue;
      NodeId w = g.edge(e).dst;
      if (stamp[w] == epoch) continue;
      stamp[w] = epoch;
      ++count;
      stack.push_back(w);
    }
  }
  return count;
}

}  // namespace

std::vector<NodeId> SimulateIc(const InfluenceGraph& graph,
                               std::span<const NodeId> seeds, uint64_t seed) {
  const int n = graph.node_count();
  std::vector<char> active(n, 0);
  std::vector<NodeId> stack;
  for (NodeId s : seeds) {
    if (!active[s]) {
      active[s] = 1;
      stack.push_back(s);
    }
  }
  std::vector<NodeId> result = stack;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (int e : graph.out_edges(u)) {
      const Edge& edge = graph.edge(e);
      if (active[edge.dst]) continue;
      if (HashUniform(seed, static_cast<uint64_t>(e)) < edge.prob) {
        active[edge.dst] = 1;
        result.push_back(edge.dst);
        stack.push_back(edge.dst);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

absl::StatusOr<std::vector<NodeId>> SimulateLt(const InfluenceGraph& graph,
                                               std::span<const NodeId> seeds,
                                               uint64_t seed) {
  if (!graph.lt_valid()) {
    return absl::FailedPreconditionError(
        "incoming weights exceed 1; graph is not valid for the LT model");
  }
  return SimulateLtUnchecked(graph, seeds, seed);
}

absl::StatusOr<SpreadEstimate> SigmaCommunityIc(const InfluenceGraph& community,
                                                int runs, uint64_t seed) {
  return SigmaCommunity(community, runs, seed, &SimulateIc);
}

absl::StatusOr<SpreadEstimate> SigmaCommunityLt(const InfluenceGraph& community,
                                                int runs, uint64_t seed) {
  if (!community.lt_valid()) {
    return absl::FailedPreconditionError(
        "incoming weights exceed 1; graph is not valid for the LT model");
  }
  return SigmaCommunity(community, runs, seed, &SimulateLtUnchecked);
}

absl::StatusOr<std::vector<double>> ExactNodeSpreadsIc(
    const InfluenceGraph& community, int max_edges) {
  const int m = community.edge_count();
  if (m > max_edges || m > 30) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "exact IC enumeration refused: ", m, " edges exceeds cap ",
        std::min(max_edges, 30)));
  }
  const int n = community.node_count();
  std::vector<double> spread(n, 0.0);
  std::vector<int> stamp(n, 0);
  std::vector<NodeId> stack;
  int epoch = 0;
  for (uint32_t live = 0; live < (uint32_t{1} << m); ++live) {
    double weight = 1.0;
    for (int e = 0; e < m && weight > 0.0; ++e) {
      const double p = community.edge(e).prob;
      weight *= (live >> e & 1u) ? p : 1.0 - p;
    }
    if (weight == 0.0) continue;
    for (NodeId v = 0; v < n; ++v) {
      spread[v] += weight * CountReach(community, v, live, stamp, ++epoch, stack);
    }
  }
  return spread;
}

absl::StatusOr<double> ExactSigmaIc(const InfluenceGraph& community,
                                    int max_edges) {
  auto spreads = ExactNodeSpreadsIc(community, max_edges);
  if (!spreads.ok()) return spreads.status();
  double total = 0.0;
  for (double s : *spreads) total += s;
  return total;
}

absl::StatusOr<std::vector<double>> ExactNodeSpreadsLt(
    const InfluenceGraph& community, int64_t max_configurations) {
  if (!community.lt_valid()) {
    return absl::FailedPreconditionError(
        "incoming weights exceed 1; graph is not valid for the LT model");
  }
  const int n = community.node_count();
  int64_t configurations = 1;
  for (NodeId v = 0; v < n; ++v) {
    configurations *= community.in_degree(v) + 1;
    if (configurations > max_configurations) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "exact LT enumeration refused: more than ", max_configurations,
          " in-edge configurations"));
    }
  }

  // choice[v] == 0 keeps no in-edge; choice[v] == k keeps in_edges(v)[k - 1].
  std::vector<int> choice(n, 0);
  std::vector<NodeId> parent(n, -1);
  std::vector<int> stamp(n, 0);
  std::vector<double> spread(n, 0.0);
  int epoch = 0;
  for (int64_t c = 0; c < configurations; ++c) {
    double weight = 1.0;
    for (NodeId v = 0; v < n && weight > 0.0; ++v) {
      if (choice[v] == 0) {
        parent[v] = -1;
        weight *= std::max(0.0, 1.0 - community.in_weight(v));
      } else {
        const Edge& e = community.edge(community.in_edges(v)[choice[v] - 1]);
        parent[v] = e.src;
        weight *= e.prob;
      }
    }
    if (weight > 0.0) {
      // Each node l is reached by exactly the nodes on its parent chain.
      for (NodeId l = 0; l < n; ++l) {
        ++epoch;
        stamp[l] = epoch;
        for (NodeId u = parent[l]; u >= 0 && stamp[u] != epoch; u = parent[u]) {
          stamp[u] = epoch;
          spread[u] += weight;
        }
      }
    }
    for (NodeId v = 0; v < n; ++v) {
      if (++choice[v] <= community.in_degree(v)) break;
      choice[v] = 0;
    }
  }
  return spread;
}

absl::StatusOr<double> ExactSigmaLt(const InfluenceGraph& community,
                                    int64_t max_configurations) {
  auto spreads = ExactNodeSpreadsLt(community, max_configurations);
  if (!spreads.ok()) return spreads.status();
  double total = 0.0;
  for (double s : *spreads) total += s;
  return total;
}

}  // namespace imcpp
