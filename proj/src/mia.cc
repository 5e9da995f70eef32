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

#include "imcpp/mia.h"

#include <algorithm>
#include <unordered_set>

#include "absl/strings/str_cat.h"

namespace imcpp {
namespace {

// Relative tolerance under which two path probabilities count as equal.
constexpr double kTieTolerance = 1e-12;

struct HeapEntry {
  double pp;
  NodeId node;
};

// Max-heap on pp, smaller node id first among equal pp.
struct HeapOrder {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    if (a.pp != b.pp) return a.pp < b.pp;
    return a.node > b.node;
  }
};

struct Scratch {
  std::vector<int> seen;     // epoch stamp: node has a tentative value
  std::vector<int> settled;  // epoch stamp: node is final
  std::vector<double> best;
  std::vector<NodeId> next_hop;
  std::vector<double> hop_prob;
  std::vector<double> path_prob;
  std::vector<HeapEntry> heap;
  int epoch = 0;

  void Prepare(int n) {
    if (static_cast<int>(seen.size()) < n) {
      seen.assign(n, 0);
      settled.assign(n, 0);
      best.resize(n);
      next_hop.resize(n);
      hop_prob.resize(n);
      path_prob.resize(n);
      epoch = 0;
    }
    ++epoch;
    heap.clear();
  }
};

Scratch& LocalScratch() {
  thread_local Scratch scratch;
  return scratch;
}

// Max-product search towards `root` over reversed edges. Calls
// on_settle(node, next_hop, hop_prob, path_prob) in settle order; next_hop is
// -1 for the root. Only paths with pp >= `limit` (and > 0) are kept.
template <typename OnSettle>
void SearchInTree(const InfluenceGraph& graph, NodeId root, double limit,
                  Within within, OnSettle on_settle) {
  Scratch& s = LocalScratch();
  s.Prepare(graph.node_count());
  const int epoch = s.epoch;
  s.seen[root] = epoch;
  s.best[root] = 1.0;
  s.next_hop[root] = -1;
  s.heap.push_back({1.0, root});
  while (!s.heap.empty()) {
    std::pop_heap(s.heap.begin(), s.heap.end(), HeapOrder());
    const HeapEntry top = s.heap.back();
    s.heap.pop_back();
    const NodeId w = top.node;
    if (s.settled[w] == epoch) continue;
    s.settled[w] = epoch;
    const NodeId hop = s.next_hop[w];
    s.path_prob[w] = hop < 0 ? 1.0 : s.hop_prob[w] * s.path_prob[hop];
    on_settle(w, hop, hop < 0 ? 0.0 : s.hop_prob[w], s.path_prob[w]);

    for (int e : graph.in_edges(w)) {
      const Edge& edge = graph.edge(e);
      const NodeId u = edge.src;
      if (edge.prob <= 0.0 || s.settled[u] == epoch || !within(u)) continue;
      const double candidate = s.path_prob[w] * edge.prob;
      if (candidate <= 0.0 || candidate < limit) continue;
      if (s.seen[u] != epoch || candidate > s.best[u] * (1.0 + kTieTolerance)) {
        s.seen[u] = epoch;
        s.best[u] = candidate;
        s.next_hop[u] = w;
        s.hop_prob[u] = edge.prob;
        s.heap.push_back({candidate, u});
        std::push_heap(s.heap.begin(), s.heap.end(), HeapOrder());
      } else if (candidate >= s.best[u] * (1.0 - kTieTolerance) &&
                 w < s.next_hop[u]) {
        s.next_hop[u] = w;
        s.hop_prob[u] = edge.prob;
      }
    }
  }
}

// Nodes other than `source` that `source` reaches along some path with
// pp >= limit, restricted to `within`.
void ForwardReach(const InfluenceGraph& graph, NodeId source, double limit,
                  Within within, std::vector<NodeId>& out) {
  out.clear();
  Scratch& s = LocalScratch();
  s.Prepare(graph.node_count());
  const int epoch = s.epoch;
  s.seen[source] = epoch;
  s.best[source] = 1.0;
  s.heap.push_back({1.0, source});
  while (!s.heap.empty()) {
    std::pop_heap(s.heap.begin(), s.heap.end(), HeapOrder());
    const HeapEntry top = s.heap.back();
    s.heap.pop_back();
    const NodeId u = top.node;
    if (s.settled[u] == epoch) continue;
    s.settled[u] = epoch;
    if (u != source) out.push_back(u);
    for (int e : graph.out_edges(u)) {
      const Edge& edge = graph.edge(e);
      const NodeId w = edge.dst;
      if (edge.prob <= 0.0 || s.settled[w] == epoch || !within(w)) continue;
      const double candidate = s.best[u] * edge.prob;
      if (candidate <= 0.0 || candidate < limit) continue;
      if (s.seen[w] != epoch || candidate > s.best[w]) {
        s.seen[w] = epoch;
        s.best[w] = candidate;
        s.heap.push_back({candidate, w});
        std::push_heap(s.heap.begin(), s.heap.end(), HeapOrder());
      }
    }
  }
}

double PruneLimit(MiaTheta theta) {
  return theta.value() * (1.0 - kTieTolerance);
}

// Sum of pp over the non-root members of MIIA(root); equals the sum over
// those members u of ap(root, {u}) since a single seed activates the root
// only along its own tree path.
double TreeMass(const InfluenceGraph& graph, NodeId root, MiaTheta theta,
                Within within) {
  double mass = 0.0;
  SearchInTree(graph, root, PruneLimit(theta), within,
               [&](NodeId, NodeId hop, double, double pp) {
                 if (hop >= 0) mass += pp;
               });
  return mass;
}

}  // namespace

absl::StatusOr<MiaTheta> MiaTheta::Create(double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("theta must lie in (0, 1], got ", theta));
  }
  return MiaTheta(theta);
}

int Arborescence::IndexOf(NodeId v) const {
  auto it = std::find(nodes.begin(), nodes.end(), v);
  return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

absl::StatusOr<std::optional<InfluencePath>> MaxInfluencePath(
    const InfluenceGraph& graph, NodeId u, NodeId v) {
  const int n = graph.node_count();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    return absl::OutOfRangeError("path endpoint out of range");
  }
  if (u == v) {
    return absl::InvalidArgumentError(
        "influence paths connect distinct nodes");
  }
  std::vector<NodeId> next(n, -2);
  std::vector<double> hop_prob(n, 0.0);
  SearchInTree(graph, v, 0.0, Within{},
               [&](NodeId node, NodeId hop, double p, double) {
                 next[node] = hop;
                 hop_prob[node] = p;
               });
  if (next[u] == -2) return std::optional<InfluencePath>();
  InfluencePath path;
  path.pp = 1.0;
  for (NodeId x = u; x >= 0; x = next[x]) {
    path.nodes.push_back(x);
    if (next[x] >= 0) path.pp *= hop_prob[x];
  }
  return std::optional<InfluencePath>(std::move(path));
}

Arborescence BuildMiia(const InfluenceGraph& graph, NodeId root, MiaTheta theta,
                       Within within) {
  Arborescence tree;
  tree.root = root;
  std::vector<std::pair<NodeId, NodeId>> hops;
  SearchInTree(graph, root, PruneLimit(theta), within,
               [&](NodeId node, NodeId hop, double p, double pp) {
                 tree.nodes.push_back(node);
                 hops.emplace_back(node, hop);
                 tree.edge_prob.push_back(p);
                 tree.path_prob.push_back(pp);
               });
  tree.parent.assign(tree.nodes.size(), -1);
  for (size_t k = 1; k < hops.size(); ++k) {
    // Parents are settled first, so they sit earlier in `nodes`.
    const NodeId hop = hops[k].second;
    for (size_t q = 0; q < k; ++q) {
      if (tree.nodes[q] == hop) {
        tree.parent[k] = static_cast<int>(q);
        break;
      }
    }
  }
  return tree;
}

double ActivationProbability(const Arborescence& tree,
                             std::span<const NodeId> seeds) {
  if (tree.nodes.empty()) return 0.0;
  const std::unordered_set<NodeId> seed_set(seeds.begin(), seeds.end());
  const int size = tree.size();
  // not_activated[k]: product over children c of (1 - ap(c) * p(c -> k)).
  std::vector<double> not_activated(size, 1.0);
  std::vector<char> has_child(size, 0);
  for (int k = 1; k < size; ++k) has_child[tree.parent[k]] = 1;
  auto ap = [&](int k) {
    if (seed_set.contains(tree.nodes[k])) return 1.0;
    if (!has_child[k]) return 0.0;
    return 1.0 - not_activated[k];
  };
  for (int k = size - 1; k >= 1; --k) {
    not_activated[tree.parent[k]] *= 1.0 - ap(k) * tree.edge_prob[k];
  }
  return ap(0);
}

std::vector<Arborescence> BuildMiiaCache(const InfluenceGraph& graph,
                                         MiaTheta theta) {
  std::vector<Arborescence> cache;
  cache.reserve(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    cache.push_back(BuildMiia(graph, v, theta));
  }
  return cache;
}

double SigmaMNode(const InfluenceGraph& graph, NodeId i, MiaTheta,
                  std::span<const Arborescence> cache) {
  const NodeId seeds[] = {i};
  double total = 0.0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (v == i) continue;
    total += ActivationProbability(cache[v], seeds);
  }
  return total;
}

double SigmaMCommunity(const InfluenceGraph& graph, MiaTheta theta) {
  double total = 0.0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    total += TreeMass(graph, v, theta, Within{});
  }
  return total;
}

double MiaFunction::Value(const NodeSet& community) const {
  double total = 0.0;
  for (NodeId v : community.members()) {
    total += TreeMass(*graph_, v, theta_, Within{&community});
  }
  return total;
}

double MiaFunction::Gain(const NodeSet& community, NodeId v) const {
  thread_local std::vector<NodeId> targets;
  const Within with_v{&community, v};
  // A looser cut-off only adds targets whose trees come out unchanged.
  ForwardReach(*graph_, v, theta_.value() * (1.0 - 1e-9), with_v, targets);
  double gain = TreeMass(*graph_, v, theta_, with_v);
  for (NodeId t : targets) {
    gain += TreeMass(*graph_, t, theta_, with_v) -
            TreeMass(*graph_, t, theta_, Within{&community});
  }
  return gain;
}

}  // namespace imcpp
