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

#include "imcpp/live_edge.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "imcpp/rng.h"

namespace imcpp {
namespace {

// Epoch-stamped marks so per-call bookkeeping never needs clearing.
struct Marks {
  std::vector<int> stamp;
  int epoch = 0;

  void Prepare(int n) {
    if (static_cast<int>(stamp.size()) < n) {
      stamp.assign(n, 0);
      epoch = 0;
    }
  }
  int Next() { return ++epoch; }
};

struct IcScratch {
  Marks visit, in_desc;
  std::vector<NodeId> stack, anc, desc;
};

IcScratch& LocalIcScratch() {
  thread_local IcScratch scratch;
  return scratch;
}

struct LtScratch {
  Marks visit, upstream;
  std::vector<NodeId> queue;
  std::vector<int> inter;
};

LtScratch& LocalLtScratch() {
  thread_local LtScratch scratch;
  return scratch;
}

void BuildCsr(int n, const std::vector<std::pair<int, int>>& arcs,
              std::vector<int>& offset, std::vector<int>& target) {
  offset.assign(n + 1, 0);
  for (const auto& [from, to] : arcs) ++offset[from + 1];
  for (int v = 0; v < n; ++v) offset[v + 1] += offset[v];
  target.resize(arcs.size());
  std::vector<int> fill(offset.begin(), offset.end() - 1);
  for (const auto& [from, to] : arcs) target[fill[from]++] = to;
}

SpreadEstimate SummarizeTotals(const std::vector<int64_t>& totals) {
  SpreadEstimate est;
  est.samples = static_cast<int>(totals.size());
  if (totals.empty()) return est;
  double sum = 0.0;
  for (int64_t t : totals) sum += static_cast<double>(t);
  est.mean = sum / est.samples;
  if (est.samples > 1) {
    double ss = 0.0;
    for (int64_t t : totals) {
      const double d = static_cast<double>(t) - est.mean;
      ss += d * d;
    }
    est.std_error = std::sqrt(ss / (est.samples - 1) / est.samples);
  }
  return est;
}

absl::Status ValidateRuns(int runs) {
  if (runs <= 0) {
    return absl::InvalidArgumentError("Monte-Carlo run count must be >= 1");
  }
  return absl::OkStatus();
}

}  // namespace

// ---------------------------------------------------------------------------
// IC

absl::StatusOr<IcLiveEdgeFunction> IcLiveEdgeFunction::Create(
    const InfluenceGraph& graph, int runs, uint64_t seed) {
  if (auto status = ValidateRuns(runs); !status.ok()) return status;
  IcLiveEdgeFunction f;
  f.graph_ = &graph;
  f.runs_ = runs;
  f.n_ = graph.node_count();
  f.out_offset_.resize(runs);
  f.out_target_.resize(runs);
  f.in_offset_.resize(runs);
  f.in_source_.resize(runs);
  std::vector<std::pair<int, int>> forward, backward;
  for (int k = 0; k < runs; ++k) {
    const uint64_t run_seed = DeriveSeed(seed, {static_cast<uint64_t>(k)});
    forward.clear();
    backward.clear();
    for (int e = 0; e < graph.edge_count(); ++e) {
      const Edge& edge = graph.edge(e);
      if (HashUniform(run_seed, static_cast<uint64_t>(e)) < edge.prob) {
        forward.emplace_back(edge.src, edge.dst);
        backward.emplace_back(edge.dst, edge.src);
      }
    }
    BuildCsr(f.n_, forward, f.out_offset_[k], f.out_target_[k]);
    BuildCsr(f.n_, backward, f.in_offset_[k], f.in_source_[k]);
  }
  return f;
}

int64_t IcLiveEdgeFunction::RealizationValue(int run,
                                             const NodeSet& community) const {
  IcScratch& s = LocalIcScratch();
  s.visit.Prepare(n_);
  const std::vector<int>& offset = out_offset_[run];
  const std::vector<int>& target = out_target_[run];
  int64_t total = 0;
  for (NodeId source : community.members()) {
    const int epoch = s.visit.Next();
    s.visit.stamp[source] = epoch;
    s.stack.assign(1, source);
    while (!s.stack.empty()) {
      const NodeId u = s.stack.back();
      s.stack.pop_back();
      for (int a = offset[u]; a < offset[u + 1]; ++a) {
        const NodeId w = target[a];
        if (s.visit.stamp[w] == epoch || !community.contains(w)) continue;
        s.visit.stamp[w] = epoch;
        ++total;
        s.stack.push_back(w);
      }
    }
  }
  return total;
}

int64_t IcLiveEdgeFunction::RealizationGain(int run, const NodeSet& community,
                                            NodeId v) const {
  IcScratch& s = LocalIcScratch();
  s.visit.Prepare(n_);
  s.in_desc.Prepare(n_);
  const std::vector<int>& out_offset = out_offset_[run];
  const std::vector<int>& out_target = out_target_[run];
  const std::vector<int>& in_offset = in_offset_[run];
  const std::vector<int>& in_source = in_source_[run];

  // Everything newly reachable runs through v: the new pairs are (i, l) with
  // i in {v} + ancestors(v) and l in {v} + descendants(v), minus pairs i
  // already reached inside S.
  auto collect = [&](const std::vector<int>& offset,
                     const std::vector<int>& adj, std::vector<NodeId>& out) {
    const int epoch = s.visit.Next();
    s.visit.stamp[v] = epoch;
    out.clear();
    s.stack.assign(1, v);
    while (!s.stack.empty()) {
      const NodeId u = s.stack.back();
      s.stack.pop_back();
      for (int a = offset[u]; a < offset[u + 1]; ++a) {
        const NodeId w = adj[a];
        if (s.visit.stamp[w] == epoch || !community.contains(w)) continue;
        s.visit.stamp[w] = epoch;
        out.push_back(w);
        s.stack.push_back(w);
      }
    }
  };
  collect(out_offset, out_target, s.desc);
  collect(in_offset, in_source, s.anc);
  if (s.anc.empty()) return static_cast<int64_t>(s.desc.size());

  const int desc_mark = s.in_desc.Next();
  s.in_desc.stamp[v] = desc_mark;
  for (NodeId l : s.desc) s.in_desc.stamp[l] = desc_mark;
  const int64_t targets = static_cast<int64_t>(s.desc.size()) + 1;

  int64_t gain = static_cast<int64_t>(s.desc.size());
  std::vector<NodeId> anc = s.anc;  // `stack` is reused below
  for (NodeId i : anc) {
    int64_t covered = s.in_desc.stamp[i] == desc_mark ? 1 : 0;
    const int epoch = s.visit.Next();
    s.visit.stamp[i] = epoch;
    s.stack.assign(1, i);
    while (!s.stack.empty()) {
      const NodeId u = s.stack.back();
      s.stack.pop_back();
      for (int a = out_offset[u]; a < out_offset[u + 1]; ++a) {
        const NodeId w = out_target[a];
        if (w == v || s.visit.stamp[w] == epoch || !community.contains(w)) {
          continue;
        }
        s.visit.stamp[w] = epoch;
        if (s.in_desc.stamp[w] == desc_mark) ++covered;
        s.stack.push_back(w);
      }
    }
    gain += targets - covered;
  }
  return gain;
}

double IcLiveEdgeFunction::Value(const NodeSet& community) const {
  if (community.size() < 2) return 0.0;
  int64_t total = 0;
  for (int k = 0; k < runs_; ++k) total += RealizationValue(k, community);
  return static_cast<double>(total) / runs_;
}

double IcLiveEdgeFunction::Gain(const NodeSet& community, NodeId v) const {
  if (community.empty()) return 0.0;
  int64_t total = 0;
  for (int k = 0; k < runs_; ++k) total += RealizationGain(k, community, v);
  return static_cast<double>(total) / runs_;
}

SpreadEstimate IcLiveEdgeFunction::Estimate(
    const std::vector<NodeSet>& communities) const {
  std::vector<int64_t> totals(runs_, 0);
  for (const NodeSet& s : communities) {
    if (s.size() < 2) continue;
    for (int k = 0; k < runs_; ++k) totals[k] += RealizationValue(k, s);
  }
  return SummarizeTotals(totals);
}

// ---------------------------------------------------------------------------
// LT

absl::StatusOr<LtLiveEdgeFunction> LtLiveEdgeFunction::Create(
    const InfluenceGraph& graph, int runs, uint64_t seed) {
  if (auto status = ValidateRuns(runs); !status.ok()) return status;
  if (!graph.lt_valid()) {
    return absl::FailedPreconditionError(
        "incoming weights exceed 1; graph is not valid for the LT model");
  }
  LtLiveEdgeFunction f;
  f.runs_ = runs;
  f.n_ = graph.node_count();
  f.parent_.resize(runs);
  f.child_offset_.resize(runs);
  f.children_.resize(runs);
  std::vector<std::pair<int, int>> arcs;
  for (int k = 0; k < runs; ++k) {
    const uint64_t run_seed = DeriveSeed(seed, {static_cast<uint64_t>(k)});
    std::vector<NodeId>& parent = f.parent_[k];
    parent.assign(f.n_, -1);
    arcs.clear();
    for (NodeId v = 0; v < f.n_; ++v) {
      const double u = HashUniform(run_seed, static_cast<uint64_t>(v));
      double cumulative = 0.0;
      for (int e : graph.in_edges(v)) {
        cumulative += graph.edge(e).prob;
        if (u < cumulative) {
          parent[v] = graph.edge(e).src;
          arcs.emplace_back(parent[v], v);
          break;
        }
      }
    }
    BuildCsr(f.n_, arcs, f.child_offset_[k], f.children_[k]);
  }
  return f;
}

int64_t LtLiveEdgeFunction::RealizationValue(int run,
                                             const NodeSet& community) const {
  LtScratch& s = LocalLtScratch();
  s.visit.Prepare(n_);
  const std::vector<NodeId>& parent = parent_[run];
  int64_t total = 0;
  for (NodeId l : community.members()) {
    const int epoch = s.visit.Next();
    s.visit.stamp[l] = epoch;
    for (NodeId u = parent[l];
         u >= 0 && community.contains(u) && s.visit.stamp[u] != epoch;
         u = parent[u]) {
      s.visit.stamp[u] = epoch;
      ++total;
    }
  }
  return total;
}

int64_t LtLiveEdgeFunction::RealizationGain(int run, const NodeSet& community,
                                            NodeId v) const {
  LtScratch& s = LocalLtScratch();
  s.visit.Prepare(n_);
  s.upstream.Prepare(n_);
  if (static_cast<int>(s.inter.size()) < n_) s.inter.resize(n_);
  const std::vector<NodeId>& parent = parent_[run];
  const std::vector<int>& offset = child_offset_[run];
  const std::vector<int>& children = children_[run];

  // Ancestors of v inside S + v.
  const int up = s.upstream.Next();
  s.upstream.stamp[v] = up;
  int64_t above = 0;
  for (NodeId u = parent[v];
       u >= 0 && community.contains(u) && s.upstream.stamp[u] != up;
       u = parent[u]) {
    s.upstream.stamp[u] = up;
    ++above;
  }

  // Each descendant l gains the chain {v} + ancestors(v), except the nodes it
  // already passes before reaching v (only possible when v is on a cycle).
  int64_t gain = above;
  const int epoch = s.visit.Next();
  s.visit.stamp[v] = epoch;
  s.inter[v] = 0;
  s.queue.assign(1, v);
  for (size_t head = 0; head < s.queue.size(); ++head) {
    const NodeId u = s.queue[head];
    for (int a = offset[u]; a < offset[u + 1]; ++a) {
      const NodeId c = children[a];
      if (s.visit.stamp[c] == epoch || !community.contains(c)) continue;
      s.visit.stamp[c] = epoch;
      const bool on_chain = s.upstream.stamp[c] == up;
      s.inter[c] = s.inter[u] + (on_chain ? 1 : 0);
      gain += 1 + above - s.inter[c];
      s.queue.push_back(c);
    }
  }
  return gain;
}

double LtLiveEdgeFunction::Value(const NodeSet& community) const {
  if (community.size() < 2) return 0.0;
  int64_t total = 0;
  for (int k = 0; k < runs_; ++k) total += RealizationValue(k, community);
  return static_cast<double>(total) / runs_;
}

double LtLiveEdgeFunction::Gain(const NodeSet& community, NodeId v) const {
  if (community.empty()) return 0.0;
  int64_t total = 0;
  for (int k = 0; k < runs_; ++k) total += RealizationGain(k, community, v);
  return static_cast<double>(total) / runs_;
}

SpreadEstimate LtLiveEdgeFunction::Estimate(
    const std::vector<NodeSet>& communities) const {
  std::vector<int64_t> totals(runs_, 0);
  for (const NodeSet& s : communities) {
    if (s.size() < 2) continue;
    for (int k = 0; k < runs_; ++k) totals[k] += RealizationValue(k, s);
  }
  return SummarizeTotals(totals);
}

// ---------------------------------------------------------------------------
// Exact

namespace {

InfluenceGraph Induce(const InfluenceGraph& graph, const NodeSet& community) {
  std::vector<NodeId> members(community.members().begin(),
                              community.members().end());
  std::sort(members.begin(), members.end());
  // Members are in range by construction.
  return MakeInducedSubgraph(graph, members)->graph;
}

}  // namespace

absl::StatusOr<ExactIcFunction> ExactIcFunction::Create(
    const InfluenceGraph& graph, int max_edges) {
  if (graph.edge_count() > max_edges) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "graph has ", graph.edge_count(), " edges; exact cap is ", max_edges));
  }
  return ExactIcFunction(graph);
}

double ExactIcFunction::Value(const NodeSet& community) const {
  if (community.size() < 2) return 0.0;
  return *ExactSigmaIc(Induce(*graph_, community), graph_->edge_count());
}

absl::StatusOr<ExactLtFunction> ExactLtFunction::Create(
    const InfluenceGraph& graph, int64_t max_configurations) {
  if (!graph.lt_valid()) {
    return absl::FailedPreconditionError(
        "incoming weights exceed 1; graph is not valid for the LT model");
  }
  int64_t configurations = 1;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    configurations *= graph.in_degree(v) + 1;
    if (configurations > max_configurations) {
      return absl::ResourceExhaustedError(
          "graph exceeds the exact LT configuration cap");
    }
  }
  return ExactLtFunction(graph, max_configurations);
}

double ExactLtFunction::Value(const NodeSet& community) const {
  if (community.size() < 2) return 0.0;
  return *ExactSigmaLt(Induce(*graph_, community), max_configurations_);
}

}  // namespace imcpp
