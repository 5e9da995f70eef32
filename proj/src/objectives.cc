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

#include "imcpp/objectives.h"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "absl/strings/strip.h"
#include "imcpp/rng.h"

namespace imcpp {

double CommunityFunction::Gain(const NodeSet& community, NodeId v) const {
  NodeSet with_v = community;
  with_v.Insert(v);
  return Value(with_v) - Value(community);
}

int Assignment::CommunityOf(NodeId node) const {
  for (const GroundPair& p : pairs_) {
    if (p.node == node) return p.community;
  }
  return -1;
}

std::vector<NodeSet> Assignment::Communities() const {
  std::vector<NodeSet> sets(communities_, NodeSet(node_count_));
  for (const GroundPair& p : pairs_) sets[p.community].Insert(p.node);
  return sets;
}

bool IsIndependent(const Assignment& assignment) {
  std::vector<char> used(assignment.node_count(), 0);
  for (const GroundPair& p : assignment.pairs()) {
    if (used[p.node]) return false;
    used[p.node] = 1;
  }
  return true;
}

absl::StatusOr<Partition> Partition::FromAssignment(
    const Assignment& assignment) {
  if (!IsIndependent(assignment)) {
    return absl::InvalidArgumentError("assignment places a node twice");
  }
  std::vector<int> community_of(assignment.node_count(), -1);
  for (const GroundPair& p : assignment.pairs()) {
    community_of[p.node] = p.community;
  }
  for (NodeId v = 0; v < assignment.node_count(); ++v) {
    if (community_of[v] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("node ", v, " is unassigned"));
    }
  }
  return Partition(assignment.communities(), std::move(community_of));
}

Assignment Partition::ToAssignment() const {
  Assignment a(communities_, node_count());
  for (NodeId v = 0; v < node_count(); ++v) a.Insert({community_of_[v], v});
  return a;
}

std::vector<NodeSet> Partition::Communities() const {
  std::vector<NodeSet> sets(communities_, NodeSet(node_count()));
  for (NodeId v = 0; v < node_count(); ++v) sets[community_of_[v]].Insert(v);
  return sets;
}

FractionalAssignment FractionalAssignment::Indicator(
    const Assignment& assignment) {
  FractionalAssignment x(assignment.communities(), assignment.node_count());
  for (const GroundPair& p : assignment.pairs()) x.at(p.community, p.node) = 1.0;
  return x;
}

double FractionalAssignment::ColumnSum(NodeId node) const {
  double sum = 0.0;
  for (int i = 0; i < communities_; ++i) sum += at(i, node);
  return sum;
}

bool FractionalAssignment::InPolytope(double tolerance) const {
  for (double v : x_) {
    if (v < -tolerance || v > 1.0 + tolerance) return false;
  }
  for (NodeId j = 0; j < node_count_; ++j) {
    if (ColumnSum(j) > 1.0 + tolerance) return false;
  }
  return true;
}

bool FractionalAssignment::IsIntegral() const {
  for (double v : x_) {
    if (v != 0.0 && v != 1.0) return false;
  }
  return true;
}

Assignment FractionalAssignment::Support() const {
  Assignment a(communities_, node_count_);
  for (int i = 0; i < communities_; ++i) {
    for (NodeId j = 0; j < node_count_; ++j) {
      if (at(i, j) == 1.0) a.Insert({i, j});
    }
  }
  return a;
}

double EvaluateCommunities(const CommunityFunction& f,
                           const std::vector<NodeSet>& communities) {
  double total = 0.0;
  for (const NodeSet& s : communities) {
    if (s.size() > 1) total += f.Value(s);
  }
  return total;
}

double Evaluate(const CommunityFunction& f, const Assignment& assignment) {
  return EvaluateCommunities(f, assignment.Communities());
}

double Evaluate(const CommunityFunction& f, const Partition& partition) {
  return EvaluateCommunities(f, partition.Communities());
}

absl::StatusOr<SpreadEstimate> EvaluateF(const InfluenceGraph& graph,
                                         const Assignment& assignment,
                                         SpreadModel model,
                                         const EvalParams& params) {
  if (model == SpreadModel::kMia && !params.theta.has_value()) {
    return absl::InvalidArgumentError("the MIA model requires theta");
  }
  SpreadEstimate total;
  double variance = 0.0;
  const std::vector<NodeSet> communities = assignment.Communities();
  for (int k = 0; k < static_cast<int>(communities.size()); ++k) {
    std::vector<NodeId> members(communities[k].members().begin(),
                                communities[k].members().end());
    std::sort(members.begin(), members.end());
    auto sub = MakeInducedSubgraph(graph, members);
    if (!sub.ok()) return sub.status();
    const InfluenceGraph& g = sub->graph;
    const uint64_t seed = DeriveSeed(params.seed, {static_cast<uint64_t>(k)});
    switch (model) {
      case SpreadModel::kIcMonteCarlo:
      case SpreadModel::kLtMonteCarlo: {
        auto est = model == SpreadModel::kIcMonteCarlo
                       ? SigmaCommunityIc(g, params.mc_runs, seed)
                       : SigmaCommunityLt(g, params.mc_runs, seed);
        if (!est.ok()) return est.status();
        total.mean += est->mean;
        total.samples = est->samples;
        variance += est->std_error * est->std_error;
        break;
      }
      case SpreadModel::kIcExact: {
        auto value = ExactSigmaIc(g, params.exact_edge_cap);
        if (!value.ok()) return value.status();
        total.mean += *value;
        break;
      }
      case SpreadModel::kLtExact: {
        auto value = ExactSigmaLt(g, params.exact_lt_cap);
        if (!value.ok()) return value.status();
        total.mean += *value;
        break;
      }
      case SpreadModel::kMia:
        total.mean += SigmaMCommunity(g, *params.theta);
        break;
    }
  }
  total.std_error = std::sqrt(variance);
  return total;
}

Partition CompleteAssignment(const Assignment& assignment,
                             const CommunityFunction& f) {
  const int m = assignment.communities();
  const int n = assignment.node_count();
  std::vector<NodeSet> sets = assignment.Communities();
  std::vector<int> community_of(n, -1);
  for (const GroundPair& p : assignment.pairs()) community_of[p.node] = p.community;
  for (NodeId v = 0; v < n; ++v) {
    if (community_of[v] >= 0) continue;
    int best = 0;
    double best_gain = -1.0;
    for (int k = 0; k < m; ++k) {
      const double gain = f.Gain(sets[k], v);
      if (gain > best_gain) {
        best_gain = gain;
        best = k;
      }
    }
    community_of[v] = best;
    sets[best].Insert(v);
  }
  return Partition(m, std::move(community_of));
}

absl::Status WritePartitionCsv(const InfluenceGraph& graph,
                               const Partition& partition,
                               const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << "node_label,community_id\n";
  for (NodeId v = 0; v < partition.node_count(); ++v) {
    out << graph.label(v) << ',' << partition.community_of(v) << '\n';
  }
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<Partition> ReadPartitionCsv(const InfluenceGraph& graph,
                                           int communities,
                                           const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::unordered_map<std::string, NodeId> ids;
  for (NodeId v = 0; v < graph.node_count(); ++v) ids[graph.label(v)] = v;
  std::vector<int> community_of(graph.node_count(), -1);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line_number == 1) continue;  // header
    absl::string_view row = absl::StripAsciiWhitespace(line);
    if (row.empty()) continue;
    std::vector<absl::string_view> fields = absl::StrSplit(row, ',');
    int community = -1;
    if (fields.size() != 2 || !absl::SimpleAtoi(fields[1], &community) ||
        community < 0 || community >= communities) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": malformed partition row"));
    }
    auto it = ids.find(std::string(fields[0]));
    if (it == ids.end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_number, ": unknown node '", fields[0], "'"));
    }
    community_of[it->second] = community;
  }
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (community_of[v] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("node ", graph.label(v), " missing from partition"));
    }
  }
  return Partition(communities, std::move(community_of));
}

}  // namespace imcpp
