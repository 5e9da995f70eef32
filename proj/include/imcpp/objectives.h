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

#ifndef IMCPP_OBJECTIVES_H_
#define IMCPP_OBJECTIVES_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "imcpp/community_function.h"
#include "imcpp/diffusion.h"
#include "imcpp/graph.h"
#include "imcpp/mia.h"

namespace imcpp {

// (community, node): node `node` is placed in community `community`.
struct GroundPair {
  int community = 0;
  NodeId node = 0;
  auto operator<=>(const GroundPair&) const = default;
};

// A subset of the ground set communities x nodes. Independent (at most one
// community per node) unless built otherwise; optimizers only produce
// independent assignments.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int communities, int node_count)
      : communities_(communities), node_count_(node_count) {}

  int communities() const { return communities_; }
  int node_count() const { return node_count_; }
  const std::set<GroundPair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  int size() const { return static_cast<int>(pairs_.size()); }

  void Insert(GroundPair pair) { pairs_.insert(pair); }
  bool contains(GroundPair pair) const { return pairs_.contains(pair); }

  // Community of `node`, or -1 when unassigned. For dependent sets returns
  // the lowest community holding it.
  int CommunityOf(NodeId node) const;

  // One NodeSet per community.
  std::vector<NodeSet> Communities() const;

 private:
  int communities_ = 0;
  int node_count_ = 0;
  std::set<GroundPair> pairs_;
};

// True iff no node appears in two pairs.
bool IsIndependent(const Assignment& assignment);

// Total assignment of every node to one of `communities` communities.
class Partition {
 public:
  Partition() = default;
  Partition(int communities, std::vector<int> community_of)
      : communities_(communities), community_of_(std::move(community_of)) {}

  // Fails unless `assignment` is independent and covers every node.
  static absl::StatusOr<Partition> FromAssignment(const Assignment& assignment);

  int communities() const { return communities_; }
  int node_count() const { return static_cast<int>(community_of_.size()); }
  int community_of(NodeId v) const { return community_of_[v]; }
  const std::vector<int>& community_of() const { return community_of_; }

  Assignment ToAssignment() const;
  std::vector<NodeSet> Communities() const;
  bool operator==(const Partition&) const = default;

 private:
  int communities_ = 0;
  std::vector<int> community_of_;
};

// x in [0, 1]^{communities x nodes}, stored community-major.
class FractionalAssignment {
 public:
  FractionalAssignment() = default;
  FractionalAssignment(int communities, int node_count)
      : communities_(communities),
        node_count_(node_count),
        x_(static_cast<size_t>(communities) * node_count, 0.0) {}

  static FractionalAssignment Indicator(const Assignment& assignment);

  int communities() const { return communities_; }
  int node_count() const { return node_count_; }
  int cell_count() const { return static_cast<int>(x_.size()); }
  double& at(int community, NodeId node) {
    return x_[static_cast<size_t>(community) * node_count_ + node];
  }
  double at(int community, NodeId node) const {
    return x_[static_cast<size_t>(community) * node_count_ + node];
  }
  double ColumnSum(NodeId node) const;

  // Entries in [0, 1] and every column sum <= 1 (within `tolerance`).
  bool InPolytope(double tolerance = 1e-9) const;
  // True when every entry is 0 or 1.
  bool IsIntegral() const;
  // Pairs with x == 1.
  Assignment Support() const;

 private:
  int communities_ = 0;
  int node_count_ = 0;
  std::vector<double> x_;
};

// Sum over communities of `f`.
double EvaluateCommunities(const CommunityFunction& f,
                           const std::vector<NodeSet>& communities);
double Evaluate(const CommunityFunction& f, const Assignment& assignment);
double Evaluate(const CommunityFunction& f, const Partition& partition);

enum class SpreadModel { kIcMonteCarlo, kLtMonteCarlo, kIcExact, kLtExact, kMia };

struct EvalParams {
  int mc_runs = kDefaultMcRuns;
  std::optional<MiaTheta> theta;
  uint64_t seed = 0;
  int exact_edge_cap = kDefaultExactEdgeCap;
  int64_t exact_lt_cap = kDefaultExactLtConfigCap;
};

// Sum over communities of sigma under `model`, each community evaluated on
// its induced subgraph. Unassigned nodes belong to no community. The
// std_error field is zero for the deterministic models.
absl::StatusOr<SpreadEstimate> EvaluateF(const InfluenceGraph& graph,
                                         const Assignment& assignment,
                                         SpreadModel model,
                                         const EvalParams& params);

// Places each unassigned node, in increasing id order, into the community
// with the largest gain under `f` (lowest community id on ties).
Partition CompleteAssignment(const Assignment& assignment,
                             const CommunityFunction& f);

// `node_label,community_id` lines with a header.
absl::Status WritePartitionCsv(const InfluenceGraph& graph,
                               const Partition& partition,
                               const std::string& path);
absl::StatusOr<Partition> ReadPartitionCsv(const InfluenceGraph& graph,
                                           int communities,
                                           const std::string& path);

}  // namespace imcpp

#endif  // IMCPP_OBJECTIVES_H_
