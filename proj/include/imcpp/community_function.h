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

#ifndef IMCPP_COMMUNITY_FUNCTION_H_
#define IMCPP_COMMUNITY_FUNCTION_H_

#include <span>
#include <vector>

#include "imcpp/graph.h"

namespace imcpp {

// A subset of the node ids [0, universe) with O(1) insert, erase and lookup.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(int universe) : position_(universe, -1) {}

  int universe() const { return static_cast<int>(position_.size()); }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(NodeId v) const { return position_[v] >= 0; }
  // Insertion order, modulo swap-removal on Erase.
  std::span<const NodeId> members() const { return members_; }

  void Insert(NodeId v) {
    if (position_[v] >= 0) return;
    position_[v] = static_cast<int>(members_.size());
    members_.push_back(v);
  }
  void Erase(NodeId v) {
    const int at = position_[v];
    if (at < 0) return;
    members_[at] = members_.back();
    position_[members_[at]] = at;
    members_.pop_back();
    position_[v] = -1;
  }
  void Clear() {
    for (NodeId v : members_) position_[v] = -1;
    members_.clear();
  }

 private:
  std::vector<int> position_;
  std::vector<NodeId> members_;
};

// Membership test for "community S, optionally with one extra node".
struct Within {
  const NodeSet* set = nullptr;  // null admits every node
  NodeId extra = -1;
  bool operator()(NodeId v) const {
    return set == nullptr || v == extra || set->contains(v);
  }
};

// Influence of a single community, sigma(S). Every objective over the
// ground set communities x nodes is a sum of these terms, one per community,
// so optimizers only ever ask for community values and single-node gains.
class CommunityFunction {
 public:
  virtual ~CommunityFunction() = default;

  virtual int node_count() const = 0;
  virtual double Value(const NodeSet& community) const = 0;
  // Value(S + v) - Value(S) for v not in S. The default re-evaluates.
  virtual double Gain(const NodeSet& community, NodeId v) const;
};

}  // namespace imcpp

#endif  // IMCPP_COMMUNITY_FUNCTION_H_
