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

#include <algorithm>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "imcpp/optimizers.h"
#include "imcpp/rng.h"

namespace imcpp {

Partition RandomPartition(int node_count, int communities, uint64_t seed) {
  Rng rng(seed);
  std::vector<int> community_of(node_count);
  for (int& c : community_of) {
    c = static_cast<int>(rng.Below(static_cast<uint64_t>(communities)));
  }
  return Partition(communities, std::move(community_of));
}

namespace {

struct Bisection {
  NodeSet keep, split;
  double value = 0.0;  // f(keep) + f(split)
};

// Random split of `members` into two nonempty halves followed by one sweep
// of local moves in random order. Requires members.size() >= 2.
Bisection Bisect(const CommunityFunction& f, std::vector<NodeId> members,
                 uint64_t seed) {
  const int n = f.node_count();
  Rng rng(seed);
  rng.Shuffle(members.begin(), members.end());
  Bisection b{NodeSet(n), NodeSet(n)};
  b.keep.Insert(members[0]);
  b.split.Insert(members[1]);
  for (size_t k = 2; k < members.size(); ++k) {
    (rng.Bernoulli(0.5) ? b.keep : b.split).Insert(members[k]);
  }
  rng.Shuffle(members.begin(), members.end());
  for (NodeId v : members) {
    NodeSet& from = b.keep.contains(v) ? b.keep : b.split;
    NodeSet& to = &from == &b.keep ? b.split : b.keep;
    if (from.size() == 1) continue;  // never empty a half
    from.Erase(v);
    const double stay = f.Gain(from, v);
    const double move = f.Gain(to, v);
    (move > stay ? to : from).Insert(v);
  }
  b.value = f.Value(b.keep) + f.Value(b.split);
  return b;
}

}  // namespace

Partition Samkcp(const CommunityFunction& f, int communities, uint64_t seed) {
  const int n = f.node_count();
  std::vector<NodeSet> sets;
  sets.emplace_back(n);
  for (NodeId v = 0; v < n; ++v) sets[0].Insert(v);
  std::vector<double> value = {f.Value(sets[0])};

  for (int round = 1; round < communities; ++round) {
    int best_c = -1;
    double best_total = -std::numeric_limits<double>::infinity();
    Bisection best;
    double total = 0.0;
    for (double v : value) total += v;
    for (int c = 0; c < static_cast<int>(sets.size()); ++c) {
      if (sets[c].size() < 2) continue;
      std::vector<NodeId> members(sets[c].members().begin(),
                                  sets[c].members().end());
      std::sort(members.begin(), members.end());
      Bisection b = Bisect(f, std::move(members),
                           DeriveSeed(seed, {static_cast<uint64_t>(round),
                                             static_cast<uint64_t>(c)}));
      const double candidate = total - value[c] + b.value;
      if (candidate > best_total) {
        best_total = candidate;
        best_c = c;
        best = std::move(b);
      }
    }
    if (best_c < 0) break;  // only singletons left
    value[best_c] = f.Value(best.keep);
    value.push_back(f.Value(best.split));
    sets[best_c] = std::move(best.keep);
    sets.push_back(std::move(best.split));
  }

  std::vector<int> community_of(n, 0);
  for (int c = 0; c < static_cast<int>(sets.size()); ++c) {
    for (NodeId v : sets[c].members()) community_of[v] = c;
  }
  return Partition(communities, std::move(community_of));
}

absl::StatusOr<Partition> Mamkcp(const InfluenceGraph& graph,
                                 const CommunityFunction& f, int communities) {
  const int n = f.node_count();
  if (communities < 1 || communities > n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "mamkcp needs 1 <= m <= n, got m=", communities, " n=", n));
  }
  // Communities are named by their smallest node id.
  std::vector<int> label(n);
  std::vector<NodeSet> sets;
  std::vector<double> value(n);
  sets.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    label[v] = v;
    sets.emplace_back(n);
    sets[v].Insert(v);
    value[v] = f.Value(sets[v]);
  }
  std::map<std::pair<int, int>, double> gain;  // adjacent pairs only
  // f(A + B) - f(A) - f(B), built by inserting the smaller side into the
  // larger one gain by gain.
  auto merged_gain = [&](int a, int b) {
    if (sets[a].size() < sets[b].size()) std::swap(a, b);
    NodeSet u = sets[a];
    double added = 0.0;
    for (NodeId v : sets[b].members()) {
      added += f.Gain(u, v);
      u.Insert(v);
    }
    return added - value[b];
  };
  for (NodeId s = 0; s < n; ++s) {
    for (int e : graph.out_edges(s)) {
      const std::pair<int, int> key = std::minmax(s, graph.edge(e).dst);
      if (!gain.contains(key)) gain[key] = merged_gain(key.first, key.second);
    }
  }
  std::vector<int> alive(n);
  for (int v = 0; v < n; ++v) alive[v] = v;

  for (int remaining = n; remaining > communities; --remaining) {
    double best = -std::numeric_limits<double>::infinity();
    std::pair<int, int> pick{-1, -1};
    for (const auto& [key, g] : gain) {
      if (g > best) {
        best = g;
        pick = key;
      }
    }
    // Non-adjacent pairs have gain exactly zero; when nothing adjacent beats
    // zero the lexicographically first zero-gain pair wins.
    if (pick.first < 0 || best <= 0.0) {
      bool found = false;
      for (size_t i = 0; i < alive.size() && !found; ++i) {
        for (size_t k = i + 1; k < alive.size() && !found; ++k) {
          auto it = gain.find({alive[i], alive[k]});
          if (it == gain.end() || it->second >= best) {
            pick = {alive[i], alive[k]};
            found = true;
          }
        }
      }
    }
    const auto [a, b] = pick;
    for (NodeId v : sets[b].members()) {
      sets[a].Insert(v);
      label[v] = a;
    }
    sets[b].Clear();
    value[a] = f.Value(sets[a]);
    std::erase(alive, b);

    std::vector<int> touched;
    for (auto it = gain.begin(); it != gain.end();) {
      const auto [x, y] = it->first;
      if (x == a || x == b || y == a || y == b) {
        const int other = x == a || x == b ? y : x;
        if (other != a && other != b) touched.push_back(other);
        it = gain.erase(it);
      } else {
        ++it;
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int other : touched) {
      gain[std::minmax(a, other)] = merged_gain(std::min(a, other),
                                                std::max(a, other));
    }
  }

  std::vector<int> community_of(n);
  for (NodeId v = 0; v < n; ++v) {
    community_of[v] = static_cast<int>(
        std::lower_bound(alive.begin(), alive.end(), label[v]) - alive.begin());
  }
  return Partition(communities, std::move(community_of));
}

}  // namespace imcpp
