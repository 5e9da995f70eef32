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

#ifndef IMCPP_SYNTHETIC_H_
#define IMCPP_SYNTHETIC_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "imcpp/graph.h"

namespace imcpp {

// Random directed graph with planted blocks: nodes are split into `blocks`
// contiguous groups and each edge stays inside its source's group with
// probability `intra_fraction`. Every node touches at least one edge, so an
// edge-list round trip keeps the node count. Probabilities are
// 1 / in-degree.
struct SyntheticSpec {
  int nodes = 379;
  int edges = 914;
  int blocks = 8;
  double intra_fraction = 0.85;
  uint64_t seed = 1;
};

absl::StatusOr<InfluenceGraph> GenerateSynthetic(const SyntheticSpec& spec);

}  // namespace imcpp

#endif  // IMCPP_SYNTHETIC_H_
