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

#include "imcpp/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "absl/strings/strip.h"

namespace imcpp {

absl::StatusOr<InfluenceGraph> InfluenceGraph::Create(
    int node_count, std::vector<Edge> edges, std::vector<std::string> labels) {
  if (node_count < 0) {
    return absl::InvalidArgumentError("negative node count");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != node_count) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", node_count, " labels, got ", labels.size()));
  }
  for (const Edge& e : edges) {
    if (e.src < 0 || e.src >= node_count || e.dst < 0 ||
        e.dst >= node_count) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", e.src, ", ", e.dst, ") out of range"));
    }
    if (e.src == e.dst) {
      return absl::InvalidArgumentError(
          absl::StrCat("self-loop on node ", e.src));
    }
    if (!(e.prob >= 0.0 && e.prob <= 1.0)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "probability ", e.prob, " on edge (", e.src, ", ", e.dst,
          ") is outside [0, 1]"));
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].src == edges[i - 1].src && edges[i].dst == edges[i - 1].dst) {
      return absl::InvalidArgumentError(absl::StrCat(
          "duplicate edge (", edges[i].src, ", ", edges[i].dst, ")"));
    }
  }

  InfluenceGraph g;
  g.node_count_ = node_count;
  g.edges_ = std::move(edges);
  if (labels.empty()) {
    labels.reserve(node_count);
    for (int v = 0; v < node_count; ++v) labels.push_back(absl::StrCat(v));
  }
  g.labels_ = std::move(labels);

  const int m = static_cast<int>(g.edges_.size());
  g.out_offset_.assign(node_count + 1, 0);
  g.in_offset_.assign(node_count + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_offset_[e.src + 1];
    ++g.in_offset_[e.dst + 1];
  }
  for (int v = 0; v < node_count; ++v) {
    g.out_offset_[v + 1] += g.out_offset_[v];
    g.in_offset_[v + 1] += g.in_offset_[v];
  }
  g.out_index_.resize(m);
  g.in_index_.resize(m);
  std::vector<int> out_fill(g.out_offset_.begin(), g.out_offset_.end() - 1);
  std::vector<int> in_fill(g.in_offset_.begin(), g.in_offset_.end() - 1);
  // Edges are sorted by (src, dst), so both lists end up ordered by the
  // opposite endpoint.
  for (int i = 0; i < m; ++i) {
    g.out_index_[out_fill[g.edges_[i].src]++] = i;
    g.in_index_[in_fill[g.edges_[i].dst]++] = i;
  }

  g.in_weight_.assign(node_count, 0.0);
  for (NodeId v = 0; v < node_count; ++v) {
    double sum = 0.0;
    for (int e : g.in_edges(v)) sum += g.edges_[e].prob;
    g.in_weight_[v] = sum;
    if (sum > 1.0 + kLtSlack) g.lt_valid_ = false;
  }
  return g;
}

namespace {

absl::Status ParseError(int line_number, absl::string_view message) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line_number, ": ", message));
}

}  // namespace

absl::StatusOr<InfluenceGraph> ParseEdgeList(absl::string_view text,
                                             Weighting weighting,
                                             std::vector<std::string>* warnings) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](absl::string_view label) {
    auto [it, inserted] =
        ids.emplace(std::string(label), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    line = absl::StripAsciiWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipEmpty());
    if (fields.size() < 2 || fields.size() > 3) {
      return ParseError(line_number, "expected `src dst [prob]`");
    }
    double prob = 0.0;
    if (weighting == Weighting::kExplicit) {
      if (fields.size() != 3) {
        return ParseError(line_number, "missing probability column");
      }
      const char* begin = fields[2].data();
      const char* end = begin + fields[2].size();
      auto [ptr, ec] = std::from_chars(begin, end, prob);
      if (ec != std::errc() || ptr != end) {
        return ParseError(line_number,
                          absl::StrCat("bad probability '", fields[2], "'"));
      }
      if (!(prob >= 0.0 && prob <= 1.0)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_number, ": probability ", fields[2],
            " is outside [0, 1]"));
      }
    }
    NodeId src = intern(fields[0]);
    NodeId dst = intern(fields[1]);
    if (src == dst) {
      if (warnings != nullptr) {
        warnings->push_back(absl::StrCat("line ", line_number,
                                         ": dropped self-loop on ", fields[0]));
      }
      continue;
    }
    edges.push_back({src, dst, prob});
  }

  const int n = static_cast<int>(labels.size());
  if (weighting == Weighting::kInverseInDegree) {
    std::vector<int> in_degree(n, 0);
    for (const Edge& e : edges) ++in_degree[e.dst];
    for (Edge& e : edges) e.prob = 1.0 / in_degree[e.dst];
  }
  return InfluenceGraph::Create(n, std::move(edges), std::move(labels));
}

absl::StatusOr<InfluenceGraph> LoadEdgeList(const std::string& path,
                                            Weighting weighting,
                                            std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseEdgeList(buffer.str(), weighting, warnings);
}

std::string FormatEdgeList(const InfluenceGraph& graph) {
  std::string out;
  for (const Edge& e : graph.edges()) {
    absl::StrAppendFormat(&out, "%s %s %.17g\n", graph.label(e.src),
                          graph.label(e.dst), e.prob);
  }
  return out;
}

absl::Status WriteEdgeList(const InfluenceGraph& graph,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << FormatEdgeList(graph);
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<InducedSubgraph> MakeInducedSubgraph(
    const InfluenceGraph& graph, std::span<const NodeId> nodes) {
  std::vector<NodeId> local(graph.node_count(), -1);
  InducedSubgraph sub;
  std::vector<std::string> labels;
  for (NodeId v : nodes) {
    if (v < 0 || v >= graph.node_count()) {
      return absl::OutOfRangeError(absl::StrCat("node ", v, " out of range"));
    }
    if (local[v] >= 0) continue;
    local[v] = static_cast<NodeId>(sub.to_parent.size());
    sub.to_parent.push_back(v);
    labels.push_back(graph.label(v));
  }
  std::vector<Edge> edges;
  for (NodeId v : sub.to_parent) {
    for (int e : graph.out_edges(v)) {
      const Edge& edge = graph.edge(e);
      if (local[edge.dst] >= 0) {
        edges.push_back({local[edge.src], local[edge.dst], edge.prob});
      }
    }
  }
  auto built = InfluenceGraph::Create(static_cast<int>(sub.to_parent.size()),
                                      std::move(edges), std::move(labels));
  if (!built.ok()) return built.status();
  sub.graph = *std::move(built);
  return sub;
}

}  // namespace imcpp
