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

#include "imcpp/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "imcpp/live_edge.h"
#include "imcpp/mia.h"
#include "imcpp/objectives.h"
#include "imcpp/optimizers.h"
#include "imcpp/rng.h"

namespace imcpp {
namespace {

absl::Status LineError(int line, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", message));
}

template <typename T>
absl::Status ParseNumber(absl::string_view value, int line, T* out) {
  bool ok;
  if constexpr (std::is_same_v<T, double>) {
    ok = absl::SimpleAtod(value, out);
  } else {
    ok = absl::SimpleAtoi(value, out);
  }
  if (!ok) return LineError(line, absl::StrCat("bad number '", value, "'"));
  return absl::OkStatus();
}

std::vector<std::string> SplitList(absl::string_view value) {
  std::vector<std::string> items;
  for (absl::string_view part : absl::StrSplit(value, ',')) {
    part = absl::StripAsciiWhitespace(part);
    if (!part.empty()) items.emplace_back(part);
  }
  return items;
}

bool KnownMethod(absl::string_view name) {
  return std::find(std::begin(kMethodNames), std::end(kMethodNames), name) !=
         std::end(kMethodNames);
}

// Everything one repetition needs, built once and shared by all methods.
struct Objectives {
  std::unique_ptr<IcLiveEdgeFunction> evaluation;
  std::unique_ptr<IcLiveEdgeFunction> original;
  std::unique_ptr<LtLiveEdgeFunction> upper;
  std::unique_ptr<MiaFunction> lower;
};

absl::StatusOr<Objectives> BuildObjectives(const ExperimentConfig& config,
                                           const InfluenceGraph& graph,
                                           MiaTheta theta, uint64_t rep) {
  Objectives o;
  auto evaluation = IcLiveEdgeFunction::Create(
      graph, config.mc_runs, DeriveSeed(config.seed, {0, rep}));
  if (!evaluation.ok()) return evaluation.status();
  o.evaluation = std::make_unique<IcLiveEdgeFunction>(*std::move(evaluation));
  auto original = IcLiveEdgeFunction::Create(
      graph, config.mc_runs, DeriveSeed(config.seed, {1, rep}));
  if (!original.ok()) return original.status();
  o.original = std::make_unique<IcLiveEdgeFunction>(*std::move(original));
  auto upper = LtLiveEdgeFunction::Create(graph, config.mc_runs,
                                          DeriveSeed(config.seed, {2, rep}));
  if (!upper.ok()) return upper.status();
  o.upper = std::make_unique<LtLiveEdgeFunction>(*std::move(upper));
  o.lower = std::make_unique<MiaFunction>(graph, theta);
  return o;
}

absl::StatusOr<ResultRow> RunCell(const ExperimentConfig& config,
                                  const InfluenceGraph& graph,
                                  const Objectives& o,
                                  const std::string& method, int m, int rep) {
  const uint64_t cell_seed =
      DeriveSeed(config.seed, {3, static_cast<uint64_t>(rep),
                               static_cast<uint64_t>(m)});
  const SandwichConfig sandwich_config{config.delta_t, config.grad_samples,
                                       cell_seed};
  ResultRow row;
  row.method = method;
  row.m = m;
  row.repetition = rep;
  const auto start = std::chrono::steady_clock::now();
  Partition partition;
  if (method == "sandwich") {
    auto result = Sandwich({o.original.get(), o.upper.get(), o.lower.get()},
                           m, sandwich_config);
    if (!result.ok()) return result.status();
    partition = result->chosen;
    row.ratio_upper = result->UpperRatio();
    row.ratio_lower_value = result->lower_bound_of_lower;
  } else if (method == "upper") {
    auto p = SolveUpperBound(*o.upper, *o.lower, m, sandwich_config);
    if (!p.ok()) return p.status();
    partition = *std::move(p);
  } else if (method == "lower") {
    auto p = SolveLowerBound(*o.lower, m, sandwich_config);
    if (!p.ok()) return p.status();
    partition = *std::move(p);
  } else if (method == "greedy") {
    partition = SimpleGreedy(*o.original, m);
  } else if (method == "random") {
    partition = RandomPartition(graph.node_count(), m, cell_seed);
  } else if (method == "samkcp") {
    partition = Samkcp(*o.original, m, cell_seed);
  } else if (method == "mamkcp") {
    auto p = Mamkcp(graph, *o.original, m);
    if (!p.ok()) return p.status();
    partition = *std::move(p);
  } else {
    return absl::InvalidArgumentError(absl::StrCat("unknown method ", method));
  }
  const auto stop = std::chrono::steady_clock::now();
  if (config.timing) {
    row.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }
  const SpreadEstimate estimate =
      o.evaluation->Estimate(partition.Communities());
  row.f_ic = estimate.mean;
  row.std_err = estimate.std_error;
  return row;
}

std::string FormatDouble(double v) { return absl::StrFormat("%.6g", v); }

}  // namespace

absl::StatusOr<ExperimentConfig> ParseExperimentConfig(absl::string_view text) {
  ExperimentConfig config;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    if (const size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == absl::string_view::npos) return LineError(line_no, "expected key = value");
    const absl::string_view key = absl::StripAsciiWhitespace(line.substr(0, eq));
    const absl::string_view value =
        absl::StripAsciiWhitespace(line.substr(eq + 1));
    absl::Status status;
    if (key == "dataset") {
      config.dataset = std::string(value);
    } else if (key == "output") {
      config.output = std::string(value);
    } else if (key == "weighting") {
      if (value == "explicit") {
        config.weighting = Weighting::kExplicit;
      } else if (value == "inverse_in_degree") {
        config.weighting = Weighting::kInverseInDegree;
      } else {
        return LineError(line_no, absl::StrCat("unknown weighting '", value, "'"));
      }
    } else if (key == "m_values") {
      config.m_values.clear();
      for (const std::string& item : SplitList(value)) {
        int m;
        status = ParseNumber(item, line_no, &m);
        if (!status.ok()) return status;
        config.m_values.push_back(m);
      }
    } else if (key == "methods") {
      config.methods = SplitList(value);
    } else if (key == "delta_t") {
      status = ParseNumber(value, line_no, &config.delta_t);
    } else if (key == "theta") {
      status = ParseNumber(value, line_no, &config.theta);
    } else if (key == "mc_runs") {
      status = ParseNumber(value, line_no, &config.mc_runs);
    } else if (key == "grad_samples") {
      status = ParseNumber(value, line_no, &config.grad_samples);
    } else if (key == "seed") {
      status = ParseNumber(value, line_no, &config.seed);
    } else if (key == "repetitions") {
      status = ParseNumber(value, line_no, &config.repetitions);
    } else if (key == "timing") {
      if (value != "true" && value != "false") {
        return LineError(line_no, "timing must be true or false");
      }
      config.timing = value == "true";
    } else {
      return LineError(line_no, absl::StrCat("unknown key '", key, "'"));
    }
    if (!status.ok()) return status;
  }
  return config;
}

absl::StatusOr<ExperimentConfig> LoadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto config = ParseExperimentConfig(buffer.str());
  if (!config.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", config.status().message()));
  }
  return config;
}

absl::Status ValidateExperimentConfig(const ExperimentConfig& config) {
  if (config.m_values.empty()) {
    return absl::InvalidArgumentError("m_values is empty");
  }
  for (int m : config.m_values) {
    if (m < 1) return absl::InvalidArgumentError("every m must be >= 1");
  }
  if (config.methods.empty()) {
    return absl::InvalidArgumentError("methods is empty");
  }
  for (const std::string& method : config.methods) {
    if (!KnownMethod(method)) {
      return absl::InvalidArgumentError(absl::StrCat("unknown method '", method, "'"));
    }
  }
  const double inverse = 1.0 / config.delta_t;
  if (!(config.delta_t > 0.0 && config.delta_t <= 1.0) ||
      std::abs(inverse - std::round(inverse)) > 1e-9 * inverse) {
    return absl::InvalidArgumentError("1 / delta_t must be a positive integer");
  }
  if (!MiaTheta::Create(config.theta).ok()) {
    return absl::InvalidArgumentError("theta must lie in (0, 1]");
  }
  if (config.mc_runs < 1) return absl::InvalidArgumentError("mc_runs must be >= 1");
  if (config.grad_samples < 1) {
    return absl::InvalidArgumentError("grad_samples must be >= 1");
  }
  if (config.repetitions < 1) {
    return absl::InvalidArgumentError("repetitions must be >= 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<ResultRow>> RunExperiment(
    const ExperimentConfig& config, const InfluenceGraph& graph) {
  if (auto status = ValidateExperimentConfig(config); !status.ok()) {
    return status;
  }
  if (!graph.lt_valid()) {
    return absl::InvalidArgumentError(
        "graph has a node whose in-probabilities sum above 1; the LT bound "
        "needs inverse_in_degree weighting or normalized probabilities");
  }
  const MiaTheta theta = *MiaTheta::Create(config.theta);
  std::vector<std::string> methods = config.methods;
  std::sort(methods.begin(), methods.end());
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
  std::vector<int> m_values = config.m_values;
  std::sort(m_values.begin(), m_values.end());
  m_values.erase(std::unique(m_values.begin(), m_values.end()), m_values.end());

  std::vector<ResultRow> rows;
  for (int rep = 0; rep < config.repetitions; ++rep) {
    auto objectives =
        BuildObjectives(config, graph, theta, static_cast<uint64_t>(rep));
    if (!objectives.ok()) return objectives.status();
    for (const std::string& method : methods) {
      for (int m : m_values) {
        auto row = RunCell(config, graph, *objectives, method, m, rep);
        if (!row.ok()) {
          return absl::Status(row.status().code(),
                              absl::StrCat(method, " m=", m, ": ",
                                           row.status().message()));
        }
        rows.push_back(*std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.method, a.m, a.repetition) <
           std::tie(b.method, b.m, b.repetition);
  });
  return rows;
}

absl::StatusOr<std::vector<ResultRow>> RunExperiment(
    const ExperimentConfig& config) {
  auto graph = LoadEdgeList(config.dataset, config.weighting);
  if (!graph.ok()) return graph.status();
  return RunExperiment(config, *graph);
}

std::string FormatCsv(const std::vector<ResultRow>& rows) {
  std::string out = absl::StrCat(kCsvHeader, "\n");
  for (const ResultRow& r : rows) {
    absl::StrAppend(&out, r.method, ",", r.m, ",", r.repetition, ",",
                    FormatDouble(r.f_ic), ",", FormatDouble(r.std_err), ",",
                    FormatDouble(r.wall_ms), ",",
                    r.ratio_upper ? FormatDouble(*r.ratio_upper) : "", ",",
                    r.ratio_lower_value ? FormatDouble(*r.ratio_lower_value)
                                        : "",
                    "\n");
  }
  return out;
}

absl::Status WriteCsv(const std::vector<ResultRow>& rows,
                      const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << FormatCsv(rows);
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<std::vector<ResultRow>> ParseCsv(absl::string_view text) {
  std::vector<ResultRow> rows;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n', absl::SkipEmpty())) {
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) return LineError(1, "unexpected header");
      continue;
    }
    std::vector<absl::string_view> cells = absl::StrSplit(line, ',');
    if (cells.size() != 8) return LineError(line_no, "expected 8 fields");
    ResultRow r;
    r.method = std::string(cells[0]);
    absl::Status status = ParseNumber(cells[1], line_no, &r.m);
    if (status.ok()) status = ParseNumber(cells[2], line_no, &r.repetition);
    if (status.ok()) status = ParseNumber(cells[3], line_no, &r.f_ic);
    if (status.ok()) status = ParseNumber(cells[4], line_no, &r.std_err);
    if (status.ok()) status = ParseNumber(cells[5], line_no, &r.wall_ms);
    if (status.ok() && !cells[6].empty()) {
      double v;
      status = ParseNumber(cells[6], line_no, &v);
      r.ratio_upper = v;
    }
    if (status.ok() && !cells[7].empty()) {
      double v;
      status = ParseNumber(cells[7], line_no, &v);
      r.ratio_lower_value = v;
    }
    if (!status.ok()) return status;
    rows.push_back(std::move(r));
  }
  if (line_no == 0) return LineError(1, "missing header");
  return rows;
}

}  // namespace imcpp
