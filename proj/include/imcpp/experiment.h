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

#ifndef IMCPP_EXPERIMENT_H_
#define IMCPP_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "imcpp/graph.h"

namespace imcpp {

inline constexpr absl::string_view kMethodNames[] = {
    "sandwich", "upper", "lower", "greedy", "random", "samkcp", "mamkcp"};

struct ExperimentConfig {
  std::string dataset;
  Weighting weighting = Weighting::kInverseInDegree;
  std::vector<int> m_values = {1, 2, 3};
  std::vector<std::string> methods = {"sandwich", "random", "samkcp",
                                      "mamkcp"};
  double delta_t = 0.05;
  double theta = 0.1;
  int mc_runs = 500;
  int grad_samples = 100;
  uint64_t seed = 0;
  int repetitions = 5;
  std::string output;
  // Off by default so reruns produce byte-identical files.
  bool timing = false;
};

// `key = value` lines; '#' starts a comment. Keys match the field names;
// list values are comma separated; weighting is `explicit` or
// `inverse_in_degree`. Unknown keys are errors.
absl::StatusOr<ExperimentConfig> ParseExperimentConfig(absl::string_view text);
absl::StatusOr<ExperimentConfig> LoadExperimentConfig(const std::string& path);
absl::Status ValidateExperimentConfig(const ExperimentConfig& config);

struct ResultRow {
  std::string method;
  int m = 0;
  int repetition = 0;
  double f_ic = 0.0;
  double std_err = 0.0;
  double wall_ms = 0.0;
  // Sandwich rows only: f(S_U) / upper(S_U) and lower(S_L).
  std::optional<double> ratio_upper;
  std::optional<double> ratio_lower_value;
};

// Runs every (method, m, repetition) cell on `graph`. Each repetition draws
// one set of IC realizations used to score every method (common random
// numbers) and separate realizations for the optimizers. Rows come back
// sorted by (method, m, repetition).
absl::StatusOr<std::vector<ResultRow>> RunExperiment(
    const ExperimentConfig& config, const InfluenceGraph& graph);
// Loads config.dataset first.
absl::StatusOr<std::vector<ResultRow>> RunExperiment(
    const ExperimentConfig& config);

inline constexpr char kCsvHeader[] =
    "method,m,repetition,f_ic,std_err,wall_ms,ratio_upper,ratio_lower_value";

// Floats carry 6 significant digits; ratio columns are empty when absent.
std::string FormatCsv(const std::vector<ResultRow>& rows);
absl::Status WriteCsv(const std::vector<ResultRow>& rows,
                      const std::string& path);
absl::StatusOr<std::vector<ResultRow>> ParseCsv(absl::string_view text);

}  // namespace imcpp

#endif  // IMCPP_EXPERIMENT_H_
