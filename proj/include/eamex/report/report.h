/*
 * Copyright 2026 The EAMEX Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EAMEX_REPORT_REPORT_H_
#define EAMEX_REPORT_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "eamex/metrics/global_metrics.h"
#include "eamex/metrics/local_metrics.h"
#include "eamex/models/efficacy.h"

namespace eamex {

inline constexpr std::string_view kReportVersion = "eamex-report/1";

// Metric keys, in radar axis order.
inline constexpr std::string_view kSpreadDivergence = "spread_divergence";
inline constexpr std::string_view kAlphaScore = "alpha_score";
inline constexpr std::string_view kFluctuationRatio = "fluctuation_ratio";
inline constexpr std::string_view kRankAlignment = "rank_alignment";
inline constexpr std::string_view kRankConsistency = "rank_consistency";
inline constexpr std::string_view kImportanceStability = "importance_stability";
inline constexpr std::string_view kDegradation = "degradation";
inline constexpr std::string_view kFidelity = "fidelity";
inline constexpr std::string_view kFeatureStability = "feature_stability";

struct GlobalReport {
  std::optional<double> spread_divergence;
  std::optional<double> alpha_score;
  std::optional<double> fluctuation_ratio;
  std::optional<double> rank_alignment;
  std::vector<double> importance;
  // Null entries are features whose PDP is undefined.
  std::vector<std::optional<double>> fluctuation_per_feature;
  std::vector<std::string> subgroup_names;
  std::vector<std::vector<double>> subgroup_importance;
};

// Values in the defining orientation (1 = ideal). The table shows 1 - x.
struct LocalReport {
  std::optional<double> rank_consistency;
  std::optional<double> importance_stability;
  std::vector<double> consistency_per_feature;
  std::vector<double> stability_per_feature;
};

struct SurrogateReport {
  std::optional<double> degradation;
  std::optional<double> fidelity;
  std::optional<double> feature_stability;
  std::vector<std::size_t> selected_features;
  std::vector<std::vector<std::size_t>> bootstrap_feature_sets;
  nlohmann::ordered_json tree;  // null when not fitted
};

struct ModelReport {
  std::string name;
  std::string kind;
  EfficacyScores efficacy;
  GlobalReport global;
  LocalReport local;
  SurrogateReport surrogate;
  // Metric key -> reason, for every metric that was not computed.
  std::map<std::string, std::string> skipped;
  // Kept in memory for matrix export; not part of the JSON document.
  std::optional<RankDeviationMap> deviation_map;

  std::optional<double> Metric(std::string_view key) const;
};

struct RunConfig {
  std::uint64_t seed = 0;
  double alpha = kDefaultAlpha;
  int grid_size = 20;
  int interp_points = kDefaultInterpPoints;
  int repeats = 5;
  int bootstraps = 20;
  RankAlignmentStrategy strategy = RankAlignmentStrategy::kMassCoverage;
  std::string global_explainer;
  std::string local_explainer;
  std::vector<std::string> families;
  std::string task;
  std::size_t num_samples = 0;
  std::size_t num_features = 0;
  int num_classes = 0;
  std::vector<std::string> feature_names;
  std::string dataset_digest;
  // Digests of ingested explainer files, keyed by "global" / "local".
  std::map<std::string, std::string> input_digests;
};

struct MetricsReport {
  RunConfig run_config;
  std::vector<ModelReport> models;
};

// Ideal value of each radar metric, in the orientation shown in tables.
const std::vector<std::pair<std::string_view, double>>& ReferenceValues();

nlohmann::ordered_json ToJson(const MetricsReport& report);
MetricsReport ReportFromJson(const nlohmann::ordered_json& json);

// Two-space indented JSON with a trailing newline.
std::string DumpReport(const MetricsReport& report);
MetricsReport ParseReport(std::string_view text);

}  // namespace eamex

#endif  // EAMEX_REPORT_REPORT_H_
