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

#ifndef EAMEX_REPORT_CONFIG_H_
#define EAMEX_REPORT_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eamex/core/types.h"
#include "eamex/metrics/global_metrics.h"
#include "eamex/models/model.h"

namespace eamex {

struct SuiteParams {
  double alpha = kDefaultAlpha;
  int grid_size = 20;
  int interp_points = kDefaultInterpPoints;
  int repeats = 5;
  int bootstraps = 20;
  RankAlignmentStrategy strategy = RankAlignmentStrategy::kMassCoverage;
  std::uint64_t seed = 0;

  void Validate() const;
};

struct ModelConfig {
  std::string name;
  ModelKind kind = ModelKind::kBuiltinLinear;
  std::string command;                    // external
  std::filesystem::path predictions_path;  // predictions
};

// Parsed run configuration. Relative paths are resolved against the
// directory holding the config file.
struct SuiteConfig {
  std::filesystem::path dataset_path;
  std::string target;
  Task task = Task::kRegression;
  std::vector<ModelConfig> models;
  // Empty means the built-in explainer (permutation / occlusion).
  std::optional<std::filesystem::path> global_importance_path;
  std::optional<std::filesystem::path> local_importance_path;
  SuiteParams params;
};

// "linear", "logistic", "tree", "predictions" or "external".
ModelKind ParseModelKind(std::string_view name);

SuiteConfig ParseConfig(std::string_view text,
                        const std::filesystem::path& base_dir);
SuiteConfig LoadConfig(const std::filesystem::path& path);

}  // namespace eamex

#endif  // EAMEX_REPORT_CONFIG_H_
