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

#ifndef EAMEX_REPORT_SUITE_H_
#define EAMEX_REPORT_SUITE_H_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "eamex/core/types.h"
#include "eamex/models/model.h"
#include "eamex/report/config.h"
#include "eamex/report/report.h"

namespace eamex {

struct Families {
  bool global = true;
  bool local = true;
  bool surrogate = true;

  std::vector<std::string> Names() const;
};

// One model to evaluate. Built-in kinds are fitted on the dataset,
// `predictions` backs a precomputed table, `command` launches an external
// process. A non-null `handle` is used as is.
struct ModelEntry {
  std::string name;
  ModelKind kind = ModelKind::kBuiltinLinear;
  std::string command;
  std::optional<PredictionSet> predictions;
  ModelHandle handle;
};

// Fully in-memory suite input.
struct SuiteInput {
  Dataset dataset;
  std::vector<ModelEntry> models;
  std::optional<FeatureImportance> global_importance;  // else permutation
  std::optional<LocalImportanceMatrix> local_importance;  // else occlusion
  std::string global_source = "permutation";
  std::string local_source = "occlusion";
  std::map<std::string, std::string> input_digests;
  SuiteParams params;
};

struct RunOptions {
  Families families;
  // Models evaluated concurrently; results do not depend on it.
  int jobs = 1;
  std::chrono::milliseconds timeout{30000};
};

ModelHandle ResolveModel(const ModelEntry& entry, const Dataset& dataset,
                         std::chrono::milliseconds timeout);

// Hex SHA-256 over the dataset's task, names, target and feature values.
std::string DatasetDigest(const Dataset& dataset);
std::string Sha256Hex(std::string_view bytes);

// Reads dataset, prediction and importance files named by the config.
SuiteInput LoadSuiteInput(const SuiteConfig& config);

MetricsReport RunSuite(const SuiteInput& input, const RunOptions& options = {});
MetricsReport RunSuite(const SuiteConfig& config, const RunOptions& options = {});

// Single stored-prediction model named "model" evaluated on in-memory
// arrays. Local and global importances, when given, are raw values that go
// through the usual normalization.
MetricsReport ComputeMetrics(const Matrix& features,
                             const std::vector<std::string>& feature_names,
                             const std::vector<double>& target, Task task,
                             const PredictionSet& predictions,
                             const std::optional<Matrix>& local_importance,
                             const std::optional<std::vector<double>>& global_importance,
                             const SuiteParams& params);

}  // namespace eamex

#endif  // EAMEX_REPORT_SUITE_H_
