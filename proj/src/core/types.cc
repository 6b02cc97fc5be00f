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

#include "eamex/core/types.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "eamex/core/error.h"

namespace eamex {
namespace {

bool AllFinite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

void CheckNames(const std::vector<std::string>& names, std::size_t expected) {
  if (names.size() != expected) {
    throw ValidationError("expected " + std::to_string(expected) +
                          " feature names, got " +
                          std::to_string(names.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw ValidationError("duplicate feature name '" + name + "'");
    }
  }
}

bool IsClassId(double v) { return v >= 0 && v == std::floor(v); }

}  // namespace

std::string_view TaskName(Task task) {
  return task == Task::kClassification ? "classification" : "regression";
}

Task ParseTask(std::string_view name) {
  if (name == "classification") return Task::kClassification;
  if (name == "regression") return Task::kRegression;
  throw ValidationError("unknown task '" + std::string(name) +
                        "' (expected classification or regression)");
}

Dataset::Dataset(Matrix features, std::vector<std::string> feature_names,
                 std::vector<double> target, Task task, int num_classes)
    : features_(std::move(features)),
      feature_names_(std::move(feature_names)),
      target_(std::move(target)),
      task_(task) {
  if (features_.rows() < 2) {
    throw ValidationError("dataset needs at least 2 samples");
  }
  if (features_.cols() < 1) {
    throw ValidationError("dataset needs at least 1 feature");
  }
  CheckNames(feature_names_, features_.cols());
  if (target_.size() != features_.rows()) {
    throw ValidationError("target has " + std::to_string(target_.size()) +
                          " entries for " + std::to_string(features_.rows()) +
                          " samples");
  }
  if (!AllFinite(features_.data())) {
    throw ValidationError("features contain NaN or infinite values");
  }
  if (!AllFinite(target_)) {
    throw ValidationError("target contains NaN or infinite values");
  }
  if (task_ == Task::kClassification) {
    std::set<double> present;
    for (double y : target_) {
      if (!IsClassId(y)) {
        throw ValidationError("classification target " + std::to_string(y) +
                              " is not a class id");
      }
      present.insert(y);
    }
    const int inferred = static_cast<int>(*present.rbegin()) + 1;
    num_classes_ = num_classes > 0 ? num_classes : inferred;
    if (inferred > num_classes_) {
      throw ValidationError("class id " + std::to_string(inferred - 1) +
                            " out of range for " +
                            std::to_string(num_classes_) + " classes");
    }
    if (num_classes_ < 2 || present.size() < 2) {
      throw ValidationError("classification target needs at least 2 classes");
    }
  }
}

std::size_t Dataset::FeatureIndex(std::string_view name) const {
  const auto it =
      std::find(feature_names_.begin(), feature_names_.end(), name);
  if (it == feature_names_.end()) {
    throw ValidationError("unknown feature '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - feature_names_.begin());
}

PredictionSet::PredictionSet(std::vector<double> values,
                             std::optional<Matrix> probabilities)
    : values_(std::move(values)), probabilities_(std::move(probabilities)) {
  if (!AllFinite(values_)) {
    throw ValidationError("predictions contain NaN or infinite values");
  }
  if (!probabilities_) return;
  if (probabilities_->rows() != values_.size()) {
    throw ValidationError("probability rows do not match prediction count");
  }
  for (std::size_t i = 0; i < probabilities_->rows(); ++i) {
    const auto row = probabilities_->Row(i);
    double sum = 0.0;
    for (double p : row) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("probability outside [0,1] in row " +
                              std::to_string(i));
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kUnitSumTolerance) {
      throw ValidationError("probability row " + std::to_string(i) +
                            " does not sum to 1");
    }
  }
}

void PredictionSet::ValidateFor(const Dataset& dataset) const {
  if (values_.size() != dataset.num_samples()) {
    throw ValidationError("got " + std::to_string(values_.size()) +
                          " predictions for " +
                          std::to_string(dataset.num_samples()) + " samples");
  }
  if (dataset.task() != Task::kClassification) {
    if (probabilities_) {
      throw ValidationError("regression predictions cannot carry probabilities");
    }
    return;
  }
  for (double v : values_) {
    if (!IsClassId(v) || v >= dataset.num_classes()) {
      throw ValidationError("predicted label " + std::to_string(v) +
                            " is not a valid class id");
    }
  }
  if (probabilities_ &&
      probabilities_->cols() != static_cast<std::size_t>(dataset.num_classes())) {
    throw ValidationError("expected " + std::to_string(dataset.num_classes()) +
                          " probability columns, got " +
                          std::to_string(probabilities_->cols()));
  }
}

std::vector<double> PredictionSet::ScalarOutput(Task task) const {
  if (task == Task::kRegression) return values_;
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out[i] = probabilities_ && probabilities_->cols() > 1
                 ? (*probabilities_)(i, 1)
                 : (values_[i] == 1.0 ? 1.0 : 0.0);
  }
  return out;
}

Matrix PredictionSet::ClassOutputs(int num_classes) const {
  if (probabilities_) return *probabilities_;
  Matrix out(values_.size(), static_cast<std::size_t>(num_classes));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto c = static_cast<std::size_t>(values_[i]);
    if (c < out.cols()) out(i, c) = 1.0;
  }
  return out;
}

FeatureImportance::FeatureImportance(std::vector<double> values,
                                     std::vector<std::string> feature_names)
    : values_(std::move(values)), feature_names_(std::move(feature_names)) {
  if (values_.empty()) {
    throw ValidationError("feature importance needs at least 1 feature");
  }
  CheckNames(feature_names_, values_.size());
  double sum = 0.0;
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("feature importance entries must be finite and >= 0");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kUnitSumTolerance) {
    throw ValidationError("feature importance does not sum to 1");
  }
}

LocalImportanceMatrix::LocalImportanceMatrix(
    Matrix rows, std::vector<std::string> feature_names)
    : rows_(std::move(rows)), feature_names_(std::move(feature_names)) {
  CheckNames(feature_names_, rows_.cols());
  for (std::size_t i = 0; i < rows_.rows(); ++i) {
    double sum = 0.0;
    for (double v : rows_.Row(i)) {
      if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError("local importance row " + std::to_string(i) +
                              " has a negative or non-finite entry");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kUnitSumTolerance) {
      throw ValidationError("local importance row " + std::to_string(i) +
                            " does not sum to 1");
    }
  }
}

SubgroupPartition::SubgroupPartition(std::vector<int> group_labels,
                                     std::vector<std::string> group_names)
    : group_labels_(std::move(group_labels)),
      group_names_(std::move(group_names)) {
  std::vector<std::size_t> counts(group_names_.size(), 0);
  for (int g : group_labels_) {
    if (g < 0 || static_cast<std::size_t>(g) >= group_names_.size()) {
      throw ValidationError("group label " + std::to_string(g) +
                            " out of range");
    }
    ++counts[static_cast<std::size_t>(g)];
  }
  for (std::size_t g = 0; g < counts.size(); ++g) {
    if (counts[g] == 0) {
      throw ValidationError("group '" + group_names_[g] + "' is empty");
    }
  }
}

std::vector<std::size_t> SubgroupPartition::Members(std::size_t g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group_labels_.size(); ++i) {
    if (static_cast<std::size_t>(group_labels_[i]) == g) out.push_back(i);
  }
  return out;
}

}  // namespace eamex
