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

#ifndef EAMEX_CORE_TYPES_H_
#define EAMEX_CORE_TYPES_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eamex/core/matrix.h"

namespace eamex {

enum class Task { kClassification, kRegression };

std::string_view TaskName(Task task);
// Accepts "classification" or "regression".
Task ParseTask(std::string_view name);

// Tolerance on the unit-sum invariants of normalized vectors.
inline constexpr double kUnitSumTolerance = 1e-9;

// Tabular dataset: M x d finite features, a target and a declared task.
// Classification targets are class ids in [0, num_classes).
class Dataset {
 public:
  // Validates every invariant. `num_classes` = 0 infers max(target) + 1.
  Dataset(Matrix features, std::vector<std::string> feature_names,
          std::vector<double> target, Task task, int num_classes = 0);

  const Matrix& features() const { return features_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  const std::vector<double>& target() const { return target_; }
  Task task() const { return task_; }
  // 0 for regression.
  int num_classes() const { return num_classes_; }
  std::size_t num_samples() const { return features_.rows(); }
  std::size_t num_features() const { return features_.cols(); }

  // Throws ValidationError for an unknown name.
  std::size_t FeatureIndex(std::string_view name) const;

 private:
  Matrix features_;
  std::vector<std::string> feature_names_;
  std::vector<double> target_;
  Task task_;
  int num_classes_ = 0;
};

// Model outputs for a batch of rows: class ids or reals, plus class
// probabilities for classification models that expose them.
class PredictionSet {
 public:
  PredictionSet() = default;
  explicit PredictionSet(std::vector<double> values,
                         std::optional<Matrix> probabilities = std::nullopt);

  const std::vector<double>& values() const { return values_; }
  const std::optional<Matrix>& probabilities() const { return probabilities_; }
  std::size_t size() const { return values_.size(); }

  // Checks length against the dataset and label ranges against its task.
  void ValidateFor(const Dataset& dataset) const;

  // Scalar output used by explainers: P(class 1) for binary classification
  // (the predicted label as 0/1 when probabilities are absent), the
  // prediction itself for regression.
  std::vector<double> ScalarOutput(Task task) const;

  // Per-class output columns: probabilities when present, else label
  // indicators.
  Matrix ClassOutputs(int num_classes) const;

 private:
  std::vector<double> values_;
  std::optional<Matrix> probabilities_;
};

// Normalized global importance: a probability vector over the features.
class FeatureImportance {
 public:
  FeatureImportance(std::vector<double> values,
                    std::vector<std::string> feature_names);

  const std::vector<double>& values() const { return values_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
  std::vector<std::string> feature_names_;
};

// Per-sample importances, every row non-negative and summing to one.
class LocalImportanceMatrix {
 public:
  LocalImportanceMatrix(Matrix rows, std::vector<std::string> feature_names);

  const Matrix& rows() const { return rows_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  std::size_t num_samples() const { return rows_.rows(); }
  std::size_t num_features() const { return rows_.cols(); }

 private:
  Matrix rows_;
  std::vector<std::string> feature_names_;
};

// Assignment of every sample to exactly one non-empty group.
class SubgroupPartition {
 public:
  SubgroupPartition(std::vector<int> group_labels,
                    std::vector<std::string> group_names);

  const std::vector<int>& group_labels() const { return group_labels_; }
  const std::vector<std::string>& group_names() const { return group_names_; }
  std::size_t num_groups() const { return group_names_.size(); }

  // Sample indices of group `g`, ascending.
  std::vector<std::size_t> Members(std::size_t g) const;

 private:
  std::vector<int> group_labels_;
  std::vector<std::string> group_names_;
};

}  // namespace eamex

#endif  // EAMEX_CORE_TYPES_H_
