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

#ifndef EAMEX_SURROGATE_DECISION_TREE_H_
#define EAMEX_SURROGATE_DECISION_TREE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "eamex/core/matrix.h"
#include "eamex/core/types.h"
#include "json.hpp"

namespace eamex {

struct TreeNode {
  // -1 on leaves.
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  // Class distribution (classification) or {mean} (regression).
  std::vector<double> value;
  std::size_t num_samples = 0;

  bool is_leaf() const { return feature < 0; }
};

struct TreeOptions {
  // Root sits at depth 0, so depth 3 allows up to 8 leaves.
  int max_depth = 3;
};

// Axis-aligned binary tree grown greedily (CART). Rows with
// x[feature] <= threshold go left.
class DecisionTree {
 public:
  // Classification targets are class ids in [0, num_classes) scored by Gini
  // impurity; regression targets are reals scored by squared error.
  // Candidate thresholds are midpoints between consecutive distinct values;
  // the split with the largest impurity decrease wins, ties going to the
  // lower feature index and then the lower threshold. Nodes stop at
  // max_depth, below 2 samples, or when the target is pure.
  static DecisionTree Fit(const Matrix& features,
                          std::span<const double> target, Task task,
                          int num_classes, TreeOptions options = {});

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  Task task() const { return task_; }
  int num_classes() const { return num_classes_; }

  // Depth of the deepest leaf; 0 for a single leaf.
  int Depth() const;

  const TreeNode& Leaf(std::span<const double> row) const;
  // Majority class (lowest id on ties) or leaf mean.
  double PredictValue(std::span<const double> row) const;
  PredictionSet Predict(const Matrix& rows) const;

  // Ascending feature indices used by at least one internal node.
  std::vector<std::size_t> UsedFeatures() const;

  // Nested {"feature", "threshold", "left", "right"} / {"value"} objects.
  nlohmann::ordered_json ToJson() const;

 private:
  int Grow(const Matrix& features, std::span<const double> target,
           std::vector<std::size_t>& indices, int depth,
           const TreeOptions& options);

  std::vector<TreeNode> nodes_;
  Task task_ = Task::kRegression;
  int num_classes_ = 0;
};

}  // namespace eamex

#endif  // EAMEX_SURROGATE_DECISION_TREE_H_
