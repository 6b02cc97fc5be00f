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

#include "eamex/surrogate/decision_tree.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "eamex/core/error.h"
#include "eamex/models/model.h"

namespace eamex {
namespace {

// Impurity sums are n * impurity so children add up directly.
double GiniSum(std::span<const double> counts, double n) {
  if (n <= 0) return 0.0;
  double sq = 0.0;
  for (double c : counts) sq += c * c;
  return n - sq / n;
}

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double gain = -std::numeric_limits<double>::infinity();
};

double Midpoint(double lo, double hi) {
  const double mid = lo + (hi - lo) / 2.0;
  return mid < hi ? mid : lo;
}

}  // namespace

DecisionTree DecisionTree::Fit(const Matrix& features,
                               std::span<const double> target, Task task,
                               int num_classes, TreeOptions options) {
  if (features.rows() != target.size()) {
    throw ValidationError("tree target length does not match feature rows");
  }
  if (features.rows() == 0) throw ValidationError("cannot fit a tree on 0 rows");
  if (task == Task::kClassification) {
    for (double y : target) {
      if (y < 0 || y >= num_classes || y != std::floor(y)) {
        throw ValidationError("tree classification target is not a class id");
      }
    }
  }
  DecisionTree tree;
  tree.task_ = task;
  tree.num_classes_ = task == Task::kClassification ? num_classes : 0;
  std::vector<std::size_t> indices(features.rows());
  std::iota(indices.begin(), indices.end(), 0);
  tree.Grow(features, target, indices, 0, options);
  return tree;
}

int DecisionTree::Grow(const Matrix& features, std::span<const double> target,
                       std::vector<std::size_t>& indices, int depth,
                       const TreeOptions& options) {
  const auto n = static_cast<double>(indices.size());
  const bool classification = task_ == Task::kClassification;
  const auto c = static_cast<std::size_t>(num_classes_);

  TreeNode node;
  node.num_samples = indices.size();
  double node_mean = 0.0;
  std::vector<double> counts(classification ? c : 0, 0.0);
  if (classification) {
    for (std::size_t i : indices) counts[static_cast<std::size_t>(target[i])] += 1;
    node.value.resize(c);
    for (std::size_t k = 0; k < c; ++k) node.value[k] = counts[k] / n;
  } else {
    for (std::size_t i : indices) node_mean += target[i];
    node_mean /= n;
    node.value = {node_mean};
  }

  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(node);

  const bool pure = std::all_of(indices.begin(), indices.end(), [&](auto i) {
    return target[i] == target[indices.front()];
  });
  if (depth >= options.max_depth || indices.size() < 2 || pure) return id;

  // Regression sums run on targets centered at the node mean.
  double parent_sum;
  if (classification) {
    parent_sum = GiniSum(counts, n);
  } else {
    parent_sum = 0.0;
    for (std::size_t i : indices) {
      parent_sum += (target[i] - node_mean) * (target[i] - node_mean);
    }
  }
  const double tie_eps = 1e-12 * std::max(1.0, parent_sum);

  Split best;
  std::vector<std::size_t> order = indices;
  std::vector<double> left_counts(counts.size());
  std::vector<double> right_counts(counts.size());
  for (std::size_t f = 0; f < features.cols(); ++f) {
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return features(a, f) < features(b, f);
    });
    std::fill(left_counts.begin(), left_counts.end(), 0.0);
    right_counts = counts;
    double left_s = 0.0, left_ss = 0.0;
    double right_s = 0.0, right_ss = 0.0;
    if (!classification) {
      for (std::size_t i : order) {
        const double y = target[i] - node_mean;
        right_s += y;
        right_ss += y * y;
      }
    }
    for (std::size_t pos = 0; pos + 1 < order.size(); ++pos) {
      const std::size_t i = order[pos];
      const double nl = static_cast<double>(pos + 1);
      const double nr = n - nl;
      if (classification) {
        const auto k = static_cast<std::size_t>(target[i]);
        left_counts[k] += 1;
        right_counts[k] -= 1;
      } else {
        const double y = target[i] - node_mean;
        left_s += y;
        left_ss += y * y;
        right_s -= y;
        right_ss -= y * y;
      }
      const double lo = features(i, f);
      const double hi = features(order[pos + 1], f);
      if (!(lo < hi)) continue;
      double children;
      if (classification) {
        children = GiniSum(left_counts, nl) + GiniSum(right_counts, nr);
      } else {
        children = std::max(0.0, left_ss - left_s * left_s / nl) +
                   std::max(0.0, right_ss - right_s * right_s / nr);
      }
      const double gain = parent_sum - children;
      if (gain > best.gain + tie_eps) {
        best.feature = static_cast<int>(f);
        best.threshold = Midpoint(lo, hi);
        best.gain = gain;
      }
    }
  }
  if (best.feature < 0) return id;

  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  for (std::size_t i : indices) {
    (features(i, static_cast<std::size_t>(best.feature)) <= best.threshold
         ? left
         : right)
        .push_back(i);
  }
  const int left_id = Grow(features, target, left, depth + 1, options);
  const int right_id = Grow(features, target, right, depth + 1, options);
  TreeNode& self = nodes_[static_cast<std::size_t>(id)];
  self.feature = best.feature;
  self.threshold = best.threshold;
  self.left = left_id;
  self.right = right_id;
  return id;
}

int DecisionTree::Depth() const {
  // Children are always appended after their parent.
  std::vector<int> depth(nodes_.size(), 0);
  int deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& node = nodes_[i];
    if (node.is_leaf()) {
      deepest = std::max(deepest, depth[i]);
      continue;
    }
    depth[static_cast<std::size_t>(node.left)] = depth[i] + 1;
    depth[static_cast<std::size_t>(node.right)] = depth[i] + 1;
  }
  return deepest;
}

const TreeNode& DecisionTree::Leaf(std::span<const double> row) const {
  const TreeNode* node = &nodes_.front();
  while (!node->is_leaf()) {
    const double x = row[static_cast<std::size_t>(node->feature)];
    node = &nodes_[static_cast<std::size_t>(x <= node->threshold ? node->left
                                                                  : node->right)];
  }
  return *node;
}

double DecisionTree::PredictValue(std::span<const double> row) const {
  const TreeNode& leaf = Leaf(row);
  if (task_ == Task::kClassification) {
    return static_cast<double>(ArgMax(leaf.value));
  }
  return leaf.value.front();
}

PredictionSet DecisionTree::Predict(const Matrix& rows) const {
  std::vector<double> values(rows.rows());
  if (task_ == Task::kRegression) {
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      values[i] = PredictValue(rows.Row(i));
    }
    return PredictionSet(std::move(values));
  }
  Matrix proba(rows.rows(), static_cast<std::size_t>(num_classes_));
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const TreeNode& leaf = Leaf(rows.Row(i));
    std::copy(leaf.value.begin(), leaf.value.end(), proba.Row(i).begin());
    values[i] = static_cast<double>(ArgMax(leaf.value));
  }
  return PredictionSet(std::move(values), std::move(proba));
}

std::vector<std::size_t> DecisionTree::UsedFeatures() const {
  std::vector<std::size_t> used;
  for (const auto& node : nodes_) {
    if (!node.is_leaf()) used.push_back(static_cast<std::size_t>(node.feature));
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

nlohmann::ordered_json DecisionTree::ToJson() const {
  auto emit = [this](auto&& self, int id) -> nlohmann::ordered_json {
    const TreeNode& node = nodes_[static_cast<std::size_t>(id)];
    nlohmann::ordered_json out;
    if (node.is_leaf()) {
      if (task_ == Task::kRegression) {
        out["value"] = node.value.front();
      } else {
        out["value"] = node.value;
      }
      return out;
    }
    out["feature"] = node.feature;
    out["threshold"] = node.threshold;
    out["left"] = self(self, node.left);
    out["right"] = self(self, node.right);
    return out;
  };
  return emit(emit, 0);
}

}  // namespace eamex
