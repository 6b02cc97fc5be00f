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

#include "eamex/surrogate/surrogate_metrics.h"

#include <algorithm>
#include <cmath>

#include "eamex/core/error.h"
#include "eamex/metrics/global_metrics.h"
#include "eamex/models/efficacy.h"

namespace eamex {
namespace {

// Keeps bootstrap streams apart from the per-feature permutation streams.
constexpr std::uint64_t kBootstrapStreamBase = std::uint64_t{1} << 32;

}  // namespace

double PerformanceDegradation(double original_performance,
                              double surrogate_performance, Task task) {
  const double sum = original_performance + surrogate_performance;
  if (sum == 0.0) return 0.0;
  if (task == Task::kClassification) {
    return 2.0 * (original_performance - surrogate_performance) / sum;
  }
  return std::max(0.0, 2.0 * (surrogate_performance - original_performance) / sum);
}

double SurrogateFidelity(std::span<const double> original_predictions,
                         std::span<const double> surrogate_predictions,
                         Task task) {
  if (original_predictions.size() != surrogate_predictions.size() ||
      original_predictions.empty()) {
    throw ValidationError("fidelity inputs must be non-empty and equally long");
  }
  if (task == Task::kClassification) {
    return Accuracy(original_predictions, surrogate_predictions);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < original_predictions.size(); ++i) {
    const double p = original_predictions[i];
    const double s = surrogate_predictions[i];
    const double denom = std::max(std::abs(p), std::abs(s));
    if (denom > 0.0) total += std::abs(p - s) / denom;
  }
  return 1.0 - total / static_cast<double>(original_predictions.size());
}

FeatureStabilityResult SurrogateFeatureStability(
    const Matrix& features, std::span<const double> predictions, Task task,
    int num_classes, int bootstraps, const RngState& rng, TreeOptions options) {
  if (bootstraps < 1) throw ValidationError("bootstrap count must be >= 1");
  FeatureStabilityResult result;
  result.selected_features =
      DecisionTree::Fit(features, predictions, task, num_classes, options)
          .UsedFeatures();

  const std::size_t m = features.rows();
  std::vector<std::size_t> sample(m);
  std::vector<double> target(m);
  double total = 0.0;
  for (int b = 0; b < bootstraps; ++b) {
    Pcg32 gen = rng.Stream(kBootstrapStreamBase + static_cast<std::uint64_t>(b));
    for (std::size_t i = 0; i < m; ++i) {
      sample[i] = gen.Bounded(static_cast<std::uint32_t>(m));
      target[i] = predictions[sample[i]];
    }
    const DecisionTree tree = DecisionTree::Fit(features.SelectRows(sample), target,
                                                task, num_classes, options);
    result.bootstrap_feature_sets.push_back(tree.UsedFeatures());
    total += Jaccard(result.selected_features, result.bootstrap_feature_sets.back());
  }
  result.feature_stability = total / bootstraps;
  return result;
}

SurrogateMetrics EvaluateSurrogate(const Dataset& dataset,
                                   const PredictionSet& predictions,
                                   int bootstraps, const RngState& rng,
                                   TreeOptions options) {
  predictions.ValidateFor(dataset);
  const Task task = dataset.task();
  const auto& y_pred = predictions.values();
  SurrogateMetrics metrics{
      .tree = DecisionTree::Fit(dataset.features(), y_pred, task,
                                dataset.num_classes(), options)};
  const std::vector<double> y_surrogate =
      metrics.tree.Predict(dataset.features()).values();

  const auto& truth = dataset.target();
  if (task == Task::kClassification) {
    metrics.degradation = PerformanceDegradation(
        Accuracy(truth, y_pred), Accuracy(truth, y_surrogate), task);
  } else {
    metrics.degradation = PerformanceDegradation(
        MeanSquaredError(truth, y_pred), MeanSquaredError(truth, y_surrogate), task);
  }
  metrics.fidelity = SurrogateFidelity(y_pred, y_surrogate, task);

  FeatureStabilityResult stability = SurrogateFeatureStability(
      dataset.features(), y_pred, task, dataset.num_classes(), bootstraps, rng,
      options);
  metrics.feature_stability = stability.feature_stability;
  metrics.selected_features = std::move(stability.selected_features);
  metrics.bootstrap_feature_sets = std::move(stability.bootstrap_feature_sets);
  return metrics;
}

}  // namespace eamex
