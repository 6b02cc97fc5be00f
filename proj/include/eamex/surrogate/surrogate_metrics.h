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

#ifndef EAMEX_SURROGATE_SURROGATE_METRICS_H_
#define EAMEX_SURROGATE_SURROGATE_METRICS_H_

#include <span>
#include <vector>

#include "eamex/core/rng.h"
#include "eamex/core/types.h"
#include "eamex/surrogate/decision_tree.h"

namespace eamex {

inline constexpr int kDefaultBootstraps = 20;

// Relative performance gap between the original model (P_b) and the
// surrogate (P_s). Classification: 2(P_b - P_s)/(P_b + P_s) on accuracies,
// unclamped. Regression: max(0, 2(P_s - P_b)/(P_b + P_s)) on MSEs. Both
// give 0 when P_b + P_s = 0.
double PerformanceDegradation(double original_performance,
                              double surrogate_performance, Task task);

// Classification: agreement rate. Regression: 1 - mean(|p - s| /
// max(|p|, |s|)), a term with both values 0 counting as 0.
double SurrogateFidelity(std::span<const double> original_predictions,
                         std::span<const double> surrogate_predictions,
                         Task task);

struct FeatureStabilityResult {
  double feature_stability = 0.0;
  std::vector<std::size_t> selected_features;
  std::vector<std::vector<std::size_t>> bootstrap_feature_sets;
};

// Mean Jaccard similarity between the features used by the surrogate fitted
// on (features, predictions) and those used by surrogates refitted on
// `bootstraps` resamples with replacement. Bootstrap i draws from
// its own stream of `rng`. Empty-vs-empty scores 1.
FeatureStabilityResult SurrogateFeatureStability(
    const Matrix& features, std::span<const double> predictions, Task task,
    int num_classes, int bootstraps, const RngState& rng,
    TreeOptions options = {});

struct SurrogateMetrics {
  double degradation = 0.0;
  double fidelity = 0.0;
  double feature_stability = 0.0;
  std::vector<std::size_t> selected_features;
  std::vector<std::vector<std::size_t>> bootstrap_feature_sets;
  DecisionTree tree;
};

// Fits the surrogate on the model's predictions and computes all three
// metrics; degradation compares both models against the true target.
SurrogateMetrics EvaluateSurrogate(const Dataset& dataset,
                                   const PredictionSet& predictions,
                                   int bootstraps, const RngState& rng,
                                   TreeOptions options = {});

}  // namespace eamex

#endif  // EAMEX_SURROGATE_SURROGATE_METRICS_H_
