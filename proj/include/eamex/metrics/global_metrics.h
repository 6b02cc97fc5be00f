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

#ifndef EAMEX_METRICS_GLOBAL_METRICS_H_
#define EAMEX_METRICS_GLOBAL_METRICS_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eamex/core/types.h"
#include "eamex/explain/pdp.h"

namespace eamex {

inline constexpr double kDefaultAlpha = 0.8;
inline constexpr int kDefaultInterpPoints = 100;

// Jensen-Shannon divergence (base 2) between the importance distribution and
// the uniform distribution over the same features. In [0, 1]; 0 iff
// uniform. A single feature scores 0.
double SpreadDivergence(std::span<const double> importance);
double SpreadDivergence(const FeatureImportance& importance);

// Feature indices by descending importance, ties by ascending index.
std::vector<std::size_t> DescendingOrder(std::span<const double> importance);

// Smallest k such that the k most important features hold at least
// alpha * total mass. Coverage is tested with a 1e-12 relative slack so that
// e.g. ten features of 0.1 reach 0.8 at k = 8.
std::size_t CoverageCount(std::span<const double> importance, double alpha);

// Fraction of features needed to cover alpha of the total importance, in
// (0, 1]. alpha must lie in (0, 1].
double AlphaImportance(std::span<const double> importance,
                       double alpha = kDefaultAlpha);
double AlphaImportance(const FeatureImportance& importance,
                       double alpha = kDefaultAlpha);

// Fraction of consecutive derivative-sign pairs that disagree on the PDP
// after linear interpolation onto `interp_points` equally spaced x-values.
// Steps with |dPD| <= 1e-12 * max(1, max|PD|) carry no direction: they
// inherit the previous direction, and leading ones are skipped. The count is
// divided by interp_points - 2.
double FluctuationRatio(const PdpCurve& curve,
                        int interp_points = kDefaultInterpPoints);

struct FluctuationSummary {
  double average = 0.0;
  // Per feature; empty for features whose PDP was undefined.
  std::vector<std::optional<double>> per_feature;
  std::vector<std::size_t> excluded;
};

// `per_feature[j]` holds the curves of feature j (one, or one per class);
// an empty entry marks an excluded feature. A feature scores the mean over
// its curves and the average is the unweighted mean over included
// features. Throws ValidationError when every feature is excluded.
FluctuationSummary AverageFluctuation(
    std::span<const std::vector<PdpCurve>> per_feature,
    int interp_points = kDefaultInterpPoints);

enum class RankAlignmentStrategy {
  // Minimal prefix holding alpha of the importance mass.
  kMassCoverage,
  // The top ceil(alpha * d) features.
  kCountProportion,
};

std::string_view RankAlignmentStrategyName(RankAlignmentStrategy strategy);
RankAlignmentStrategy ParseRankAlignmentStrategy(std::string_view name);

// Top feature set under `strategy`, ascending indices.
std::vector<std::size_t> TopFeatureSet(std::span<const double> importance,
                                       double alpha,
                                       RankAlignmentStrategy strategy);

// Mean Jaccard similarity between the global top set and each group's top
// set.
double RankAlignment(
    const FeatureImportance& global,
    std::span<const FeatureImportance> groups, double alpha = kDefaultAlpha,
    RankAlignmentStrategy strategy = RankAlignmentStrategy::kMassCoverage);

// Jaccard similarity of two ascending index sets; two empty sets score 1.
double Jaccard(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace eamex

#endif  // EAMEX_METRICS_GLOBAL_METRICS_H_
