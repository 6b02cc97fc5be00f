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

#include "eamex/metrics/global_metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eamex/core/error.h"

namespace eamex {
namespace {

void CheckAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
}

// KL(p || m) restricted to entries with p > 0.
double KlBase2(std::span<const double> p, std::span<const double> m) {
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] > 0.0) sum += p[j] * std::log2(p[j] / m[j]);
  }
  return sum;
}

// Direction of each step: +1, -1 or 0 for "no direction".
int Direction(double delta, double threshold) {
  if (std::abs(delta) <= threshold) return 0;
  return delta > 0 ? 1 : -1;
}

}  // namespace

double SpreadDivergence(std::span<const double> importance) {
  const std::size_t d = importance.size();
  if (d <= 1) return 0.0;
  const std::vector<double> uniform(d, 1.0 / static_cast<double>(d));
  std::vector<double> mid(d);
  for (std::size_t j = 0; j < d; ++j) mid[j] = 0.5 * (importance[j] + uniform[j]);
  const double jsd = 0.5 * KlBase2(importance, mid) + 0.5 * KlBase2(uniform, mid);
  return std::clamp(jsd, 0.0, 1.0);
}

double SpreadDivergence(const FeatureImportance& importance) {
  return SpreadDivergence(importance.values());
}

std::vector<std::size_t> DescendingOrder(std::span<const double> importance) {
  std::vector<std::size_t> order(importance.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return importance[a] > importance[b];
  });
  return order;
}

std::size_t CoverageCount(std::span<const double> importance, double alpha) {
  CheckAlpha(alpha);
  if (importance.empty()) throw ValidationError("empty importance vector");
  const double total = std::accumulate(importance.begin(), importance.end(), 0.0);
  const double target = alpha * total - 1e-12 * total;
  const std::vector<std::size_t> order = DescendingOrder(importance);
  double cumulative = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    cumulative += importance[order[k]];
    if (cumulative >= target) return k + 1;
  }
  return order.size();
}

double AlphaImportance(std::span<const double> importance, double alpha) {
  return static_cast<double>(CoverageCount(importance, alpha)) /
         static_cast<double>(importance.size());
}

double AlphaImportance(const FeatureImportance& importance, double alpha) {
  return AlphaImportance(importance.values(), alpha);
}

double FluctuationRatio(const PdpCurve& curve, int interp_points) {
  if (interp_points < 3) {
    throw ValidationError("fluctuation ratio needs at least 3 interpolation points");
  }
  const auto& grid = curve.grid;
  const auto& values = curve.values;
  const auto n = static_cast<std::size_t>(interp_points);
  const double lo = grid.front();
  const double hi = grid.back();

  std::vector<double> interp(n);
  std::size_t segment = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = k + 1 == n ? hi
                                : lo + (hi - lo) * static_cast<double>(k) /
                                           static_cast<double>(n - 1);
    while (segment + 2 < grid.size() && x > grid[segment + 1]) ++segment;
    const double x0 = grid[segment];
    const double x1 = grid[segment + 1];
    const double t = std::clamp((x - x0) / (x1 - x0), 0.0, 1.0);
    interp[k] = values[segment] + t * (values[segment + 1] - values[segment]);
  }

  double scale = 1.0;
  for (double v : interp) scale = std::max(scale, std::abs(v));
  const double threshold = 1e-12 * scale;

  int previous = 0;
  std::size_t changes = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const int direction = Direction(interp[k + 1] - interp[k], threshold);
    if (direction == 0) continue;
    if (previous != 0 && direction != previous) ++changes;
    previous = direction;
  }
  return static_cast<double>(changes) / static_cast<double>(n - 2);
}

FluctuationSummary AverageFluctuation(
    std::span<const std::vector<PdpCurve>> per_feature, int interp_points) {
  FluctuationSummary summary;
  summary.per_feature.resize(per_feature.size());
  double total = 0.0;
  std::size_t included = 0;
  for (std::size_t j = 0; j < per_feature.size(); ++j) {
    const auto& curves = per_feature[j];
    if (curves.empty()) {
      summary.excluded.push_back(j);
      continue;
    }
    double feature_total = 0.0;
    for (const auto& curve : curves) {
      feature_total += FluctuationRatio(curve, interp_points);
    }
    const double ratio = feature_total / static_cast<double>(curves.size());
    summary.per_feature[j] = ratio;
    total += ratio;
    ++included;
  }
  if (included == 0) {
    throw ValidationError("no feature has a defined PDP; fluctuation undefined");
  }
  summary.average = total / static_cast<double>(included);
  return summary;
}

std::string_view RankAlignmentStrategyName(RankAlignmentStrategy strategy) {
  return strategy == RankAlignmentStrategy::kMassCoverage ? "mass_coverage"
                                                          : "count_proportion";
}

RankAlignmentStrategy ParseRankAlignmentStrategy(std::string_view name) {
  if (name == "mass_coverage") return RankAlignmentStrategy::kMassCoverage;
  if (name == "count_proportion") return RankAlignmentStrategy::kCountProportion;
  throw ValidationError("unknown rank alignment strategy '" + std::string(name) +
                        "' (expected mass_coverage or count_proportion)");
}

std::vector<std::size_t> TopFeatureSet(std::span<const double> importance,
                                       double alpha,
                                       RankAlignmentStrategy strategy) {
  CheckAlpha(alpha);
  std::size_t k;
  if (strategy == RankAlignmentStrategy::kMassCoverage) {
    k = CoverageCount(importance, alpha);
  } else {
    const double raw = alpha * static_cast<double>(importance.size());
    k = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    k = std::clamp<std::size_t>(k, 1, importance.size());
  }
  std::vector<std::size_t> order = DescendingOrder(importance);
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

double Jaccard(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.empty() && b.empty()) return 1.0;
  std::vector<std::size_t> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  const std::size_t unions = a.size() + b.size() - both.size();
  return static_cast<double>(both.size()) / static_cast<double>(unions);
}

double RankAlignment(const FeatureImportance& global,
                     std::span<const FeatureImportance> groups, double alpha,
                     RankAlignmentStrategy strategy) {
  if (groups.empty()) throw ValidationError("rank alignment needs at least 1 group");
  const auto reference = TopFeatureSet(global.values(), alpha, strategy);
  double total = 0.0;
  for (const auto& group : groups) {
    if (group.size() != global.size()) {
      throw ValidationError("group importance has a different feature count");
    }
    total += Jaccard(reference, TopFeatureSet(group.values(), alpha, strategy));
  }
  return total / static_cast<double>(groups.size());
}

}  // namespace eamex
