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

#include "eamex/metrics/local_metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eamex/core/error.h"
#include "eamex/metrics/global_metrics.h"

namespace eamex {

std::vector<int> ImportanceRanks(std::span<const double> row) {
  const std::vector<std::size_t> order = DescendingOrder(row);
  std::vector<int> ranks(row.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    ranks[order[pos]] = static_cast<int>(pos) + 1;
  }
  return ranks;
}

RankConsistencyResult RankConsistency(const LocalImportanceMatrix& local,
                                      const SubgroupPartition* display_groups) {
  const std::size_t m = local.num_samples();
  const std::size_t d = local.num_features();
  if (m < 2) throw ValidationError("rank consistency needs at least 2 samples");

  std::vector<int> ranks(m * d);
  for (std::size_t i = 0; i < m; ++i) {
    const std::vector<int> row = ImportanceRanks(local.rows().Row(i));
    std::copy(row.begin(), row.end(), ranks.begin() + static_cast<long>(i * d));
  }

  RankConsistencyResult result;
  result.per_feature.resize(d);
  result.mode_rank.resize(d);
  result.deviation_map.num_samples = m;
  result.deviation_map.num_features = d;
  result.deviation_map.deviations.resize(m * d);

  std::vector<std::size_t> frequency(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    std::fill(frequency.begin(), frequency.end(), 0);
    int lowest = static_cast<int>(d);
    int highest = 1;
    for (std::size_t i = 0; i < m; ++i) {
      const int r = ranks[i * d + j];
      ++frequency[static_cast<std::size_t>(r)];
      lowest = std::min(lowest, r);
      highest = std::max(highest, r);
    }
    // max_element returns the first maximum, i.e. the smallest modal rank.
    const auto mode = static_cast<int>(
        std::max_element(frequency.begin() + 1, frequency.end()) -
        frequency.begin());
    result.mode_rank[j] = mode;

    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const int deviation = std::abs(ranks[i * d + j] - mode);
      result.deviation_map.deviations[i * d + j] = deviation;
      total += deviation;
    }
    const int spread = highest - lowest;
    result.per_feature[j] =
        spread == 0 ? 1.0
                    : 1.0 - (total / static_cast<double>(m)) / static_cast<double>(spread);
  }
  result.rank_consistency =
      std::accumulate(result.per_feature.begin(), result.per_feature.end(), 0.0) /
      static_cast<double>(d);

  auto& order = result.deviation_map.row_order;
  order.resize(m);
  std::iota(order.begin(), order.end(), 0);
  if (display_groups != nullptr) {
    const auto& labels = display_groups->group_labels();
    if (labels.size() != m) {
      throw ValidationError("display groups do not match the sample count");
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return labels[a] < labels[b]; });
  }
  return result;
}

ImportanceStabilityResult ImportanceStability(const LocalImportanceMatrix& local) {
  const std::size_t m = local.num_samples();
  const std::size_t d = local.num_features();
  if (m < 2) throw ValidationError("importance stability needs at least 2 samples");
  const Matrix& rows = local.rows();

  ImportanceStabilityResult result;
  result.per_feature.resize(d);
  result.mean.resize(d);
  result.variance.resize(d);
  result.max_variance.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) mean += rows(i, j);
    mean /= static_cast<double>(m);
    double variance = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      variance += (rows(i, j) - mean) * (rows(i, j) - mean);
    }
    variance /= static_cast<double>(m);
    const double max_variance = mean * (1.0 - mean);
    result.mean[j] = mean;
    result.variance[j] = variance;
    result.max_variance[j] = max_variance;
    result.per_feature[j] =
        max_variance > 0.0 ? std::clamp(1.0 - variance / max_variance, 0.0, 1.0)
                           : 1.0;
  }
  result.importance_stability =
      std::accumulate(result.per_feature.begin(), result.per_feature.end(), 0.0) /
      static_cast<double>(d);
  return result;
}

}  // namespace eamex
