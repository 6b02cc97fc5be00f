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

#ifndef EAMEX_METRICS_LOCAL_METRICS_H_
#define EAMEX_METRICS_LOCAL_METRICS_H_

#include <span>
#include <vector>

#include "eamex/core/types.h"

namespace eamex {

// Ranks of one importance row: 1 for the largest entry, ties broken by
// ascending feature index, so every row ranks as a permutation of 1..d.
std::vector<int> ImportanceRanks(std::span<const double> row);

// |rank - modal rank| for every sample and feature, plus the display order
// of rows (grouped by subgroup label when one is supplied, stable within a
// group).
struct RankDeviationMap {
  std::size_t num_samples = 0;
  std::size_t num_features = 0;
  // Row-major num_samples x num_features.
  std::vector<int> deviations;
  std::vector<std::size_t> row_order;

  int at(std::size_t i, std::size_t j) const {
    return deviations[i * num_features + j];
  }
};

struct RankConsistencyResult {
  double rank_consistency = 0.0;
  std::vector<double> per_feature;
  // Most frequent rank per feature, smallest rank on ties.
  std::vector<int> mode_rank;
  RankDeviationMap deviation_map;
};

// Per feature: C_j = 1 - mean|r_ij - mode_j| / (max_i r_ij - min_i r_ij),
// with C_j = 1 when the rank never changes. The result is the mean of C_j.
// Requires at least 2 samples.
RankConsistencyResult RankConsistency(
    const LocalImportanceMatrix& local,
    const SubgroupPartition* display_groups = nullptr);

struct ImportanceStabilityResult {
  double importance_stability = 0.0;
  std::vector<double> per_feature;
  std::vector<double> mean;
  // Population variance (divide by M).
  std::vector<double> variance;
  // mean * (1 - mean).
  std::vector<double> max_variance;
};

// S_j = 1 - V_j / (mu_j (1 - mu_j)), S_j = 1 when mu_j is 0 or 1; the
// result is the mean of S_j. Requires at least 2 samples.
ImportanceStabilityResult ImportanceStability(const LocalImportanceMatrix& local);

}  // namespace eamex

#endif  // EAMEX_METRICS_LOCAL_METRICS_H_
