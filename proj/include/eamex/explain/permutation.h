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

#ifndef EAMEX_EXPLAIN_PERMUTATION_H_
#define EAMEX_EXPLAIN_PERMUTATION_H_

#include <optional>
#include <span>
#include <vector>

#include "eamex/core/rng.h"
#include "eamex/core/types.h"
#include "eamex/models/model.h"

namespace eamex {

// Permutation feature importance. The baseline score is accuracy
// (classification) or negative MSE (regression) on the selected rows; the
// raw importance of feature j is the mean score drop over `repeats`
// shuffles of column j, and the raw drops are normalized with
// NormalizeImportance. Feature j draws from its own stream rng.Stream(j).
//
// `rows` restricts the computation to a subset of samples (at least 2).
// Throws UnsupportedError for handles without live prediction.
FeatureImportance PermutationImportance(
    const Dataset& dataset, const Model& model, int repeats,
    const RngState& rng,
    std::optional<std::span<const std::size_t>> rows = std::nullopt);

// Permutation importance restricted to each group of `partition`, group g
// seeded with rng.ForGroup(g). Groups with fewer than 2 samples are an
// error.
std::vector<FeatureImportance> SubgroupImportances(
    const Dataset& dataset, const Model& model,
    const SubgroupPartition& partition, int repeats, const RngState& rng);

}  // namespace eamex

#endif  // EAMEX_EXPLAIN_PERMUTATION_H_
