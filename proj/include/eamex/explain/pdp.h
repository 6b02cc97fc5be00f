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

#ifndef EAMEX_EXPLAIN_PDP_H_
#define EAMEX_EXPLAIN_PDP_H_

#include <vector>

#include "eamex/core/types.h"
#include "eamex/models/model.h"

namespace eamex {

// Partial dependence of one model output on one feature: the average
// prediction over the dataset with the feature forced to each grid value.
struct PdpCurve {
  // Validates: grid strictly ascending with >= 2 points, values finite and
  // aligned with the grid.
  PdpCurve(std::size_t feature_index, std::vector<double> grid,
           std::vector<double> values, int class_index = -1);

  std::size_t feature_index;
  // -1 for a scalar output (regression, or P(class 1) in binary
  // classification); the class id for multiclass per-class curves.
  int class_index;
  std::vector<double> grid;
  std::vector<double> values;
};

inline constexpr int kDefaultGridSize = 20;

// Unique feature values if there are at most `grid_size` of them, otherwise
// linear-interpolation quantiles at grid_size equally spaced probabilities,
// deduplicated. Throws ValidationError for a constant column.
std::vector<double> PdpGrid(std::span<const double> column, int grid_size);

// One curve for regression and binary classification, one per class for
// multiclass models. Classification handles without probabilities fall back
// to label indicators.
std::vector<PdpCurve> ComputePdpCurves(const Dataset& dataset,
                                       const Model& model,
                                       std::size_t feature_index,
                                       int grid_size = kDefaultGridSize);

// Scalar-output convenience; throws ValidationError for multiclass models.
PdpCurve ComputePdp(const Dataset& dataset, const Model& model,
                    std::size_t feature_index,
                    int grid_size = kDefaultGridSize);

}  // namespace eamex

#endif  // EAMEX_EXPLAIN_PDP_H_
