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

#ifndef EAMEX_CORE_NORMALIZE_H_
#define EAMEX_CORE_NORMALIZE_H_

#include <span>
#include <string>
#include <vector>

#include "eamex/core/matrix.h"
#include "eamex/core/types.h"

namespace eamex {

// Clips negatives to zero and rescales to unit sum. A vector whose clipped sum
// is zero maps to the uniform vector 1/d.
std::vector<double> NormalizeImportanceValues(std::span<const double> raw);

FeatureImportance NormalizeImportance(std::span<const double> raw,
                                      std::vector<std::string> feature_names);

// Row-wise absolute value then unit-sum rescaling. All-zero rows map to the
// uniform row.
LocalImportanceMatrix NormalizeLocal(const Matrix& raw,
                                     std::vector<std::string> feature_names);

// Names "x0", "x1", ... for callers that have no names of their own.
std::vector<std::string> DefaultFeatureNames(std::size_t d);

}  // namespace eamex

#endif  // EAMEX_CORE_NORMALIZE_H_
