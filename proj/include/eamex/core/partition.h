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

#ifndef EAMEX_CORE_PARTITION_H_
#define EAMEX_CORE_PARTITION_H_

#include <span>
#include <vector>

#include "eamex/core/types.h"

namespace eamex {

// Linear-interpolation quantile of `values` at probability p in [0, 1]
// (position p * (n - 1) in the sorted sample).
double Quantile(std::span<const double> values, double p);
// Same, on data the caller already sorted ascending.
double SortedQuantile(std::span<const double> sorted, double p);

// Subgroups used by rank alignment. Classification: one group per predicted
// class present, in ascending class order. Regression: the quartile regions
// Q01, Q12, Q23, Q34 of the predicted values, boundaries inclusive on the
// lower group. Empty quartiles fold into the next lower group; fewer than two
// surviving groups is a ValidationError.
SubgroupPartition PartitionByOutput(const Dataset& dataset,
                                    const PredictionSet& predictions);

}  // namespace eamex

#endif  // EAMEX_CORE_PARTITION_H_
