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

#ifndef EAMEX_EXPLAIN_OCCLUSION_H_
#define EAMEX_EXPLAIN_OCCLUSION_H_

#include "eamex/core/types.h"
#include "eamex/models/model.h"

namespace eamex {

// Baseline local explainer. raw(i, j) = |f(x_i) - f(x_i with feature j set
// to its column mean)|, rows then normalized with NormalizeLocal. f is the
// regression output, P(class 1) for binary classification, and for
// multiclass the probability of the class originally predicted for x_i.
LocalImportanceMatrix OcclusionLocalImportance(const Dataset& dataset,
                                               const Model& model);

}  // namespace eamex

#endif  // EAMEX_EXPLAIN_OCCLUSION_H_
