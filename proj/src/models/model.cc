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

#include "eamex/models/model.h"

#include "eamex/core/error.h"

namespace eamex {

std::string_view ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kBuiltinLinear:
      return "linear";
    case ModelKind::kBuiltinLogistic:
      return "logistic";
    case ModelKind::kBuiltinTree:
      return "tree";
    case ModelKind::kPrecomputedTable:
      return "predictions";
    case ModelKind::kExternalProcess:
      return "external";
  }
  return "unknown";
}

PredictionSet Model::Predict(const Matrix& rows) const {
  if (rows.rows() > 0 && rows.cols() != num_features_) {
    throw ValidationError("model '" + name_ + "' expects " +
                          std::to_string(num_features_) + " features, got " +
                          std::to_string(rows.cols()));
  }
  return DoPredict(rows);
}

std::size_t ArgMax(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace eamex
