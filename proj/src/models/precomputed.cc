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

#include "eamex/models/precomputed.h"

#include "eamex/core/error.h"

namespace eamex {

PrecomputedTable::PrecomputedTable(std::string name, const Dataset& dataset,
                                   PredictionSet predictions)
    : Model(std::move(name), dataset.task(), dataset.num_features(),
            dataset.num_classes()),
      stored_(std::move(predictions)) {
  stored_.ValidateFor(dataset);
  const Matrix& x = dataset.features();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto row = x.Row(i);
    index_.emplace(std::vector<double>(row.begin(), row.end()), i);
  }
}

PredictionSet PrecomputedTable::DoPredict(const Matrix& rows) const {
  std::vector<double> values(rows.rows());
  std::optional<Matrix> proba;
  if (stored_.probabilities()) {
    proba.emplace(rows.rows(), stored_.probabilities()->cols());
  }
  std::vector<double> key;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const auto row = rows.Row(i);
    key.assign(row.begin(), row.end());
    const auto it = index_.find(key);
    if (it == index_.end()) {
      throw LookupError("model '" + name() + "' has no stored prediction for row " +
                        std::to_string(i) + " of the query");
    }
    values[i] = stored_.values()[it->second];
    if (proba) {
      const auto src = stored_.probabilities()->Row(it->second);
      std::copy(src.begin(), src.end(), proba->Row(i).begin());
    }
  }
  return PredictionSet(std::move(values), std::move(proba));
}

}  // namespace eamex
