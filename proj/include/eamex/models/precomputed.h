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

#ifndef EAMEX_MODELS_PRECOMPUTED_H_
#define EAMEX_MODELS_PRECOMPUTED_H_

#include <map>
#include <string>
#include <vector>

#include "eamex/models/model.h"

namespace eamex {

// Replays stored predictions for the exact rows they were recorded on. Any
// other row raises LookupError, so the handle cannot serve explainers that
// need novel rows (permutation, PDP, occlusion).
class PrecomputedTable final : public Model {
 public:
  PrecomputedTable(std::string name, const Dataset& dataset,
                   PredictionSet predictions);

  ModelKind kind() const override { return ModelKind::kPrecomputedTable; }
  bool SupportsLivePrediction() const override { return false; }

  const PredictionSet& stored() const { return stored_; }

 protected:
  PredictionSet DoPredict(const Matrix& rows) const override;

 private:
  // Row values -> first stored index with those values.
  std::map<std::vector<double>, std::size_t> index_;
  PredictionSet stored_;
};

}  // namespace eamex

#endif  // EAMEX_MODELS_PRECOMPUTED_H_
