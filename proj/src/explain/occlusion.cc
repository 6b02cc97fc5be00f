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

#include "eamex/explain/occlusion.h"

#include <cmath>

#include "eamex/core/error.h"
#include "eamex/core/normalize.h"

namespace eamex {
namespace {

// Output tracked per sample. For multiclass, column `tracked[i]` of the
// class outputs.
std::vector<double> TrackedOutput(const Dataset& dataset,
                                  const PredictionSet& predictions,
                                  const std::vector<std::size_t>& tracked) {
  if (dataset.task() == Task::kClassification && dataset.num_classes() > 2) {
    const Matrix per_class = predictions.ClassOutputs(dataset.num_classes());
    std::vector<double> out(predictions.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = per_class(i, tracked[i]);
    return out;
  }
  return predictions.ScalarOutput(dataset.task());
}

}  // namespace

LocalImportanceMatrix OcclusionLocalImportance(const Dataset& dataset,
                                               const Model& model) {
  if (!model.SupportsLivePrediction()) {
    throw UnsupportedError("occlusion needs live predictions; model '" +
                           model.name() + "' only replays stored outputs");
  }
  const Matrix& x = dataset.features();
  const std::size_t m = x.rows();
  const std::size_t d = x.cols();

  const PredictionSet base_predictions = model.Predict(x);
  std::vector<std::size_t> tracked(m);
  for (std::size_t i = 0; i < m; ++i) {
    tracked[i] = static_cast<std::size_t>(base_predictions.values()[i]);
  }
  const std::vector<double> base = TrackedOutput(dataset, base_predictions, tracked);

  Matrix raw(m, d);
  Matrix occluded = x;
  for (std::size_t j = 0; j < d; ++j) {
    const std::vector<double> column = x.Column(j);
    double mean = 0.0;
    for (double v : column) mean += v;
    mean /= static_cast<double>(m);
    occluded.SetColumn(j, std::vector<double>(m, mean));
    const std::vector<double> out =
        TrackedOutput(dataset, model.Predict(occluded), tracked);
    for (std::size_t i = 0; i < m; ++i) raw(i, j) = std::abs(base[i] - out[i]);
    occluded.SetColumn(j, column);
  }
  return NormalizeLocal(raw, dataset.feature_names());
}

}  // namespace eamex
