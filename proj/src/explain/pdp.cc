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

#include "eamex/explain/pdp.h"

#include <algorithm>
#include <cmath>

#include "eamex/core/error.h"
#include "eamex/core/partition.h"

namespace eamex {
namespace {

// Upper bound on cells per Predict call.
constexpr std::size_t kMaxBatchCells = std::size_t{1} << 22;

}  // namespace

PdpCurve::PdpCurve(std::size_t feature_index, std::vector<double> grid,
                   std::vector<double> values, int class_index)
    : feature_index(feature_index),
      class_index(class_index),
      grid(std::move(grid)),
      values(std::move(values)) {
  if (this->grid.size() < 2) throw ValidationError("PDP grid needs >= 2 points");
  if (this->grid.size() != this->values.size()) {
    throw ValidationError("PDP grid and values differ in length");
  }
  for (std::size_t i = 0; i < this->grid.size(); ++i) {
    if (!std::isfinite(this->grid[i]) || !std::isfinite(this->values[i])) {
      throw ValidationError("PDP contains non-finite entries");
    }
    if (i > 0 && !(this->grid[i] > this->grid[i - 1])) {
      throw ValidationError("PDP grid must be strictly ascending");
    }
  }
}

std::vector<double> PdpGrid(std::span<const double> column, int grid_size) {
  if (grid_size < 2) throw ValidationError("PDP grid size must be >= 2");
  std::vector<double> sorted(column.begin(), column.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> unique = sorted;
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (unique.size() < 2) {
    throw ValidationError("constant feature, PDP undefined");
  }
  if (unique.size() <= static_cast<std::size_t>(grid_size)) return unique;
  std::vector<double> grid;
  for (int k = 0; k < grid_size; ++k) {
    const double p = static_cast<double>(k) / (grid_size - 1);
    const double q = SortedQuantile(sorted, p);
    if (grid.empty() || q > grid.back()) grid.push_back(q);
  }
  return grid;
}

std::vector<PdpCurve> ComputePdpCurves(const Dataset& dataset,
                                       const Model& model,
                                       std::size_t feature_index,
                                       int grid_size) {
  if (!model.SupportsLivePrediction()) {
    throw UnsupportedError("PDP needs live predictions; model '" + model.name() +
                           "' only replays stored outputs");
  }
  if (feature_index >= dataset.num_features()) {
    throw ValidationError("feature index out of range");
  }
  const Matrix& x = dataset.features();
  const std::vector<double> grid = PdpGrid(x.Column(feature_index), grid_size);
  const std::size_t m = x.rows();
  const bool multiclass = dataset.task() == Task::kClassification &&
                          dataset.num_classes() > 2;
  const std::size_t outputs =
      multiclass ? static_cast<std::size_t>(dataset.num_classes()) : 1;

  // averages[k][g]: output k at grid point g.
  std::vector<std::vector<double>> averages(outputs,
                                            std::vector<double>(grid.size()));
  const std::size_t per_batch =
      std::max<std::size_t>(1, kMaxBatchCells / std::max<std::size_t>(1, m * x.cols()));
  for (std::size_t start = 0; start < grid.size(); start += per_batch) {
    const std::size_t stop = std::min(grid.size(), start + per_batch);
    Matrix batch((stop - start) * m, x.cols());
    for (std::size_t g = start; g < stop; ++g) {
      for (std::size_t i = 0; i < m; ++i) {
        auto row = batch.Row((g - start) * m + i);
        const auto src = x.Row(i);
        std::copy(src.begin(), src.end(), row.begin());
        row[feature_index] = grid[g];
      }
    }
    const PredictionSet predictions = model.Predict(batch);
    if (multiclass) {
      const Matrix per_class = predictions.ClassOutputs(dataset.num_classes());
      for (std::size_t g = start; g < stop; ++g) {
        for (std::size_t k = 0; k < outputs; ++k) {
          double sum = 0.0;
          for (std::size_t i = 0; i < m; ++i) sum += per_class((g - start) * m + i, k);
          averages[k][g] = sum / static_cast<double>(m);
        }
      }
    } else {
      const std::vector<double> scalar = predictions.ScalarOutput(dataset.task());
      for (std::size_t g = start; g < stop; ++g) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) sum += scalar[(g - start) * m + i];
        averages[0][g] = sum / static_cast<double>(m);
      }
    }
  }

  std::vector<PdpCurve> curves;
  for (std::size_t k = 0; k < outputs; ++k) {
    curves.emplace_back(feature_index, grid, std::move(averages[k]),
                        multiclass ? static_cast<int>(k) : -1);
  }
  return curves;
}

PdpCurve ComputePdp(const Dataset& dataset, const Model& model,
                    std::size_t feature_index, int grid_size) {
  if (dataset.task() == Task::kClassification && dataset.num_classes() > 2) {
    throw ValidationError(
        "multiclass models have one PDP per class; use ComputePdpCurves");
  }
  return ComputePdpCurves(dataset, model, feature_index, grid_size).front();
}

}  // namespace eamex
