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

#include "eamex/core/normalize.h"

#include <cmath>

#include "eamex/core/error.h"

namespace eamex {
namespace {

// Shared by the global and local paths once signs have been handled.
void ScaleToUnitSum(std::span<double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  if (sum > 0.0) {
    for (double& v : values) v /= sum;
  } else {
    const double uniform = 1.0 / static_cast<double>(values.size());
    for (double& v : values) v = uniform;
  }
}

}  // namespace

std::vector<double> NormalizeImportanceValues(std::span<const double> raw) {
  if (raw.empty()) {
    throw ValidationError("importance vector must have at least 1 entry");
  }
  std::vector<double> out(raw.begin(), raw.end());
  for (double& v : out) {
    if (!std::isfinite(v)) {
      throw ValidationError("importance vector contains NaN or infinite values");
    }
    if (v < 0.0) v = 0.0;
  }
  ScaleToUnitSum(out);
  return out;
}

FeatureImportance NormalizeImportance(std::span<const double> raw,
                                      std::vector<std::string> feature_names) {
  return FeatureImportance(NormalizeImportanceValues(raw),
                           std::move(feature_names));
}

LocalImportanceMatrix NormalizeLocal(const Matrix& raw,
                                     std::vector<std::string> feature_names) {
  if (feature_names.size() != raw.cols()) {
    throw ValidationError("local importance has " + std::to_string(raw.cols()) +
                          " columns for " +
                          std::to_string(feature_names.size()) +
                          " feature names");
  }
  Matrix rows = raw;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    auto row = rows.Row(i);
    for (double& v : row) {
      if (!std::isfinite(v)) {
        throw ValidationError("local importance row " + std::to_string(i) +
                              " contains NaN or infinite values");
      }
      v = std::abs(v);
    }
    ScaleToUnitSum(row);
  }
  return LocalImportanceMatrix(std::move(rows), std::move(feature_names));
}

std::vector<std::string> DefaultFeatureNames(std::size_t d) {
  std::vector<std::string> names;
  names.reserve(d);
  for (std::size_t j = 0; j < d; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

}  // namespace eamex
