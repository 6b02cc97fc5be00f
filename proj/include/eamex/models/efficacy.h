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

#ifndef EAMEX_MODELS_EFFICACY_H_
#define EAMEX_MODELS_EFFICACY_H_

#include <optional>
#include <span>

#include "eamex/core/types.h"

namespace eamex {

// Predictive performance against the true target. Classification fills
// accuracy and f1_macro, regression fills rmse, smape and mse.
struct EfficacyScores {
  std::optional<double> accuracy;
  std::optional<double> f1_macro;
  std::optional<double> rmse;
  std::optional<double> smape;
  std::optional<double> mse;
};

double Accuracy(std::span<const double> truth, std::span<const double> predicted);
double MeanSquaredError(std::span<const double> truth,
                        std::span<const double> predicted);
// Unweighted mean of per-class F1 over classes [0, num_classes). A class with
// no actual and no predicted members scores 0.
double F1Macro(std::span<const double> truth, std::span<const double> predicted,
               int num_classes);
// Mean of |p - t| / ((|t| + |p|) / 2); a 0/0 term counts as 0.
double Smape(std::span<const double> truth, std::span<const double> predicted);

EfficacyScores Score(const Dataset& dataset, const PredictionSet& predictions);

}  // namespace eamex

#endif  // EAMEX_MODELS_EFFICACY_H_
