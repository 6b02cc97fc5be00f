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

#include "eamex/models/efficacy.h"

#include <cmath>
#include <vector>

#include "eamex/core/error.h"

namespace eamex {
namespace {

void CheckLengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    throw ValidationError("score inputs must be non-empty and equally long");
  }
}

}  // namespace

double Accuracy(std::span<const double> truth, std::span<const double> predicted) {
  CheckLengths(truth, predicted);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) hits += truth[i] == predicted[i];
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

double MeanSquaredError(std::span<const double> truth,
                        std::span<const double> predicted) {
  CheckLengths(truth, predicted);
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double e = predicted[i] - truth[i];
    sum += e * e;
  }
  return sum / static_cast<double>(truth.size());
}

double F1Macro(std::span<const double> truth, std::span<const double> predicted,
               int num_classes) {
  CheckLengths(truth, predicted);
  const auto c = static_cast<std::size_t>(num_classes);
  std::vector<double> tp(c, 0.0), fp(c, 0.0), fn(c, 0.0);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const auto t = static_cast<std::size_t>(truth[i]);
    const auto p = static_cast<std::size_t>(predicted[i]);
    if (t == p) {
      tp[t] += 1;
    } else {
      fp[p] += 1;
      fn[t] += 1;
    }
  }
  double total = 0.0;
  for (std::size_t k = 0; k < c; ++k) {
    const double denom = 2 * tp[k] + fp[k] + fn[k];
    total += denom > 0 ? 2 * tp[k] / denom : 0.0;
  }
  return total / static_cast<double>(c);
}

double Smape(std::span<const double> truth, std::span<const double> predicted) {
  CheckLengths(truth, predicted);
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double denom = (std::abs(truth[i]) + std::abs(predicted[i])) / 2.0;
    if (denom > 0) sum += std::abs(predicted[i] - truth[i]) / denom;
  }
  return sum / static_cast<double>(truth.size());
}

EfficacyScores Score(const Dataset& dataset, const PredictionSet& predictions) {
  predictions.ValidateFor(dataset);
  const auto& y = dataset.target();
  const auto& p = predictions.values();
  EfficacyScores scores;
  if (dataset.task() == Task::kClassification) {
    scores.accuracy = Accuracy(y, p);
    scores.f1_macro = F1Macro(y, p, dataset.num_classes());
  } else {
    const double mse = MeanSquaredError(y, p);
    scores.mse = mse;
    scores.rmse = std::sqrt(mse);
    scores.smape = Smape(y, p);
  }
  return scores;
}

}  // namespace eamex
