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

#include "eamex/models/logistic.h"

#include <algorithm>
#include <cmath>

#include "eamex/core/error.h"

namespace eamex {
namespace {

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double Softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

struct BinaryFit {
  std::vector<double> w;
  double b = 0.0;
};

// Fits one binary problem on standardized features `x` and 0/1 labels `y`.
BinaryFit FitBinary(const Matrix& x, const std::vector<double>& y,
                    const LogisticOptions& options) {
  const std::size_t m = x.rows();
  const std::size_t d = x.cols();
  const double inv_m = 1.0 / static_cast<double>(m);

  auto loss = [&](const std::vector<double>& w, double b) {
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double z = b;
      const auto row = x.Row(i);
      for (std::size_t j = 0; j < d; ++j) z += w[j] * row[j];
      total += Softplus(z) - y[i] * z;
    }
    double reg = 0.0;
    for (double wj : w) reg += wj * wj;
    return total * inv_m + 0.5 * options.l2 * reg;
  };

  BinaryFit fit{std::vector<double>(d, 0.0), 0.0};
  double current = loss(fit.w, fit.b);
  std::vector<double> grad_w(d);
  std::vector<double> trial_w(d);
  for (int iter = 0; iter < options.max_iter; ++iter) {
    std::fill(grad_w.begin(), grad_w.end(), 0.0);
    double grad_b = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double z = fit.b;
      const auto row = x.Row(i);
      for (std::size_t j = 0; j < d; ++j) z += fit.w[j] * row[j];
      const double r = Sigmoid(z) - y[i];
      for (std::size_t j = 0; j < d; ++j) grad_w[j] += r * row[j];
      grad_b += r;
    }
    double max_abs = std::abs(grad_b * inv_m);
    double norm2 = (grad_b * inv_m) * (grad_b * inv_m);
    for (std::size_t j = 0; j < d; ++j) {
      grad_w[j] = grad_w[j] * inv_m + options.l2 * fit.w[j];
      max_abs = std::max(max_abs, std::abs(grad_w[j]));
      norm2 += grad_w[j] * grad_w[j];
    }
    grad_b *= inv_m;
    if (max_abs < options.tol) break;

    double step = 4.0;
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving, step *= 0.5) {
      for (std::size_t j = 0; j < d; ++j) trial_w[j] = fit.w[j] - step * grad_w[j];
      const double trial_b = fit.b - step * grad_b;
      const double candidate = loss(trial_w, trial_b);
      if (!std::isfinite(candidate)) {
        throw ValidationError("logistic fit produced a non-finite loss");
      }
      if (candidate <= current - 0.5 * step * norm2) {
        fit.w = trial_w;
        fit.b = trial_b;
        current = candidate;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  if (!std::isfinite(current)) {
    throw ValidationError("logistic fit produced a non-finite loss");
  }
  return fit;
}

}  // namespace

LogisticModel::LogisticModel(std::string name, Matrix weights,
                             std::vector<double> biases, int num_classes)
    : Model(std::move(name), Task::kClassification, weights.cols(),
            num_classes),
      weights_(std::move(weights)),
      biases_(std::move(biases)) {
  const std::size_t expected_rows =
      num_classes == 2 ? 1 : static_cast<std::size_t>(num_classes);
  if (num_classes < 2 || weights_.rows() != expected_rows ||
      biases_.size() != expected_rows) {
    throw ValidationError("logistic weights do not match the class count");
  }
}

PredictionSet LogisticModel::DoPredict(const Matrix& rows) const {
  const auto c = static_cast<std::size_t>(num_classes());
  Matrix proba(rows.rows(), c);
  std::vector<double> labels(rows.rows());
  std::vector<double> scores(weights_.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const auto row = rows.Row(i);
    for (std::size_t k = 0; k < weights_.rows(); ++k) {
      double z = biases_[k];
      const auto w = weights_.Row(k);
      for (std::size_t j = 0; j < w.size(); ++j) z += w[j] * row[j];
      scores[k] = Sigmoid(z);
    }
    if (c == 2) {
      proba(i, 1) = scores[0];
      proba(i, 0) = 1.0 - scores[0];
    } else {
      double sum = 0.0;
      for (double s : scores) sum += s;
      for (std::size_t k = 0; k < c; ++k) {
        proba(i, k) = sum > 0 ? scores[k] / sum : 1.0 / static_cast<double>(c);
      }
    }
    labels[i] = static_cast<double>(ArgMax(proba.Row(i)));
  }
  return PredictionSet(std::move(labels), std::move(proba));
}

ModelHandle FitLogistic(const Dataset& dataset, LogisticOptions options,
                        std::string name) {
  if (dataset.task() != Task::kClassification) {
    throw ValidationError("logistic model requires a classification dataset");
  }
  const std::size_t m = dataset.num_samples();
  const std::size_t d = dataset.num_features();
  const int c = dataset.num_classes();

  std::vector<double> mean(d, 0.0);
  std::vector<double> scale(d, 0.0);
  const Matrix& raw = dataset.features();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < m; ++i) mean[j] += raw(i, j);
    mean[j] /= static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
      scale[j] += (raw(i, j) - mean[j]) * (raw(i, j) - mean[j]);
    }
    scale[j] = std::sqrt(scale[j] / static_cast<double>(m));
    if (scale[j] == 0.0) scale[j] = 1.0;
  }
  Matrix x(m, d);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) x(i, j) = (raw(i, j) - mean[j]) / scale[j];
  }

  const std::size_t problems = c == 2 ? 1 : static_cast<std::size_t>(c);
  Matrix weights(problems, d);
  std::vector<double> biases(problems);
  std::vector<double> y(m);
  for (std::size_t k = 0; k < problems; ++k) {
    const double positive = c == 2 ? 1.0 : static_cast<double>(k);
    for (std::size_t i = 0; i < m; ++i) {
      y[i] = dataset.target()[i] == positive ? 1.0 : 0.0;
    }
    const BinaryFit fit = FitBinary(x, y, options);
    // Fold the standardization back into raw-feature weights.
    double b = fit.b;
    for (std::size_t j = 0; j < d; ++j) {
      weights(k, j) = fit.w[j] / scale[j];
      b -= fit.w[j] * mean[j] / scale[j];
    }
    biases[k] = b;
  }
  return std::make_shared<LogisticModel>(std::move(name), std::move(weights),
                                         std::move(biases), c);
}

}  // namespace eamex
