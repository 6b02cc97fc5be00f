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

#include "eamex/models/linear.h"

#include <Eigen/Dense>

#include "eamex/core/error.h"

namespace eamex {

LinearModel::LinearModel(std::string name, std::vector<double> coefficients,
                         double intercept)
    : Model(std::move(name), Task::kRegression, coefficients.size(), 0),
      coefficients_(std::move(coefficients)),
      intercept_(intercept) {}

PredictionSet LinearModel::DoPredict(const Matrix& rows) const {
  std::vector<double> out(rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    double acc = intercept_;
    const auto row = rows.Row(i);
    for (std::size_t j = 0; j < coefficients_.size(); ++j) {
      acc += coefficients_[j] * row[j];
    }
    out[i] = acc;
  }
  return PredictionSet(std::move(out));
}

ModelHandle FitLinear(const Dataset& dataset, std::string name) {
  if (dataset.task() != Task::kRegression) {
    throw ValidationError("linear model requires a regression dataset");
  }
  const auto m = static_cast<Eigen::Index>(dataset.num_samples());
  const auto d = static_cast<Eigen::Index>(dataset.num_features());
  Eigen::MatrixXd design(m, d + 1);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      design(i, j) = dataset.features()(static_cast<std::size_t>(i),
                                        static_cast<std::size_t>(j));
    }
    design(i, d) = 1.0;
    y(i) = dataset.target()[static_cast<std::size_t>(i)];
  }
  Eigen::MatrixXd gram = design.transpose() * design;
  gram.diagonal().array() += kLinearRidgeJitter;
  const Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw ValidationError("singular Gram matrix in linear fit");
  }
  const Eigen::VectorXd beta = llt.solve(design.transpose() * y);
  if (!beta.allFinite()) {
    throw ValidationError("singular Gram matrix in linear fit");
  }
  std::vector<double> coefficients(beta.data(), beta.data() + d);
  return std::make_shared<LinearModel>(std::move(name), std::move(coefficients),
                                       beta(d));
}

}  // namespace eamex
