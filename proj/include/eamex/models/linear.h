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

#ifndef EAMEX_MODELS_LINEAR_H_
#define EAMEX_MODELS_LINEAR_H_

#include <string>
#include <vector>

#include "eamex/models/model.h"

namespace eamex {

// Regression model f(x) = coefficients . x + intercept.
class LinearModel final : public Model {
 public:
  LinearModel(std::string name, std::vector<double> coefficients,
              double intercept);

  ModelKind kind() const override { return ModelKind::kBuiltinLinear; }

  const std::vector<double>& coefficients() const { return coefficients_; }
  double intercept() const { return intercept_; }

 protected:
  PredictionSet DoPredict(const Matrix& rows) const override;

 private:
  std::vector<double> coefficients_;
  double intercept_;
};

inline constexpr double kLinearRidgeJitter = 1e-8;

// Ordinary least squares through the normal equations, with
// kLinearRidgeJitter added to the Gram diagonal. Regression datasets only.
ModelHandle FitLinear(const Dataset& dataset, std::string name = "linear");

}  // namespace eamex

#endif  // EAMEX_MODELS_LINEAR_H_
