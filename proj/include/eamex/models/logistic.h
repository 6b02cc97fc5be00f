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

#ifndef EAMEX_MODELS_LOGISTIC_H_
#define EAMEX_MODELS_LOGISTIC_H_

#include <string>
#include <vector>

#include "eamex/models/model.h"

namespace eamex {

// Logistic classifier. Binary models hold one weight row scoring class 1;
// multiclass models hold one one-vs-rest row per class whose sigmoid scores
// are renormalized into probabilities.
class LogisticModel final : public Model {
 public:
  // `weights` is (1 x d) for two classes, (C x d) otherwise.
  LogisticModel(std::string name, Matrix weights, std::vector<double> biases,
                int num_classes);

  ModelKind kind() const override { return ModelKind::kBuiltinLogistic; }

  const Matrix& weights() const { return weights_; }
  const std::vector<double>& biases() const { return biases_; }

 protected:
  PredictionSet DoPredict(const Matrix& rows) const override;

 private:
  Matrix weights_;
  std::vector<double> biases_;
};

struct LogisticOptions {
  int max_iter = 200;
  double tol = 1e-8;
  double l2 = 1e-6;
};

// Gradient descent with backtracking step halving on the L2-regularized
// mean log-loss. Features are standardized internally; the returned weights
// act on raw features.
ModelHandle FitLogistic(const Dataset& dataset, LogisticOptions options = {},
                        std::string name = "logistic");

}  // namespace eamex

#endif  // EAMEX_MODELS_LOGISTIC_H_
