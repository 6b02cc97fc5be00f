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

#ifndef EAMEX_MODELS_MODEL_H_
#define EAMEX_MODELS_MODEL_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "eamex/core/matrix.h"
#include "eamex/core/types.h"

namespace eamex {

enum class ModelKind {
  kBuiltinLinear,
  kBuiltinLogistic,
  kBuiltinTree,
  kPrecomputedTable,
  kExternalProcess,
};

std::string_view ModelKindName(ModelKind kind);

// Black-box prediction function. Implementations must be deterministic: two
// calls with the same rows return identical outputs.
class Model {
 public:
  Model(std::string name, Task task, std::size_t num_features, int num_classes)
      : name_(std::move(name)),
        task_(task),
        num_features_(num_features),
        num_classes_(num_classes) {}
  virtual ~Model() = default;

  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  virtual ModelKind kind() const = 0;

  // False for handles that can only replay stored outputs.
  virtual bool SupportsLivePrediction() const { return true; }

  // Checks the row width, then delegates. Classification results always
  // carry probabilities.
  PredictionSet Predict(const Matrix& rows) const;

  const std::string& name() const { return name_; }
  Task task() const { return task_; }
  std::size_t num_features() const { return num_features_; }
  // 0 for regression.
  int num_classes() const { return num_classes_; }

 protected:
  virtual PredictionSet DoPredict(const Matrix& rows) const = 0;

 private:
  std::string name_;
  Task task_;
  std::size_t num_features_;
  int num_classes_;
};

using ModelHandle = std::shared_ptr<const Model>;

// Index of the largest entry, lowest index on ties.
std::size_t ArgMax(std::span<const double> values);

}  // namespace eamex

#endif  // EAMEX_MODELS_MODEL_H_
