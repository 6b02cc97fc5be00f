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

#ifndef EAMEX_MODELS_TREE_MODEL_H_
#define EAMEX_MODELS_TREE_MODEL_H_

#include <string>

#include "eamex/models/model.h"
#include "eamex/surrogate/decision_tree.h"

namespace eamex {

// Depth-limited CART fitted on the true target.
class TreeModel final : public Model {
 public:
  TreeModel(std::string name, DecisionTree tree, std::size_t num_features);

  ModelKind kind() const override { return ModelKind::kBuiltinTree; }
  const DecisionTree& tree() const { return tree_; }

 protected:
  PredictionSet DoPredict(const Matrix& rows) const override;

 private:
  DecisionTree tree_;
};

ModelHandle FitTree(const Dataset& dataset, TreeOptions options = {},
                    std::string name = "tree");

}  // namespace eamex

#endif  // EAMEX_MODELS_TREE_MODEL_H_
