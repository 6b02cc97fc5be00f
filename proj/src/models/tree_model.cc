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

#include "eamex/models/tree_model.h"

namespace eamex {

TreeModel::TreeModel(std::string name, DecisionTree tree,
                     std::size_t num_features)
    : Model(std::move(name), tree.task(), num_features, tree.num_classes()),
      tree_(std::move(tree)) {}

PredictionSet TreeModel::DoPredict(const Matrix& rows) const {
  return tree_.Predict(rows);
}

ModelHandle FitTree(const Dataset& dataset, TreeOptions options,
                    std::string name) {
  DecisionTree tree =
      DecisionTree::Fit(dataset.features(), dataset.target(), dataset.task(),
                        dataset.num_classes(), options);
  return std::make_shared<TreeModel>(std::move(name), std::move(tree),
                                     dataset.num_features());
}

}  // namespace eamex
