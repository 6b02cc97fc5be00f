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

#include "eamex/explain/permutation.h"

#include <numeric>

#include "eamex/core/error.h"
#include "eamex/core/normalize.h"
#include "eamex/models/efficacy.h"

namespace eamex {
namespace {

double ScoreOf(Task task, std::span<const double> truth,
               const PredictionSet& predictions) {
  return task == Task::kClassification
             ? Accuracy(truth, predictions.values())
             : -MeanSquaredError(truth, predictions.values());
}

}  // namespace

FeatureImportance PermutationImportance(
    const Dataset& dataset, const Model& model, int repeats,
    const RngState& rng, std::optional<std::span<const std::size_t>> rows) {
  if (!model.SupportsLivePrediction()) {
    throw UnsupportedError("permutation importance needs live predictions; model '" +
                           model.name() + "' only replays stored outputs");
  }
  if (repeats < 1) throw ValidationError("permutation repeats must be >= 1");

  std::vector<std::size_t> selected;
  if (rows) {
    selected.assign(rows->begin(), rows->end());
  } else {
    selected.resize(dataset.num_samples());
    std::iota(selected.begin(), selected.end(), 0);
  }
  if (selected.size() < 2) {
    throw ValidationError("permutation importance needs at least 2 rows");
  }

  const Matrix x = dataset.features().SelectRows(selected);
  std::vector<double> truth(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    truth[i] = dataset.target()[selected[i]];
  }
  const double baseline = ScoreOf(dataset.task(), truth, model.Predict(x));

  std::vector<double> raw(dataset.num_features(), 0.0);
  Matrix shuffled = x;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    Pcg32 gen = rng.Stream(j);
    std::vector<double> column = x.Column(j);
    double total_drop = 0.0;
    for (int r = 0; r < repeats; ++r) {
      gen.Shuffle(std::span<double>(column));
      shuffled.SetColumn(j, column);
      total_drop += baseline - ScoreOf(dataset.task(), truth, model.Predict(shuffled));
    }
    shuffled.SetColumn(j, x.Column(j));
    raw[j] = total_drop / repeats;
  }
  return NormalizeImportance(raw, dataset.feature_names());
}

std::vector<FeatureImportance> SubgroupImportances(
    const Dataset& dataset, const Model& model,
    const SubgroupPartition& partition, int repeats, const RngState& rng) {
  if (partition.group_labels().size() != dataset.num_samples()) {
    throw ValidationError("partition does not cover the dataset");
  }
  std::vector<FeatureImportance> out;
  for (std::size_t g = 0; g < partition.num_groups(); ++g) {
    const std::vector<std::size_t> members = partition.Members(g);
    if (members.size() < 2) {
      throw ValidationError("group '" + partition.group_names()[g] + "' has " +
                            std::to_string(members.size()) +
                            " sample(s); permutation importance needs 2");
    }
    out.push_back(PermutationImportance(dataset, model, repeats,
                                        rng.ForGroup(g), members));
  }
  return out;
}

}  // namespace eamex
