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

#include "eamex/core/partition.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

#include "eamex/core/error.h"

namespace eamex {

double SortedQuantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw ValidationError("quantile of an empty sample");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double Quantile(std::span<const double> values, double p) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return SortedQuantile(sorted, p);
}

SubgroupPartition PartitionByOutput(const Dataset& dataset,
                                    const PredictionSet& predictions) {
  predictions.ValidateFor(dataset);
  const auto& values = predictions.values();

  if (dataset.task() == Task::kClassification) {
    std::map<int, int> class_to_group;
    for (double v : values) class_to_group.emplace(static_cast<int>(v), 0);
    std::vector<std::string> names;
    for (auto& [cls, group] : class_to_group) {
      group = static_cast<int>(names.size());
      names.push_back("class_" + std::to_string(cls));
    }
    std::vector<int> labels(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      labels[i] = class_to_group.at(static_cast<int>(values[i]));
    }
    return SubgroupPartition(std::move(labels), std::move(names));
  }

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::array<double, 3> cuts = {SortedQuantile(sorted, 0.25),
                                      SortedQuantile(sorted, 0.50),
                                      SortedQuantile(sorted, 0.75)};
  static constexpr std::array<const char*, 4> kNames = {"Q01", "Q12", "Q23",
                                                        "Q34"};
  std::vector<int> quartile(values.size());
  std::array<std::size_t, 4> counts{};
  for (std::size_t i = 0; i < values.size(); ++i) {
    int q = 0;
    while (q < 3 && values[i] > cuts[static_cast<std::size_t>(q)]) ++q;
    quartile[i] = q;
    ++counts[static_cast<std::size_t>(q)];
  }

  // Renumber the surviving quartiles; an empty quartile merges into the
  // group below it, which leaves that group's membership unchanged.
  std::array<int, 4> remap{};
  std::vector<std::string> names;
  for (std::size_t q = 0; q < 4; ++q) {
    if (counts[q] > 0) {
      remap[q] = static_cast<int>(names.size());
      names.emplace_back(kNames[q]);
    } else {
      remap[q] = names.empty() ? 0 : static_cast<int>(names.size()) - 1;
    }
  }
  if (names.size() < 2) {
    throw ValidationError(
        "regression predictions collapse into fewer than 2 quartile groups");
  }
  std::vector<int> labels(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    labels[i] = remap[static_cast<std::size_t>(quartile[i])];
  }
  return SubgroupPartition(std::move(labels), std::move(names));
}

}  // namespace eamex
