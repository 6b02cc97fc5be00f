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

#include "eamex/report/config.h"

#include <cmath>
#include <set>

#include "json.hpp"

#include "eamex/core/error.h"
#include "eamex/report/csv.h"

namespace eamex {
namespace {

using Json = nlohmann::json;

void CheckKeys(const Json& object, const std::string& where,
               const std::set<std::string>& allowed) {
  if (!object.is_object()) throw ValidationError(where + " must be a JSON object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) {
      throw ValidationError("unknown config key '" + where + "." + key + "'");
    }
  }
}

const Json& Required(const Json& object, const std::string& where,
                     const std::string& key) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError("config is missing '" + where + "." + key + "'");
  }
  return *it;
}

std::string String(const Json& value, const std::string& field) {
  if (!value.is_string()) throw ValidationError("config '" + field + "' must be a string");
  return value.get<std::string>();
}

int Int(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) {
    throw ValidationError("config '" + field + "' must be an integer");
  }
  return value.get<int>();
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& path) {
  const std::filesystem::path p(path);
  return p.is_absolute() ? p : base / p;
}

}  // namespace

void SuiteParams::Validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha must lie in (0, 1]");
  }
  if (grid_size < 2) throw ValidationError("grid_size must be >= 2");
  if (interp_points < 3) throw ValidationError("interp_points must be >= 3");
  if (repeats < 1) throw ValidationError("repeats must be >= 1");
  if (bootstraps < 1) throw ValidationError("bootstraps must be >= 1");
}

ModelKind ParseModelKind(std::string_view name) {
  if (name == "linear") return ModelKind::kBuiltinLinear;
  if (name == "logistic") return ModelKind::kBuiltinLogistic;
  if (name == "tree") return ModelKind::kBuiltinTree;
  if (name == "predictions") return ModelKind::kPrecomputedTable;
  if (name == "external") return ModelKind::kExternalProcess;
  throw ValidationError("unknown model kind '" + std::string(name) + "'");
}

SuiteConfig ParseConfig(std::string_view text, const std::filesystem::path& base_dir) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed config JSON: ") + e.what());
  }
  CheckKeys(root, "config", {"dataset", "models", "explainers", "params", "seed"});
  SuiteConfig config;

  const Json& dataset = Required(root, "config", "dataset");
  CheckKeys(dataset, "dataset", {"path", "target", "task"});
  config.dataset_path =
      Resolve(base_dir, String(Required(dataset, "dataset", "path"), "dataset.path"));
  config.target = String(Required(dataset, "dataset", "target"), "dataset.target");
  config.task = ParseTask(String(Required(dataset, "dataset", "task"), "dataset.task"));

  const Json& models = Required(root, "config", "models");
  if (!models.is_array() || models.empty()) {
    throw ValidationError("config 'models' must be a non-empty array");
  }
  std::set<std::string> names;
  for (const auto& entry : models) {
    CheckKeys(entry, "models[]", {"name", "kind", "command", "predictions_path"});
    ModelConfig model;
    model.name = String(Required(entry, "models[]", "name"), "models[].name");
    if (!names.insert(model.name).second) {
      throw ValidationError("duplicate model name '" + model.name + "'");
    }
    model.kind = ParseModelKind(String(Required(entry, "models[]", "kind"), "models[].kind"));
    if (model.kind == ModelKind::kExternalProcess) {
      model.command = String(Required(entry, "models[]", "command"), "models[].command");
    } else if (entry.contains("command")) {
      throw ValidationError("model '" + model.name + "': 'command' needs kind external");
    }
    if (model.kind == ModelKind::kPrecomputedTable) {
      model.predictions_path = Resolve(
          base_dir, String(Required(entry, "models[]", "predictions_path"),
                           "models[].predictions_path"));
    } else if (entry.contains("predictions_path")) {
      throw ValidationError("model '" + model.name +
                            "': 'predictions_path' needs kind predictions");
    }
    config.models.push_back(std::move(model));
  }

  if (root.contains("explainers")) {
    const Json& explainers = root["explainers"];
    CheckKeys(explainers, "explainers", {"global", "local"});
    if (explainers.contains("global")) {
      const std::string global = String(explainers["global"], "explainers.global");
      if (global != "permutation") config.global_importance_path = Resolve(base_dir, global);
    }
    if (explainers.contains("local")) {
      const std::string local = String(explainers["local"], "explainers.local");
      if (local != "occlusion") config.local_importance_path = Resolve(base_dir, local);
    }
  }

  if (root.contains("params")) {
    const Json& params = root["params"];
    CheckKeys(params, "params",
              {"alpha", "grid_size", "interp_points", "repeats", "bootstraps",
               "rank_alignment_strategy"});
    SuiteParams& p = config.params;
    if (params.contains("alpha")) {
      if (!params["alpha"].is_number()) {
        throw ValidationError("config 'params.alpha' must be a number");
      }
      p.alpha = params["alpha"].get<double>();
    }
    if (params.contains("grid_size")) p.grid_size = Int(params["grid_size"], "params.grid_size");
    if (params.contains("interp_points")) {
      p.interp_points = Int(params["interp_points"], "params.interp_points");
    }
    if (params.contains("repeats")) p.repeats = Int(params["repeats"], "params.repeats");
    if (params.contains("bootstraps")) {
      p.bootstraps = Int(params["bootstraps"], "params.bootstraps");
    }
    if (params.contains("rank_alignment_strategy")) {
      p.strategy = ParseRankAlignmentStrategy(String(
          params["rank_alignment_strategy"], "params.rank_alignment_strategy"));
    }
  }
  if (root.contains("seed")) {
    const Json& seed = root["seed"];
    if (!seed.is_number_unsigned()) {
      throw ValidationError("config 'seed' must be a non-negative integer");
    }
    config.params.seed = seed.get<std::uint64_t>();
  }
  config.params.Validate();
  return config;
}

SuiteConfig LoadConfig(const std::filesystem::path& path) {
  return ParseConfig(ReadFile(path), path.parent_path());
}

}  // namespace eamex
