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

#include "eamex/report/report.h"

#include "eamex/core/error.h"

namespace eamex {
namespace {

using Json = nlohmann::ordered_json;

Json Opt(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json Inverted(const std::optional<double>& value) {
  return value ? Json(1.0 - *value) : Json(nullptr);
}

std::optional<double> GetOpt(const Json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) {
    throw ValidationError(std::string("report field '") + key + "' is not a number");
  }
  return it->get<double>();
}

const Json& Child(const Json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError(std::string("report is missing field '") + key + "'");
  }
  return *it;
}

template <typename T>
T Get(const Json& object, const char* key) {
  try {
    return Child(object, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("report field '") + key + "': " + e.what());
  }
}

Json EfficacyJson(const EfficacyScores& e) {
  Json out = Json::object();
  if (e.accuracy) out["accuracy"] = *e.accuracy;
  if (e.f1_macro) out["f1_macro"] = *e.f1_macro;
  if (e.rmse) out["rmse"] = *e.rmse;
  if (e.smape) out["smape"] = *e.smape;
  if (e.mse) out["mse"] = *e.mse;
  return out;
}

EfficacyScores EfficacyFromJson(const Json& j) {
  return EfficacyScores{GetOpt(j, "accuracy"), GetOpt(j, "f1_macro"),
                        GetOpt(j, "rmse"), GetOpt(j, "smape"), GetOpt(j, "mse")};
}

Json ModelJson(const ModelReport& m) {
  Json global = Json::object();
  global["spread_divergence"] = Opt(m.global.spread_divergence);
  global["alpha_score"] = Opt(m.global.alpha_score);
  global["fluctuation_ratio"] = Opt(m.global.fluctuation_ratio);
  global["rank_alignment"] = Opt(m.global.rank_alignment);
  global["importance"] = m.global.importance;
  Json per_feature = Json::array();
  for (const auto& v : m.global.fluctuation_per_feature) per_feature.push_back(Opt(v));
  global["per_feature_fluctuation"] = per_feature;
  Json groups = Json::array();
  for (std::size_t g = 0; g < m.global.subgroup_names.size(); ++g) {
    groups.push_back(Json{{"name", m.global.subgroup_names[g]},
                          {"importance", m.global.subgroup_importance[g]}});
  }
  global["subgroups"] = groups;

  Json local = Json::object();
  local["rank_consistency"] = Opt(m.local.rank_consistency);
  local["importance_stability"] = Opt(m.local.importance_stability);
  local["rank_inconsistency"] = Inverted(m.local.rank_consistency);
  local["importance_instability"] =
      Inverted(m.local.importance_stability);
  local["per_feature_consistency"] = m.local.consistency_per_feature;
  local["per_feature_stability"] = m.local.stability_per_feature;

  Json surrogate = Json::object();
  surrogate["degradation"] = Opt(m.surrogate.degradation);
  surrogate["fidelity"] = Opt(m.surrogate.fidelity);
  surrogate["feature_stability"] = Opt(m.surrogate.feature_stability);
  surrogate["selected_features"] = m.surrogate.selected_features;
  surrogate["bootstrap_feature_sets"] = m.surrogate.bootstrap_feature_sets;
  surrogate["tree"] = m.surrogate.tree;

  Json skipped = Json::object();
  for (const auto& [key, reason] : m.skipped) skipped[key] = reason;

  Json out = Json::object();
  out["name"] = m.name;
  out["kind"] = m.kind;
  out["efficacy"] = EfficacyJson(m.efficacy);
  out["global"] = global;
  out["local"] = local;
  out["surrogate"] = surrogate;
  out["skipped"] = skipped;
  return out;
}

ModelReport ModelFromJson(const Json& j) {
  ModelReport m;
  m.name = Get<std::string>(j, "name");
  m.kind = Get<std::string>(j, "kind");
  m.efficacy = EfficacyFromJson(Child(j, "efficacy"));

  const Json& global = Child(j, "global");
  m.global.spread_divergence = GetOpt(global, "spread_divergence");
  m.global.alpha_score = GetOpt(global, "alpha_score");
  m.global.fluctuation_ratio = GetOpt(global, "fluctuation_ratio");
  m.global.rank_alignment = GetOpt(global, "rank_alignment");
  m.global.importance = Get<std::vector<double>>(global, "importance");
  for (const auto& v : Child(global, "per_feature_fluctuation")) {
    m.global.fluctuation_per_feature.push_back(
        v.is_null() ? std::nullopt : std::optional<double>(v.get<double>()));
  }
  for (const auto& g : Child(global, "subgroups")) {
    m.global.subgroup_names.push_back(Get<std::string>(g, "name"));
    m.global.subgroup_importance.push_back(Get<std::vector<double>>(g, "importance"));
  }

  const Json& local = Child(j, "local");
  m.local.rank_consistency = GetOpt(local, "rank_consistency");
  m.local.importance_stability = GetOpt(local, "importance_stability");
  m.local.consistency_per_feature =
      Get<std::vector<double>>(local, "per_feature_consistency");
  m.local.stability_per_feature =
      Get<std::vector<double>>(local, "per_feature_stability");

  const Json& surrogate = Child(j, "surrogate");
  m.surrogate.degradation = GetOpt(surrogate, "degradation");
  m.surrogate.fidelity = GetOpt(surrogate, "fidelity");
  m.surrogate.feature_stability = GetOpt(surrogate, "feature_stability");
  m.surrogate.selected_features =
      Get<std::vector<std::size_t>>(surrogate, "selected_features");
  m.surrogate.bootstrap_feature_sets =
      Get<std::vector<std::vector<std::size_t>>>(surrogate, "bootstrap_feature_sets");
  m.surrogate.tree = Child(surrogate, "tree");

  for (const auto& [key, reason] : Child(j, "skipped").items()) {
    m.skipped[key] = reason.get<std::string>();
  }
  return m;
}

}  // namespace

std::optional<double> ModelReport::Metric(std::string_view key) const {
  if (key == kSpreadDivergence) return global.spread_divergence;
  if (key == kAlphaScore) return global.alpha_score;
  if (key == kFluctuationRatio) return global.fluctuation_ratio;
  if (key == kRankAlignment) return global.rank_alignment;
  if (key == kRankConsistency) return local.rank_consistency;
  if (key == kImportanceStability) return local.importance_stability;
  if (key == kDegradation) return surrogate.degradation;
  if (key == kFidelity) return surrogate.fidelity;
  if (key == kFeatureStability) return surrogate.feature_stability;
  throw ValidationError("unknown metric '" + std::string(key) + "'");
}

const std::vector<std::pair<std::string_view, double>>& ReferenceValues() {
  static const std::vector<std::pair<std::string_view, double>> kValues = {
      {kSpreadDivergence, 1.0},
      {kAlphaScore, 0.0},
      {kFluctuationRatio, 0.0},
      {kRankAlignment, 1.0},
      {"rank_consistency_table_orientation", 0.0},
      {"importance_stability_table_orientation", 0.0},
      {kDegradation, 0.0},
      {kFidelity, 1.0},
      {kFeatureStability, 1.0},
  };
  return kValues;
}

Json ToJson(const MetricsReport& report) {
  const RunConfig& rc = report.run_config;
  Json params = Json::object();
  params["alpha"] = rc.alpha;
  params["grid_size"] = rc.grid_size;
  params["interp_points"] = rc.interp_points;
  params["repeats"] = rc.repeats;
  params["bootstraps"] = rc.bootstraps;
  params["rank_alignment_strategy"] = std::string(RankAlignmentStrategyName(rc.strategy));

  Json dataset = Json::object();
  dataset["digest"] = rc.dataset_digest;
  dataset["task"] = rc.task;
  dataset["num_samples"] = rc.num_samples;
  dataset["num_features"] = rc.num_features;
  dataset["num_classes"] = rc.num_classes;
  dataset["feature_names"] = rc.feature_names;

  Json digests = Json::object();
  for (const auto& [key, digest] : rc.input_digests) digests[key] = digest;

  Json run_config = Json::object();
  run_config["seed"] = rc.seed;
  run_config["params"] = params;
  run_config["explainers"] = Json{{"global", rc.global_explainer},
                                  {"local", rc.local_explainer}};
  run_config["families"] = rc.families;
  run_config["dataset"] = dataset;
  run_config["input_digests"] = digests;

  Json references = Json::object();
  for (const auto& [key, value] : ReferenceValues()) references[std::string(key)] = value;

  Json models = Json::array();
  for (const auto& m : report.models) models.push_back(ModelJson(m));

  Json out = Json::object();
  out["version"] = std::string(kReportVersion);
  out["run_config"] = run_config;
  out["reference_values"] = references;
  out["models"] = models;
  return out;
}

MetricsReport ReportFromJson(const Json& json) {
  if (!json.is_object()) throw ValidationError("report must be a JSON object");
  const auto version = Get<std::string>(json, "version");
  if (version != kReportVersion) {
    throw ValidationError("unsupported report version '" + version + "'");
  }
  MetricsReport report;
  RunConfig& rc = report.run_config;
  const Json& run_config = Child(json, "run_config");
  rc.seed = Get<std::uint64_t>(run_config, "seed");
  const Json& params = Child(run_config, "params");
  rc.alpha = Get<double>(params, "alpha");
  rc.grid_size = Get<int>(params, "grid_size");
  rc.interp_points = Get<int>(params, "interp_points");
  rc.repeats = Get<int>(params, "repeats");
  rc.bootstraps = Get<int>(params, "bootstraps");
  rc.strategy = ParseRankAlignmentStrategy(
      Get<std::string>(params, "rank_alignment_strategy"));
  const Json& explainers = Child(run_config, "explainers");
  rc.global_explainer = Get<std::string>(explainers, "global");
  rc.local_explainer = Get<std::string>(explainers, "local");
  rc.families = Get<std::vector<std::string>>(run_config, "families");
  const Json& dataset = Child(run_config, "dataset");
  rc.dataset_digest = Get<std::string>(dataset, "digest");
  rc.task = Get<std::string>(dataset, "task");
  rc.num_samples = Get<std::size_t>(dataset, "num_samples");
  rc.num_features = Get<std::size_t>(dataset, "num_features");
  rc.num_classes = Get<int>(dataset, "num_classes");
  rc.feature_names = Get<std::vector<std::string>>(dataset, "feature_names");
  for (const auto& [key, digest] : Child(run_config, "input_digests").items()) {
    rc.input_digests[key] = digest.get<std::string>();
  }
  for (const auto& m : Child(json, "models")) report.models.push_back(ModelFromJson(m));
  return report;
}

std::string DumpReport(const MetricsReport& report) {
  return ToJson(report).dump(2) + "\n";
}

MetricsReport ParseReport(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed report JSON: ") + e.what());
  }
  return ReportFromJson(json);
}

}  // namespace eamex
