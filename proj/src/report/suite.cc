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

#include "eamex/report/suite.h"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstring>
#include <exception>
#include <thread>

#include <fmt/format.h>

#include "eamex/core/error.h"
#include "eamex/core/normalize.h"
#include "eamex/core/partition.h"
#include "eamex/core/rng.h"
#include "eamex/explain/occlusion.h"
#include "eamex/explain/pdp.h"
#include "eamex/explain/permutation.h"
#include "eamex/models/external.h"
#include "eamex/models/linear.h"
#include "eamex/models/logistic.h"
#include "eamex/models/precomputed.h"
#include "eamex/models/tree_model.h"
#include "eamex/report/csv.h"
#include "eamex/surrogate/surrogate_metrics.h"

namespace eamex {
namespace {

constexpr const char* kNotRequested = "family not requested";

// Rethrows the in-flight exception with a context prefix, keeping its type.
[[noreturn]] void RethrowWithContext(const std::string& context) {
  try {
    throw;
  } catch (const TransportError& e) {
    throw TransportError(context + ": " + e.what());
  } catch (const LookupError& e) {
    throw LookupError(context + ": " + e.what());
  } catch (const UnsupportedError& e) {
    throw UnsupportedError(context + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(context + ": " + e.what());
  } catch (const Error& e) {
    throw Error(context + ": " + e.what());
  }
}

// Runs `fn`; a validation or capability failure marks `keys` skipped.
template <typename Fn>
bool TryMetric(ModelReport& report, std::initializer_list<std::string_view> keys,
               Fn&& fn) {
  try {
    fn();
    return true;
  } catch (const TransportError&) {
    throw;
  } catch (const LookupError&) {
    throw;
  } catch (const Error& e) {
    for (auto key : keys) report.skipped.emplace(std::string(key), e.what());
    return false;
  }
}

void Skip(ModelReport& report, std::initializer_list<std::string_view> keys,
          const std::string& reason) {
  for (auto key : keys) report.skipped.emplace(std::string(key), reason);
}

bool IsConstant(std::span<const double> column) {
  const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
  return *lo == *hi;
}

void RunGlobal(const SuiteInput& input, const Model& model,
               const PredictionSet& predictions, const RngState& rng,
               ModelReport& report) {
  const Dataset& data = input.dataset;
  const SuiteParams& p = input.params;
  const bool live = model.SupportsLivePrediction();
  const std::string no_live =
      fmt::format("model '{}' ({}) has no live prediction", model.name(),
                  ModelKindName(model.kind()));

  std::optional<FeatureImportance> importance = input.global_importance;
  if (!importance) {
    if (live) {
      TryMetric(report, {"permutation_importance", kSpreadDivergence, kAlphaScore}, [&] {
        importance = PermutationImportance(data, model, p.repeats, rng);
      });
    } else {
      Skip(report, {"permutation_importance", kSpreadDivergence, kAlphaScore}, no_live);
    }
  }
  if (importance) {
    report.global.importance = importance->values();
    report.global.spread_divergence = SpreadDivergence(*importance);
    report.global.alpha_score = AlphaImportance(*importance, p.alpha);
  }

  if (live) {
    TryMetric(report, {"pdp", kFluctuationRatio}, [&] {
      std::vector<std::vector<PdpCurve>> curves(data.num_features());
      for (std::size_t j = 0; j < data.num_features(); ++j) {
        const std::vector<double> column = data.features().Column(j);
        if (IsConstant(column)) continue;
        curves[j] = ComputePdpCurves(data, model, j, p.grid_size);
      }
      const FluctuationSummary summary = AverageFluctuation(curves, p.interp_points);
      report.global.fluctuation_ratio = summary.average;
      report.global.fluctuation_per_feature = summary.per_feature;
    });
  } else {
    Skip(report, {"pdp", kFluctuationRatio}, no_live);
  }

  if (input.global_importance) {
    Skip(report, {kRankAlignment},
         "subgroup importances need the permutation explainer");
  } else if (!live) {
    Skip(report, {kRankAlignment}, no_live);
  } else if (importance) {
    TryMetric(report, {kRankAlignment}, [&] {
      const SubgroupPartition partition = PartitionByOutput(data, predictions);
      const std::vector<FeatureImportance> groups =
          SubgroupImportances(data, model, partition, p.repeats, rng);
      report.global.rank_alignment =
          RankAlignment(*importance, groups, p.alpha, p.strategy);
      report.global.subgroup_names = partition.group_names();
      for (const auto& g : groups) report.global.subgroup_importance.push_back(g.values());
    });
  } else {
    Skip(report, {kRankAlignment}, "global importance unavailable");
  }
}

void RunLocal(const SuiteInput& input, const Model& model,
              const PredictionSet& predictions, ModelReport& report) {
  std::optional<LocalImportanceMatrix> local = input.local_importance;
  if (!local) {
    if (!model.SupportsLivePrediction()) {
      Skip(report, {"occlusion", kRankConsistency, kImportanceStability},
           fmt::format("model '{}' ({}) has no live prediction", model.name(),
                       ModelKindName(model.kind())));
      return;
    }
    if (!TryMetric(report, {"occlusion", kRankConsistency, kImportanceStability},
                   [&] { local = OcclusionLocalImportance(input.dataset, model); })) {
      return;
    }
  }
  std::optional<SubgroupPartition> display;
  try {
    display = PartitionByOutput(input.dataset, predictions);
  } catch (const ValidationError&) {
    // Rows keep their natural order when outputs cannot be grouped.
  }
  const RankConsistencyResult consistency =
      RankConsistency(*local, display ? &*display : nullptr);
  const ImportanceStabilityResult stability = ImportanceStability(*local);
  report.local.rank_consistency = consistency.rank_consistency;
  report.local.consistency_per_feature = consistency.per_feature;
  report.local.importance_stability = stability.importance_stability;
  report.local.stability_per_feature = stability.per_feature;
  report.deviation_map = consistency.deviation_map;
}

void RunSurrogate(const SuiteInput& input, const PredictionSet& predictions,
                  const RngState& rng, ModelReport& report) {
  TryMetric(report, {kDegradation, kFidelity, kFeatureStability}, [&] {
    const SurrogateMetrics s =
        EvaluateSurrogate(input.dataset, predictions, input.params.bootstraps, rng);
    report.surrogate.degradation = s.degradation;
    report.surrogate.fidelity = s.fidelity;
    report.surrogate.feature_stability = s.feature_stability;
    report.surrogate.selected_features = s.selected_features;
    report.surrogate.bootstrap_feature_sets = s.bootstrap_feature_sets;
    report.surrogate.tree = s.tree.ToJson();
  });
}

ModelReport EvaluateModel(const SuiteInput& input, const ModelEntry& entry,
                          const RunOptions& options) {
  const std::string context = fmt::format("model '{}'", entry.name);
  try {
    const ModelHandle model = ResolveModel(entry, input.dataset, options.timeout);
    ModelReport report;
    report.name = entry.name;
    report.kind = std::string(ModelKindName(model->kind()));

    PredictionSet predictions;
    if (const auto* table = dynamic_cast<const PrecomputedTable*>(model.get())) {
      predictions = table->stored();
    } else {
      predictions = model->Predict(input.dataset.features());
    }
    predictions.ValidateFor(input.dataset);
    report.efficacy = Score(input.dataset, predictions);

    const RngState rng{input.params.seed};
    if (options.families.global) {
      RunGlobal(input, *model, predictions, rng, report);
    } else {
      Skip(report, {kSpreadDivergence, kAlphaScore, kFluctuationRatio, kRankAlignment},
           kNotRequested);
    }
    if (options.families.local) {
      RunLocal(input, *model, predictions, report);
    } else {
      Skip(report, {kRankConsistency, kImportanceStability}, kNotRequested);
    }
    if (options.families.surrogate) {
      RunSurrogate(input, predictions, rng, report);
    } else {
      Skip(report, {kDegradation, kFidelity, kFeatureStability}, kNotRequested);
    }
    return report;
  } catch (const Error&) {
    RethrowWithContext(context);
  }
}

void Put(EVP_MD_CTX* ctx, const void* data, std::size_t size) {
  EVP_DigestUpdate(ctx, data, size);
}

void PutU64(EVP_MD_CTX* ctx, std::uint64_t value) {
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(value >> (8 * i));
  Put(ctx, bytes, 8);
}

void PutDouble(EVP_MD_CTX* ctx, double value) {
  std::uint64_t bits;
  std::memcpy(&bits, &value, sizeof bits);
  PutU64(ctx, bits);
}

void PutString(EVP_MD_CTX* ctx, std::string_view s) {
  PutU64(ctx, s.size());
  Put(ctx, s.data(), s.size());
}

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) {
      throw Error("SHA-256 initialisation failed");
    }
  }
  ~Sha256() { EVP_MD_CTX_free(ctx_); }
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  EVP_MD_CTX* get() { return ctx_; }

  std::string HexDigest() {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int size = 0;
    EVP_DigestFinal_ex(ctx_, digest, &size);
    std::string hex;
    for (unsigned int i = 0; i < size; ++i) hex += fmt::format("{:02x}", digest[i]);
    return hex;
  }

 private:
  EVP_MD_CTX* ctx_;
};

}  // namespace

std::vector<std::string> Families::Names() const {
  std::vector<std::string> names = {"efficacy"};
  if (global) names.push_back("global");
  if (local) names.push_back("local");
  if (surrogate) names.push_back("surrogate");
  return names;
}

ModelHandle ResolveModel(const ModelEntry& entry, const Dataset& dataset,
                         std::chrono::milliseconds timeout) {
  if (entry.handle) return entry.handle;
  switch (entry.kind) {
    case ModelKind::kBuiltinLinear:
      return FitLinear(dataset, entry.name);
    case ModelKind::kBuiltinLogistic:
      return FitLogistic(dataset, {}, entry.name);
    case ModelKind::kBuiltinTree:
      return FitTree(dataset, {}, entry.name);
    case ModelKind::kPrecomputedTable:
      if (!entry.predictions) {
        throw ValidationError("predictions model without stored predictions");
      }
      return std::make_shared<PrecomputedTable>(entry.name, dataset, *entry.predictions);
    case ModelKind::kExternalProcess: {
      ExternalModelOptions options;
      options.command = entry.command;
      options.timeout = timeout;
      options.num_classes = dataset.num_classes();
      auto model = ExternalProcessModel::Launch(entry.name, options);
      if (model->task() != dataset.task()) {
        throw ValidationError(fmt::format("external model reports task {} but the dataset is {}",
                                          TaskName(model->task()), TaskName(dataset.task())));
      }
      if (model->num_features() != dataset.num_features()) {
        throw ValidationError(fmt::format("external model expects {} features, dataset has {}",
                                          model->num_features(), dataset.num_features()));
      }
      return model;
    }
  }
  throw ValidationError("unknown model kind");
}

std::string Sha256Hex(std::string_view bytes) {
  Sha256 sha;
  Put(sha.get(), bytes.data(), bytes.size());
  return sha.HexDigest();
}

std::string DatasetDigest(const Dataset& dataset) {
  Sha256 sha;
  EVP_MD_CTX* ctx = sha.get();
  PutString(ctx, TaskName(dataset.task()));
  PutU64(ctx, static_cast<std::uint64_t>(dataset.num_classes()));
  PutU64(ctx, dataset.num_samples());
  PutU64(ctx, dataset.num_features());
  for (const auto& name : dataset.feature_names()) PutString(ctx, name);
  for (double y : dataset.target()) PutDouble(ctx, y);
  for (double x : dataset.features().data()) PutDouble(ctx, x);
  return sha.HexDigest();
}

SuiteInput LoadSuiteInput(const SuiteConfig& config) {
  SuiteInput input{LoadDataset(config.dataset_path, config.target, config.task)};
  input.params = config.params;
  const Dataset& data = input.dataset;
  for (const auto& model : config.models) {
    ModelEntry entry{model.name, model.kind, model.command};
    if (model.kind == ModelKind::kPrecomputedTable) {
      entry.predictions = LoadPredictions(model.predictions_path, data);
    }
    input.models.push_back(std::move(entry));
  }
  if (config.global_importance_path) {
    const std::string text = ReadFile(*config.global_importance_path);
    input.global_importance = ParseGlobalImportance(
        text, config.global_importance_path->string(), data.feature_names());
    input.global_source = config.global_importance_path->filename().string();
    input.input_digests["global"] = Sha256Hex(text);
  }
  if (config.local_importance_path) {
    const std::string text = ReadFile(*config.local_importance_path);
    input.local_importance =
        ParseLocalImportance(text, config.local_importance_path->string(),
                             data.feature_names(), data.num_samples());
    input.local_source = config.local_importance_path->filename().string();
    input.input_digests["local"] = Sha256Hex(text);
  }
  return input;
}

MetricsReport RunSuite(const SuiteInput& input, const RunOptions& options) {
  input.params.Validate();
  if (input.models.empty()) throw ValidationError("no models to evaluate");
  const Dataset& data = input.dataset;

  MetricsReport report;
  RunConfig& rc = report.run_config;
  rc.seed = input.params.seed;
  rc.alpha = input.params.alpha;
  rc.grid_size = input.params.grid_size;
  rc.interp_points = input.params.interp_points;
  rc.repeats = input.params.repeats;
  rc.bootstraps = input.params.bootstraps;
  rc.strategy = input.params.strategy;
  rc.global_explainer = input.global_source;
  rc.local_explainer = input.local_source;
  rc.families = options.families.Names();
  rc.task = std::string(TaskName(data.task()));
  rc.num_samples = data.num_samples();
  rc.num_features = data.num_features();
  rc.num_classes = data.num_classes();
  rc.feature_names = data.feature_names();
  rc.dataset_digest = DatasetDigest(data);
  rc.input_digests = input.input_digests;

  const std::size_t n = input.models.size();
  std::vector<std::optional<ModelReport>> results(n);
  std::vector<std::exception_ptr> errors(n);
  const auto work = [&](std::size_t i) {
    try {
      results[i] = EvaluateModel(input, input.models[i], options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t jobs =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, options.jobs)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < jobs; ++t) {
      threads.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) work(i);
      });
    }
    for (auto& thread : threads) thread.join();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    report.models.push_back(std::move(*results[i]));
  }
  return report;
}

MetricsReport RunSuite(const SuiteConfig& config, const RunOptions& options) {
  return RunSuite(LoadSuiteInput(config), options);
}

MetricsReport ComputeMetrics(const Matrix& features,
                             const std::vector<std::string>& feature_names,
                             const std::vector<double>& target, Task task,
                             const PredictionSet& predictions,
                             const std::optional<Matrix>& local_importance,
                             const std::optional<std::vector<double>>& global_importance,
                             const SuiteParams& params) {
  SuiteInput input{Dataset(features, feature_names, target, task)};
  input.params = params;
  ModelEntry entry{"model", ModelKind::kPrecomputedTable};
  entry.predictions = predictions;
  input.models.push_back(std::move(entry));
  if (local_importance) {
    input.local_importance = NormalizeLocal(*local_importance, feature_names);
    input.local_source = "in-memory";
  }
  if (global_importance) {
    input.global_importance = NormalizeImportance(*global_importance, feature_names);
    input.global_source = "in-memory";
  }
  return RunSuite(input);
}

}  // namespace eamex
