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

// Command-line front end: runs the metric suite from a JSON config and writes
// tables, JSON reports, radar charts, deviation matrices and PDP grids.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "eamex/core/error.h"
#include "eamex/explain/pdp.h"
#include "eamex/report/config.h"
#include "eamex/report/csv.h"
#include "eamex/report/render.h"
#include "eamex/report/report.h"
#include "eamex/report/suite.h"

namespace {

using eamex::Families;

struct SuiteArgs {
  std::string config;
  std::string out_json;
  std::string out_table;
  std::string out_radar;
  std::string out_deviation;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  int timeout_ms = 30000;
};

struct PdpArgs {
  std::string config;
  std::string feature;
  std::string model;
  std::string out;
  std::optional<int> grid_size;
};

void WriteOutput(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw eamex::ValidationError("cannot write '" + path + "'");
  out << content;
  if (!out) throw eamex::ValidationError("failed writing '" + path + "'");
}

std::string SafeFileName(std::string name) {
  for (char& c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  }
  return name;
}

void AddSuiteOptions(CLI::App* cmd, SuiteArgs& args) {
  cmd->add_option("--config", args.config, "Run configuration (JSON)")->required();
  cmd->add_option("--out-json", args.out_json, "Write the JSON report ('-' for stdout)");
  cmd->add_option("--out-table", args.out_table, "Write the text table ('-' for stdout)");
  cmd->add_option("--out-radar", args.out_radar, "Write the SVG radar chart");
  cmd->add_option("--out-deviation", args.out_deviation,
                  "Directory for per-model rank deviation matrices (CSV)");
  cmd->add_option("--seed", args.seed, "Override the configured seed");
  cmd->add_option("--jobs", args.jobs, "Models evaluated in parallel")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--timeout", args.timeout_ms,
                  "Per-request timeout for external models (ms)")
      ->check(CLI::PositiveNumber);
}

int RunSuiteCommand(const SuiteArgs& args, Families families) {
  eamex::SuiteConfig config = eamex::LoadConfig(args.config);
  if (args.seed) config.params.seed = *args.seed;
  eamex::RunOptions options;
  options.families = families;
  options.jobs = args.jobs;
  options.timeout = std::chrono::milliseconds(args.timeout_ms);
  const eamex::MetricsReport report = eamex::RunSuite(config, options);

  bool wrote = false;
  if (!args.out_json.empty()) {
    WriteOutput(args.out_json, eamex::DumpReport(report));
    wrote = true;
  }
  if (!args.out_radar.empty()) {
    WriteOutput(args.out_radar, eamex::RenderRadar(report));
    wrote = true;
  }
  if (!args.out_deviation.empty()) {
    std::filesystem::create_directories(args.out_deviation);
    for (const auto& model : report.models) {
      if (!model.deviation_map) continue;
      const auto path = std::filesystem::path(args.out_deviation) /
                        (SafeFileName(model.name) + "_rank_deviation.csv");
      WriteOutput(path.string(), eamex::RenderDeviationCsv(
                                     *model.deviation_map,
                                     report.run_config.feature_names));
    }
    wrote = true;
  }
  if (!args.out_table.empty() || !wrote) {
    WriteOutput(args.out_table.empty() ? "-" : args.out_table, eamex::RenderTable(report));
  }
  return 0;
}

int RunPdpCommand(const PdpArgs& args) {
  eamex::SuiteConfig config = eamex::LoadConfig(args.config);
  if (args.grid_size) config.params.grid_size = *args.grid_size;
  config.params.Validate();
  const eamex::SuiteInput input = eamex::LoadSuiteInput(config);
  const eamex::Dataset& data = input.dataset;
  const eamex::ModelEntry* entry = &input.models.front();
  if (!args.model.empty()) {
    entry = nullptr;
    for (const auto& m : input.models) {
      if (m.name == args.model) entry = &m;
    }
    if (entry == nullptr) {
      throw eamex::ValidationError("no model named '" + args.model + "' in the config");
    }
  }
  const eamex::ModelHandle model =
      eamex::ResolveModel(*entry, data, std::chrono::milliseconds(30000));
  const std::size_t feature = data.FeatureIndex(args.feature);
  const auto curves =
      eamex::ComputePdpCurves(data, *model, feature, config.params.grid_size);

  std::string csv = args.feature;
  if (curves.size() == 1) {
    csv += ",pd\n";
  } else {
    for (const auto& c : curves) csv += fmt::format(",pd_class_{}", c.class_index);
    csv += "\n";
  }
  for (std::size_t g = 0; g < curves.front().grid.size(); ++g) {
    csv += fmt::format("{}", curves.front().grid[g]);
    for (const auto& c : curves) csv += fmt::format(",{}", c.values[g]);
    csv += "\n";
  }
  WriteOutput(args.out.empty() ? "-" : args.out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explainer-agnostic metrics for tabular models"};
  app.require_subcommand(1);

  SuiteArgs run_args;
  SuiteArgs global_args;
  SuiteArgs local_args;
  SuiteArgs surrogate_args;
  PdpArgs pdp_args;

  CLI::App* run = app.add_subcommand("run", "Compute every metric family");
  AddSuiteOptions(run, run_args);
  CLI::App* global = app.add_subcommand("global", "Global importance metrics only");
  AddSuiteOptions(global, global_args);
  CLI::App* local = app.add_subcommand("local", "Local importance metrics only");
  AddSuiteOptions(local, local_args);
  CLI::App* surrogate = app.add_subcommand("surrogate", "Surrogate metrics only");
  AddSuiteOptions(surrogate, surrogate_args);

  CLI::App* pdp = app.add_subcommand("pdp", "Partial dependence grid as CSV");
  pdp->add_option("--config", pdp_args.config, "Run configuration (JSON)")->required();
  pdp->add_option("--feature", pdp_args.feature, "Feature name")->required();
  pdp->add_option("--model", pdp_args.model, "Model name (default: first model)");
  pdp->add_option("--grid-size", pdp_args.grid_size, "Grid points");
  pdp->add_option("--out", pdp_args.out, "Output CSV ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*run) return RunSuiteCommand(run_args, Families{});
    if (*global) return RunSuiteCommand(global_args, Families{true, false, false});
    if (*local) return RunSuiteCommand(local_args, Families{false, true, false});
    if (*surrogate) return RunSuiteCommand(surrogate_args, Families{false, false, true});
    if (*pdp) return RunPdpCommand(pdp_args);
  } catch (const eamex::TransportError& e) {
    std::cerr << "eamex: transport error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "eamex: error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
