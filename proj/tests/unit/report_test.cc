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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fmt/format.h>

#include "eamex/core/error.h"
#include "eamex/core/normalize.h"
#include "eamex/report/config.h"
#include "eamex/report/csv.h"
#include "eamex/report/render.h"
#include "eamex/report/report.h"
#include "eamex/report/suite.h"
#include "support/synthetic.h"

namespace eamex {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

void ExpectParseErrorAtLine(const std::function<void()>& fn, int line,
                            const std::string& fragment) {
  try {
    fn();
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_THAT(e.what(), HasSubstr(fragment));
  }
}

TEST(CsvTest, ParsesHeaderAndRows) {
  const auto t = ParseCsv("a, \"b\" ,c\n1,2,3\n\n4.5,-1e3,+7\n", "mem");
  EXPECT_THAT(t.header, ElementsAre("a", "b", "c"));
  EXPECT_EQ(t.rows, Matrix::FromRows({{1, 2, 3}, {4.5, -1000, 7}}));
  EXPECT_THAT(t.line_numbers, ElementsAre(2, 4));
}

TEST(CsvTest, ErrorsCarryLineNumbers) {
  ExpectParseErrorAtLine([] { ParseCsv("a,b\n1,2\n3\n", "mem"); }, 3, "expected 2 cells");
  ExpectParseErrorAtLine([] { ParseCsv("a,b\n1,x\n", "mem"); }, 2, "non-numeric value 'x'");
  ExpectParseErrorAtLine([] { ParseCsv("a,b\n1,nan\n", "mem"); }, 2, "non-numeric");
  ExpectParseErrorAtLine([] { ParseCsv("a,a\n1,2\n", "mem"); }, 1, "duplicate column");
  ExpectParseErrorAtLine([] { ParseCsv("", "mem"); }, 1, "missing header");
}

TEST(IngestTest, GlobalNormalizesAndReorders) {
  const auto fi = ParseGlobalImportance("a,b\n2,2\n", "g.csv", {"a", "b"});
  EXPECT_THAT(fi.values(), ElementsAre(0.5, 0.5));
  const auto swapped = ParseGlobalImportance("b,a\n1,3\n", "g.csv", {"a", "b"});
  EXPECT_THAT(swapped.values(), ElementsAre(0.75, 0.25));
  ExpectParseErrorAtLine([] { ParseGlobalImportance("a,c\n1,1\n", "g", {"a", "b"}); }, 1,
                         "missing feature column 'b'");
  ExpectParseErrorAtLine([] { ParseGlobalImportance("a\n1\n", "g", {"a", "b"}); }, 1,
                         "expected 2 feature columns");
  EXPECT_THROW(ParseGlobalImportance("a,b\n1,1\n2,2\n", "g", {"a", "b"}), ValidationError);
}

TEST(IngestTest, LocalTakesAbsoluteValuesAndChecksRowCount) {
  const auto local = ParseLocalImportance("a,b\n1,-3\n-2,2\n", "l.csv", {"a", "b"}, 2);
  EXPECT_THAT(testdata::ToVector(local.rows().Row(0)), ElementsAre(0.25, 0.75));
  EXPECT_THAT(testdata::ToVector(local.rows().Row(1)), ElementsAre(0.5, 0.5));
  try {
    ParseLocalImportance("a,b\n1,1\n", "l.csv", {"a", "b"}, 3);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_THAT(e.what(), HasSubstr("1 rows"));
    EXPECT_THAT(e.what(), HasSubstr("3 samples"));
  }
}

TEST(LoadDatasetTest, TargetColumnAndTask) {
  const auto dir = testdata::TempDir("dataset");
  testdata::WriteText(dir / "d.csv", "x,label,z\n1,0,2\n3,1,4\n5,1,6\n");
  const Dataset data = LoadDataset(dir / "d.csv", "label", Task::kClassification);
  EXPECT_THAT(data.feature_names(), ElementsAre("x", "z"));
  EXPECT_THAT(data.target(), ElementsAre(0, 1, 1));
  EXPECT_EQ(data.features(), Matrix::FromRows({{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_THROW(LoadDataset(dir / "d.csv", "nope", Task::kRegression), ParseError);
  testdata::WriteText(dir / "bad.csv", "x,label\n1,0\n2,0.5\n");
  ExpectParseErrorAtLine([&] { LoadDataset(dir / "bad.csv", "label", Task::kClassification); },
                         3, "class id");
}

TEST(LoadPredictionsTest, ValuesAndProbabilities) {
  const auto dir = testdata::TempDir("preds");
  const Dataset data(Matrix::FromRows({{1}, {2}}), {"x"}, {0, 1}, Task::kClassification);
  testdata::WriteText(dir / "p.csv", "proba_1,prediction,proba_0\n0.2,0,0.8\n0.9,1,0.1\n");
  const auto p = LoadPredictions(dir / "p.csv", data);
  EXPECT_THAT(p.values(), ElementsAre(0, 1));
  EXPECT_EQ(*p.probabilities(), Matrix::FromRows({{0.8, 0.2}, {0.1, 0.9}}));
  testdata::WriteText(dir / "short.csv", "prediction\n1\n");
  EXPECT_THROW(LoadPredictions(dir / "short.csv", data), ValidationError);
  testdata::WriteText(dir / "none.csv", "value\n1\n0\n");
  EXPECT_THROW(LoadPredictions(dir / "none.csv", data), ParseError);
}

TEST(ConfigTest, ParsesAllKeysAndResolvesPaths) {
  const auto config = ParseConfig(R"({
    "dataset": {"path": "data.csv", "target": "y", "task": "regression"},
    "models": [
      {"name": "lin", "kind": "linear"},
      {"name": "ext", "kind": "external", "command": "./serve"},
      {"name": "tab", "kind": "predictions", "predictions_path": "/abs/p.csv"}
    ],
    "explainers": {"global": "permutation", "local": "shap.csv"},
    "params": {"alpha": 0.7, "grid_size": 10, "interp_points": 50, "repeats": 3,
               "bootstraps": 7, "rank_alignment_strategy": "count_proportion"},
    "seed": 99
  })",
                                  "/base");
  EXPECT_EQ(config.dataset_path, "/base/data.csv");
  EXPECT_EQ(config.task, Task::kRegression);
  ASSERT_EQ(config.models.size(), 3u);
  EXPECT_EQ(config.models[1].kind, ModelKind::kExternalProcess);
  EXPECT_EQ(config.models[1].command, "./serve");
  EXPECT_EQ(config.models[2].predictions_path, "/abs/p.csv");
  EXPECT_FALSE(config.global_importance_path);
  EXPECT_EQ(*config.local_importance_path, "/base/shap.csv");
  EXPECT_DOUBLE_EQ(config.params.alpha, 0.7);
  EXPECT_EQ(config.params.grid_size, 10);
  EXPECT_EQ(config.params.interp_points, 50);
  EXPECT_EQ(config.params.repeats, 3);
  EXPECT_EQ(config.params.bootstraps, 7);
  EXPECT_EQ(config.params.strategy, RankAlignmentStrategy::kCountProportion);
  EXPECT_EQ(config.params.seed, 99u);
}

TEST(ConfigTest, RejectsBadInput) {
  const std::string ds = R"("dataset": {"path": "d.csv", "target": "y", "task": "regression"})";
  const auto bad = [&](const std::string& body) {
    EXPECT_THROW(ParseConfig("{" + body + "}", "/"), ValidationError) << body;
  };
  bad(ds);  // no models
  bad(ds + R"(, "models": [{"name": "a", "kind": "forest"}])");
  bad(ds + R"(, "models": [{"name": "a", "kind": "linear"}], "colour": 1)");
  bad(ds + R"(, "models": [{"name": "a", "kind": "external"}])");
  bad(ds + R"(, "models": [{"name": "a", "kind": "linear"}, {"name": "a", "kind": "tree"}])");
  bad(ds + R"(, "models": [{"name": "a", "kind": "linear"}], "params": {"alpha": 1.5}])");
  bad(ds + R"(, "models": [{"name": "a", "kind": "linear"}], "seed": -1)");
  EXPECT_THROW(ParseConfig("{not json", "/"), ValidationError);
}

// A report filled with arbitrary but valid-looking values.
MetricsReport SampleReport() {
  MetricsReport r;
  r.run_config.seed = 5;
  r.run_config.task = "regression";
  r.run_config.families = {"efficacy", "global", "local", "surrogate"};
  r.run_config.feature_names = {"a", "b"};
  r.run_config.num_samples = 10;
  r.run_config.num_features = 2;
  r.run_config.dataset_digest = "abc";
  r.run_config.global_explainer = "permutation";
  r.run_config.local_explainer = "shap.csv";
  r.run_config.input_digests["local"] = "def";
  ModelReport m;
  m.name = "lin<&>";
  m.kind = "linear";
  m.efficacy.rmse = 0.5;
  m.efficacy.smape = 0.25;
  m.efficacy.mse = 0.25;
  m.global.spread_divergence = 0.3;
  m.global.alpha_score = 0.5;
  m.global.fluctuation_ratio = 0.0;
  m.global.rank_alignment = 1.0 / 3.0;
  m.global.importance = {0.75, 0.25};
  m.global.fluctuation_per_feature = {0.0, std::nullopt};
  m.global.subgroup_names = {"Q01", "Q12"};
  m.global.subgroup_importance = {{0.5, 0.5}, {1.0, 0.0}};
  m.local.rank_consistency = 0.8;
  m.local.importance_stability = 0.9;
  m.local.consistency_per_feature = {0.8, 0.8};
  m.local.stability_per_feature = {0.9, 0.9};
  m.surrogate.degradation = 0.4;
  m.surrogate.fidelity = 0.1 + 0.2;
  m.surrogate.feature_stability = 1.0;
  m.surrogate.selected_features = {0};
  m.surrogate.bootstrap_feature_sets = {{0}, {0, 1}};
  m.surrogate.tree = nlohmann::ordered_json{{"value", 1.5}};
  r.models.push_back(m);
  ModelReport skipped = m;
  skipped.name = "table";
  skipped.kind = "predictions";
  skipped.global = {};
  skipped.local = {};
  skipped.skipped = {{"spread_divergence", "no live prediction"},
                     {"rank_consistency", "no live prediction"}};
  r.models.push_back(skipped);
  return r;
}

TEST(ReportJsonTest, RoundTripsByteIdentically) {
  const MetricsReport report = SampleReport();
  const std::string text = DumpReport(report);
  EXPECT_EQ(DumpReport(ParseReport(text)), text);
  const auto json = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(json["version"], "eamex-report/1");
  EXPECT_EQ(json.begin().key(), "version");
  EXPECT_EQ(json["reference_values"]["spread_divergence"], 1.0);
  EXPECT_EQ(json["reference_values"]["rank_consistency_table_orientation"], 0.0);
  EXPECT_DOUBLE_EQ(json["models"][0]["local"]["rank_inconsistency"].get<double>(), 1 - 0.8);
  EXPECT_TRUE(json["models"][1]["global"]["spread_divergence"].is_null());
  EXPECT_EQ(json["models"][1]["skipped"]["spread_divergence"], "no live prediction");
}

TEST(ReportJsonTest, RejectsWrongVersion) {
  auto json = ToJson(SampleReport());
  json["version"] = "eamex-report/0";
  EXPECT_THROW(ReportFromJson(json), ValidationError);
  EXPECT_THROW(ParseReport("[1,2"), ValidationError);
}

TEST(ReferenceValuesTest, FixedSet) {
  std::vector<std::pair<std::string, double>> got;
  for (const auto& [k, v] : ReferenceValues()) got.emplace_back(std::string(k), v);
  EXPECT_THAT(got, ElementsAre(std::pair<std::string, double>{"spread_divergence", 1},
                               std::pair<std::string, double>{"alpha_score", 0},
                               std::pair<std::string, double>{"fluctuation_ratio", 0},
                               std::pair<std::string, double>{"rank_alignment", 1},
                               std::pair<std::string, double>{"rank_consistency_table_orientation", 0},
                               std::pair<std::string, double>{"importance_stability_table_orientation", 0},
                               std::pair<std::string, double>{"degradation", 0},
                               std::pair<std::string, double>{"fidelity", 1},
                               std::pair<std::string, double>{"feature_stability", 1}));
}

std::vector<std::string> RowLabels(const std::string& table) {
  std::vector<std::string> labels;
  std::istringstream in(table);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("  ", 0) != 0) continue;
    const auto end = line.find("  ", 2);
    labels.push_back(line.substr(2, end - 2));
  }
  return labels;
}

TEST(RenderTableTest, RegressionRowSetAndFormatting) {
  MetricsReport report = SampleReport();
  report.models.resize(1);
  const std::string table = RenderTable(report);
  EXPECT_THAT(RowLabels(table),
              ElementsAre("RMSE", "SMAPE", "Spread Divergence", "Alpha Score",
                          "Fluctuation Ratio", "Rank Alignment", "Rank Consistency",
                          "Importance Stability", "MSE Degradation", "Surr. Fidelity",
                          "Surr. Feature Stability"));
  EXPECT_THAT(table, HasSubstr("0.500"));
  EXPECT_THAT(table, HasSubstr("Efficacy\n"));
  EXPECT_THAT(table, HasSubstr("Global Feature Imp.\n"));
  EXPECT_THAT(table, HasSubstr("Local Feature Imp.\n"));
  EXPECT_THAT(table, HasSubstr("Surrogate\n"));
  // Table orientation: 1 - 0.8 consistency.
  EXPECT_THAT(table, HasSubstr("0.200"));
  const auto header = table.substr(0, table.find('\n'));
  EXPECT_EQ(header.substr(header.size() - 3), "REF");
}

TEST(RenderTableTest, SkippedCellsAndClassificationRows) {
  MetricsReport report = SampleReport();
  report.run_config.task = "classification";
  report.models[0].efficacy = EfficacyScores{0.5, 0.25, {}, {}, {}};
  const std::string table = RenderTable(report);
  EXPECT_THAT(table, HasSubstr("—"));
  const auto labels = RowLabels(table);
  EXPECT_EQ(labels.front(), "Accuracy");
  EXPECT_EQ(labels[1], "F1-Score");
  EXPECT_THAT(labels, ::testing::Contains("Acc. Degradation"));
  // Every row has the same display width.
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);
  EXPECT_THROW(RenderTable(MetricsReport{}), ValidationError);
}

TEST(RadarTest, GoodnessMapping) {
  ModelReport m = SampleReport().models[0];
  const auto g = RadarGoodness(m);
  EXPECT_DOUBLE_EQ(*g[0], 0.3);          // spread, REF 1
  EXPECT_DOUBLE_EQ(*g[1], 0.5);          // alpha, REF 0
  EXPECT_DOUBLE_EQ(*g[4], 0.8);          // consistency via table orientation
  EXPECT_NEAR(*g[6], 0.6, 1e-15);        // degradation 0.4
  m.surrogate.degradation = 1.7;
  EXPECT_DOUBLE_EQ(*RadarGoodness(m)[6], 0.0);
  m.surrogate.degradation = -0.2;
  EXPECT_DOUBLE_EQ(*RadarGoodness(m)[6], 1.0);
  EXPECT_FALSE(RadarGoodness(SampleReport().models[1])[0]);
}

TEST(RadarTest, ReferenceValuesGiveUnitPolygon) {
  ModelReport m;
  m.name = "ideal";
  m.global = {1.0, 0.0, 0.0, 1.0};
  m.local.rank_consistency = 1.0;
  m.local.importance_stability = 1.0;
  m.surrogate.degradation = 0.0;
  m.surrogate.fidelity = 1.0;
  m.surrogate.feature_stability = 1.0;
  for (const auto& g : RadarGoodness(m)) EXPECT_DOUBLE_EQ(*g, 1.0);
}

TEST(RadarTest, ValidXmlAndDeterministic) {
  MetricsReport report = SampleReport();
  report.models.push_back(report.models[0]);
  report.models.back().name = "copy";
  const std::string svg = RenderRadar(report);
  EXPECT_EQ(svg, RenderRadar(report));
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  EXPECT_NO_THROW(boost::property_tree::read_xml(in, tree));
  EXPECT_THAT(svg, HasSubstr("lin&lt;&amp;&gt;"));
  EXPECT_THAT(svg, HasSubstr("class=\"skipped\""));
  // Identical models draw identical polygons.
  const auto first = svg.find("<polygon points=\"", svg.find("data-name=\"lin"));
  const auto last = svg.find("<polygon points=\"", svg.find("data-name=\"copy\""));
  const auto points = [&](std::size_t at) {
    const auto start = at + 16;
    return svg.substr(start, svg.find('"', start) - start);
  };
  EXPECT_EQ(points(first), points(last));
}

TEST(DeviationCsvTest, RowsInDisplayOrder) {
  RankDeviationMap map;
  map.num_samples = 2;
  map.num_features = 2;
  map.deviations = {0, 1, 1, 0};
  map.row_order = {1, 0};
  EXPECT_EQ(RenderDeviationCsv(map, {"a", "b"}), "sample,a,b\n1,1,0\n0,0,1\n");
}

SuiteInput RegressionInput(std::size_t m = 200, std::size_t d = 5) {
  const Matrix x = testdata::UniformMatrix(m, d, 42);
  Pcg32 noise(1, 1);
  SuiteInput input{testdata::Regression(x, [&](auto r) {
    return 2 * r[0] - r[1] + 0.5 * r[2] * r[2] + 0.05 * noise.Normal();
  })};
  input.params.seed = 3;
  return input;
}

TEST(RunSuiteTest, LinearModelHasZeroFluctuation) {
  SuiteInput input = RegressionInput();
  input.models.push_back({"lin", ModelKind::kBuiltinLinear});
  const auto report = RunSuite(input);
  ASSERT_EQ(report.models.size(), 1u);
  const auto& m = report.models[0];
  EXPECT_EQ(*m.global.fluctuation_ratio, 0.0);
  EXPECT_TRUE(m.skipped.empty());
  for (const auto& axis : RadarAxes()) EXPECT_TRUE(m.Metric(axis.key)) << axis.key;
}

TEST(RunSuiteTest, PredictionsOnlyModelSkipsLiveMetrics) {
  SuiteInput input = RegressionInput();
  ModelEntry entry{"stored", ModelKind::kPrecomputedTable};
  entry.predictions = PredictionSet(input.dataset.target());
  input.models.push_back(entry);
  const auto m = RunSuite(input).models[0];
  EXPECT_TRUE(m.efficacy.rmse);
  EXPECT_TRUE(m.surrogate.degradation);
  EXPECT_TRUE(m.surrogate.fidelity);
  EXPECT_TRUE(m.surrogate.feature_stability);
  for (const char* key : {"pdp", "permutation_importance", "fluctuation_ratio",
                          "spread_divergence", "rank_consistency"}) {
    EXPECT_TRUE(m.skipped.count(key)) << key;
  }
  for (const auto& axis : RadarAxes()) {
    EXPECT_TRUE(m.Metric(axis.key) || m.skipped.count(std::string(axis.key))) << axis.key;
  }
}

TEST(RunSuiteTest, IngestedLocalImportanceWorksWithoutLivePrediction) {
  SuiteInput input = RegressionInput(40, 3);
  ModelEntry entry{"stored", ModelKind::kPrecomputedTable};
  entry.predictions = PredictionSet(input.dataset.target());
  input.models.push_back(entry);
  input.local_importance = NormalizeLocal(input.dataset.features(), input.dataset.feature_names());
  const auto m = RunSuite(input).models[0];
  EXPECT_TRUE(m.local.rank_consistency);
  EXPECT_TRUE(m.local.importance_stability);
  EXPECT_TRUE(m.deviation_map);
}

TEST(RunSuiteTest, TwoModelsShareSeedAndDigest) {
  SuiteInput input = RegressionInput();
  input.models.push_back({"lin", ModelKind::kBuiltinLinear});
  input.models.push_back({"tree", ModelKind::kBuiltinTree});
  const auto report = RunSuite(input);
  ASSERT_EQ(report.models.size(), 2u);
  EXPECT_EQ(report.run_config.seed, 3u);
  EXPECT_EQ(report.run_config.dataset_digest, DatasetDigest(input.dataset));
  EXPECT_EQ(report.run_config.dataset_digest.size(), 64u);
}

TEST(RunSuiteTest, DeterministicAndIndependentOfJobs) {
  SuiteInput input = RegressionInput();
  input.models.push_back({"lin", ModelKind::kBuiltinLinear});
  input.models.push_back({"tree", ModelKind::kBuiltinTree});
  input.models.push_back({"tree2", ModelKind::kBuiltinTree});
  const std::string a = DumpReport(RunSuite(input));
  EXPECT_EQ(a, DumpReport(RunSuite(input)));
  RunOptions parallel;
  parallel.jobs = 3;
  EXPECT_EQ(a, DumpReport(RunSuite(input, parallel)));
}

TEST(RunSuiteTest, FamilyFilterMarksOthersSkipped) {
  SuiteInput input = RegressionInput(60, 3);
  input.models.push_back({"lin", ModelKind::kBuiltinLinear});
  RunOptions options;
  options.families = Families{false, false, true};
  const auto report = RunSuite(input, options);
  const auto& m = report.models[0];
  EXPECT_EQ(m.skipped.at("spread_divergence"), "family not requested");
  EXPECT_TRUE(m.surrogate.fidelity);
  EXPECT_THAT(report.run_config.families, ElementsAre("efficacy", "surrogate"));
}

TEST(RunSuiteTest, ModelErrorsCarryContext) {
  SuiteInput input = RegressionInput(30, 2);
  input.models.push_back({"logit", ModelKind::kBuiltinLogistic});
  try {
    RunSuite(input);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_THAT(e.what(), HasSubstr("model 'logit'"));
  }
}

TEST(RunSuiteTest, ClassificationSuite) {
  const Matrix x = testdata::UniformMatrix(150, 4, 8);
  SuiteInput input{testdata::Classification(
      x, [](auto r) { return r[0] + 0.5 * r[1] > 0.1 ? 1.0 : 0.0; }, 2)};
  input.models.push_back({"logit", ModelKind::kBuiltinLogistic});
  input.models.push_back({"tree", ModelKind::kBuiltinTree});
  const auto report = RunSuite(input);
  for (const auto& m : report.models) {
    EXPECT_TRUE(m.efficacy.accuracy);
    EXPECT_TRUE(m.efficacy.f1_macro);
    EXPECT_FALSE(m.efficacy.rmse);
    for (const auto& axis : RadarAxes()) EXPECT_TRUE(m.Metric(axis.key)) << axis.key;
    EXPECT_THAT(m.global.subgroup_names, ElementsAre("class_0", "class_1"));
  }
}

TEST(RunSuiteTest, LoadsFromConfigFiles) {
  const auto dir = testdata::TempDir("suite");
  SuiteInput input = RegressionInput(50, 3);
  testdata::WriteText(dir / "data.csv", testdata::DatasetCsv(input.dataset));
  testdata::WriteText(dir / "global.csv", "x2,x1,x0\n1,2,3\n");
  testdata::WriteText(dir / "cfg.json", R"({
    "dataset": {"path": "data.csv", "target": "y", "task": "regression"},
    "models": [{"name": "lin", "kind": "linear"}],
    "explainers": {"global": "global.csv"},
    "seed": 3
  })");
  const auto report = RunSuite(LoadConfig(dir / "cfg.json"));
  const auto& m = report.models[0];
  EXPECT_THAT(m.global.importance, ElementsAre(0.5, 2.0 / 6.0, 1.0 / 6.0));
  EXPECT_TRUE(m.skipped.count("rank_alignment"));
  EXPECT_EQ(report.run_config.global_explainer, "global.csv");
  EXPECT_EQ(report.run_config.input_digests.at("global"), Sha256Hex("x2,x1,x0\n1,2,3\n"));
  EXPECT_EQ(report.run_config.dataset_digest, DatasetDigest(input.dataset));
}

TEST(Sha256Test, KnownVector) {
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ComputeMetricsTest, MatchesFileBasedRun) {
  const auto dir = testdata::TempDir("bind");
  const Matrix x = testdata::UniformMatrix(40, 3, 77);
  const Dataset data = testdata::Regression(x, [](auto r) { return r[0] - r[2]; });
  std::vector<double> preds(40);
  Matrix local(40, 3);
  Pcg32 rng(2, 2);
  for (std::size_t i = 0; i < 40; ++i) {
    preds[i] = data.target()[i] + 0.1 * rng.Normal();
    for (std::size_t j = 0; j < 3; ++j) local(i, j) = rng.Normal();
  }
  testdata::WriteText(dir / "data.csv", testdata::DatasetCsv(data));
  std::string pcsv = "prediction\n";
  std::string lcsv = "x0,x1,x2\n";
  for (std::size_t i = 0; i < 40; ++i) {
    pcsv += fmt::format("{}\n", preds[i]);
    lcsv += fmt::format("{},{},{}\n", local(i, 0), local(i, 1), local(i, 2));
  }
  testdata::WriteText(dir / "p.csv", pcsv);
  testdata::WriteText(dir / "local.csv", lcsv);
  testdata::WriteText(dir / "cfg.json", R"({
    "dataset": {"path": "data.csv", "target": "y", "task": "regression"},
    "models": [{"name": "model", "kind": "predictions", "predictions_path": "p.csv"}],
    "explainers": {"local": "local.csv"},
    "seed": 11
  })");
  MetricsReport from_files = RunSuite(LoadConfig(dir / "cfg.json"));
  SuiteParams params;
  params.seed = 11;
  MetricsReport in_memory = ComputeMetrics(x, data.feature_names(), data.target(),
                                           Task::kRegression, PredictionSet(preds), local,
                                           std::nullopt, params);
  // Provenance fields differ by construction; everything else must agree.
  in_memory.run_config.local_explainer = from_files.run_config.local_explainer;
  in_memory.run_config.input_digests = from_files.run_config.input_digests;
  EXPECT_EQ(DumpReport(in_memory), DumpReport(from_files));

  EXPECT_THROW(ComputeMetrics(x, data.feature_names(), std::vector<double>(39, 0.0),
                              Task::kRegression, PredictionSet(preds), std::nullopt,
                              std::nullopt, params),
               ValidationError);
}

}  // namespace
}  // namespace eamex
