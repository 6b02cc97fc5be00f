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

#ifndef EAMEX_REPORT_CSV_H_
#define EAMEX_REPORT_CSV_H_

#include <filesystem>
#include <string>
#include <vector>

#include "eamex/core/matrix.h"
#include "eamex/core/types.h"

namespace eamex {

// Numeric CSV table: one header row of column names and numeric data rows.
// Cells are comma separated, surrounding whitespace and double quotes are
// stripped, blank lines are skipped.
struct CsvTable {
  std::vector<std::string> header;
  Matrix rows;
  // 1-based source line of each data row, for error messages.
  std::vector<int> line_numbers;
};

// Throws ParseError (with line number) on ragged rows, non-numeric or
// non-finite cells, and duplicate column names.
CsvTable ParseCsv(const std::string& text, const std::string& source);
CsvTable ReadCsv(const std::filesystem::path& path);

std::string ReadFile(const std::filesystem::path& path);

// Dataset whose target is the column named `target`; every other column is
// a feature.
Dataset LoadDataset(const std::filesystem::path& path, const std::string& target,
                    Task task);

// Stored model outputs, one row per dataset sample: a "prediction" column
// plus, for classification, optional "proba_0".."proba_{C-1}" columns.
PredictionSet LoadPredictions(const std::filesystem::path& path,
                              const Dataset& dataset);

// Explainer output files: a header of feature names (any order, matched by
// name) and one row (global) or one row per sample (local). Values are
// normalized with the core rules.
FeatureImportance IngestGlobalImportance(const std::filesystem::path& path,
                                         const std::vector<std::string>& feature_names);
LocalImportanceMatrix IngestLocalImportance(
    const std::filesystem::path& path,
    const std::vector<std::string>& feature_names, std::size_t num_samples);

// Same, from in-memory text.
FeatureImportance ParseGlobalImportance(const std::string& text,
                                        const std::string& source,
                                        const std::vector<std::string>& feature_names);
LocalImportanceMatrix ParseLocalImportance(
    const std::string& text, const std::string& source,
    const std::vector<std::string>& feature_names, std::size_t num_samples);

}  // namespace eamex

#endif  // EAMEX_REPORT_CSV_H_
