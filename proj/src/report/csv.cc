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

#include "eamex/report/csv.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "eamex/core/error.h"
#include "eamex/core/normalize.h"

namespace eamex {
namespace {

std::string Trim(std::string_view cell) {
  const auto first = cell.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = cell.find_last_not_of(" \t\r");
  cell = cell.substr(first, last - first + 1);
  if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"') {
    cell = cell.substr(1, cell.size() - 2);
  }
  return std::string(cell);
}

std::vector<std::string> SplitLine(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Maps each expected feature name to its column in `header`.
std::vector<std::size_t> MatchColumns(const CsvTable& table,
                                      const std::vector<std::string>& names,
                                      const std::string& source) {
  if (table.header.size() != names.size()) {
    throw ParseError(source, 1,
                     "expected " + std::to_string(names.size()) +
                         " feature columns, got " +
                         std::to_string(table.header.size()));
  }
  std::vector<std::size_t> columns;
  for (const auto& name : names) {
    const auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end()) {
      throw ParseError(source, 1, "missing feature column '" + name + "'");
    }
    columns.push_back(static_cast<std::size_t>(it - table.header.begin()));
  }
  return columns;
}

Matrix Reorder(const Matrix& rows, const std::vector<std::size_t>& columns) {
  Matrix out(rows.rows(), columns.size());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) out(i, j) = rows(i, columns[j]);
  }
  return out;
}

}  // namespace

CsvTable ParseCsv(const std::string& text, const std::string& source) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    std::vector<std::string> cells = SplitLine(line);
    if (!have_header) {
      if (line_number == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
        cells.front().erase(0, 3);
      }
      std::set<std::string> seen;
      for (const auto& name : cells) {
        if (name.empty()) throw ParseError(source, line_number, "empty column name");
        if (!seen.insert(name).second) {
          throw ParseError(source, line_number, "duplicate column '" + name + "'");
        }
      }
      table.header = std::move(cells);
      table.rows = Matrix(0, table.header.size());
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw ParseError(source, line_number,
                       "expected " + std::to_string(table.header.size()) +
                           " cells, got " + std::to_string(cells.size()));
    }
    std::vector<double> values(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string& cell = cells[c];
      const char* begin = cell.data();
      const char* end = begin + cell.size();
      if (!cell.empty() && *begin == '+') ++begin;
      const auto [ptr, ec] = std::from_chars(begin, end, values[c]);
      if (cell.empty() || ec != std::errc() || ptr != end ||
          !std::isfinite(values[c])) {
        throw ParseError(source, line_number,
                         "non-numeric value '" + cell + "' in column '" +
                             table.header[c] + "'");
      }
    }
    table.rows.AppendRow(values);
    table.line_numbers.push_back(line_number);
  }
  if (!have_header) throw ParseError(source, 1, "missing header row");
  return table;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CsvTable ReadCsv(const std::filesystem::path& path) {
  return ParseCsv(ReadFile(path), path.string());
}

Dataset LoadDataset(const std::filesystem::path& path, const std::string& target,
                    Task task) {
  const CsvTable table = ReadCsv(path);
  const auto it = std::find(table.header.begin(), table.header.end(), target);
  if (it == table.header.end()) {
    throw ParseError(path.string(), 1, "target column '" + target + "' not found");
  }
  const auto target_col = static_cast<std::size_t>(it - table.header.begin());
  std::vector<std::size_t> feature_cols;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c == target_col) continue;
    feature_cols.push_back(c);
    names.push_back(table.header[c]);
  }
  if (task == Task::kClassification) {
    for (std::size_t i = 0; i < table.rows.rows(); ++i) {
      const double y = table.rows(i, target_col);
      if (y < 0 || y != std::floor(y)) {
        throw ParseError(path.string(), table.line_numbers[i],
                         "classification target must be a class id, got " +
                             std::to_string(y));
      }
    }
  }
  return Dataset(Reorder(table.rows, feature_cols), std::move(names),
                 table.rows.Column(target_col), task);
}

PredictionSet LoadPredictions(const std::filesystem::path& path,
                              const Dataset& dataset) {
  const CsvTable table = ReadCsv(path);
  const auto& header = table.header;
  const auto it = std::find(header.begin(), header.end(), "prediction");
  if (it == header.end()) {
    throw ParseError(path.string(), 1, "missing 'prediction' column");
  }
  if (table.rows.rows() != dataset.num_samples()) {
    throw ValidationError(path.string() + ": " + std::to_string(table.rows.rows()) +
                          " prediction rows for " +
                          std::to_string(dataset.num_samples()) + " samples");
  }
  std::vector<double> values =
      table.rows.Column(static_cast<std::size_t>(it - header.begin()));
  std::optional<Matrix> proba;
  const bool has_proba = std::find(header.begin(), header.end(), "proba_0") != header.end();
  if (has_proba) {
    if (dataset.task() != Task::kClassification) {
      throw ParseError(path.string(), 1, "probability columns on a regression task");
    }
    std::vector<std::size_t> cols;
    for (int c = 0; c < dataset.num_classes(); ++c) {
      const std::string name = "proba_" + std::to_string(c);
      const auto pc = std::find(header.begin(), header.end(), name);
      if (pc == header.end()) {
        throw ParseError(path.string(), 1, "missing column '" + name + "'");
      }
      cols.push_back(static_cast<std::size_t>(pc - header.begin()));
    }
    proba = Reorder(table.rows, cols);
  }
  PredictionSet predictions(std::move(values), std::move(proba));
  predictions.ValidateFor(dataset);
  return predictions;
}

FeatureImportance ParseGlobalImportance(const std::string& text,
                                        const std::string& source,
                                        const std::vector<std::string>& feature_names) {
  const CsvTable table = ParseCsv(text, source);
  const auto columns = MatchColumns(table, feature_names, source);
  if (table.rows.rows() != 1) {
    throw ValidationError(source + ": global importance needs exactly 1 data row, got " +
                          std::to_string(table.rows.rows()));
  }
  const Matrix ordered = Reorder(table.rows, columns);
  const auto row = ordered.Row(0);
  return NormalizeImportance(std::vector<double>(row.begin(), row.end()),
                             feature_names);
}

LocalImportanceMatrix ParseLocalImportance(
    const std::string& text, const std::string& source,
    const std::vector<std::string>& feature_names, std::size_t num_samples) {
  const CsvTable table = ParseCsv(text, source);
  const auto columns = MatchColumns(table, feature_names, source);
  if (table.rows.rows() != num_samples) {
    throw ValidationError(source + ": local importance has " +
                          std::to_string(table.rows.rows()) + " rows but the dataset has " +
                          std::to_string(num_samples) + " samples");
  }
  return NormalizeLocal(Reorder(table.rows, columns), feature_names);
}

FeatureImportance IngestGlobalImportance(const std::filesystem::path& path,
                                         const std::vector<std::string>& feature_names) {
  return ParseGlobalImportance(ReadFile(path), path.string(), feature_names);
}

LocalImportanceMatrix IngestLocalImportance(
    const std::filesystem::path& path,
    const std::vector<std::string>& feature_names, std::size_t num_samples) {
  return ParseLocalImportance(ReadFile(path), path.string(), feature_names,
                              num_samples);
}

}  // namespace eamex
