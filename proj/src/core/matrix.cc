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

#include "eamex/core/matrix.h"

#include <algorithm>

#include "eamex/core/error.h"

namespace eamex {

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  Matrix m;
  for (const auto& row : rows) m.AppendRow(row);
  return m;
}

std::vector<double> Matrix::Column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::SetColumn(std::size_t c, std::span<const double> values) {
  if (values.size() != rows_) {
    throw ValidationError("column length does not match the row count");
  }
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Matrix Matrix::SelectRows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto src = Row(indices[i]);
    std::copy(src.begin(), src.end(), out.Row(i).begin());
  }
  return out;
}

void Matrix::AppendRow(std::span<const double> row) {
  if (rows_ == 0 && data_.empty()) {
    cols_ = row.size();
  } else if (row.size() != cols_) {
    throw ValidationError("ragged rows: expected " + std::to_string(cols_) +
                          " values, got " + std::to_string(row.size()));
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

}  // namespace eamex
