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

#ifndef EAMEX_REPORT_RENDER_H_
#define EAMEX_REPORT_RENDER_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "eamex/metrics/local_metrics.h"
#include "eamex/report/report.h"

namespace eamex {

// Fixed-width text table: one column per model, REF last, three decimals,
// "—" for skipped values. Families absent from the run are left out.
std::string RenderTable(const MetricsReport& report);

struct RadarAxis {
  std::string_view key;
  std::string_view label;
  std::string_view family;  // "global", "local" or "surrogate"
  double reference;         // 1 or 0
};

const std::array<RadarAxis, 9>& RadarAxes();

// Metric mapped so that 1 is ideal: the value itself for reference-1
// metrics, 1 - min(value, 1) for reference-0 metrics, clamped to [0, 1].
// Rank consistency and importance stability use the table orientation.
std::array<std::optional<double>, 9> RadarGoodness(const ModelReport& model);

std::string RenderRadar(const MetricsReport& report);

// Deviation matrix as CSV: header "sample,<feature...>", rows in display
// order, each cell |rank - modal rank|.
std::string RenderDeviationCsv(const RankDeviationMap& map,
                               const std::vector<std::string>& feature_names);

}  // namespace eamex

#endif  // EAMEX_REPORT_RENDER_H_
