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

#include "eamex/report/render.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <fmt/format.h>

#include "eamex/core/error.h"

namespace eamex {
namespace {

constexpr std::string_view kDash = "—";

// Display width of a UTF-8 string, counting code points.
std::size_t Width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string PadLeft(std::string_view s, std::size_t width) {
  const std::size_t w = Width(s);
  return std::string(width > w ? width - w : 0, ' ') + std::string(s);
}

std::string PadRight(std::string_view s, std::size_t width) {
  const std::size_t w = Width(s);
  return std::string(s) + std::string(width > w ? width - w : 0, ' ');
}

std::string Cell(const std::optional<double>& value) {
  return value ? fmt::format("{:.3f}", *value) : std::string(kDash);
}

std::optional<double> Invert(const std::optional<double>& value) {
  if (!value) return std::nullopt;
  return 1.0 - *value;
}

struct Row {
  std::string label;
  std::function<std::optional<double>(const ModelReport&)> value;
  std::string reference;
};

struct Section {
  std::string title;
  std::vector<Row> rows;
};

std::vector<Section> Sections(const MetricsReport& report) {
  const RunConfig& rc = report.run_config;
  const bool regression = rc.task == "regression";
  const auto has = [&](std::string_view family) {
    return std::find(rc.families.begin(), rc.families.end(), family) != rc.families.end();
  };
  std::vector<Section> sections;
  if (regression) {
    sections.push_back({"Efficacy",
                        {{"RMSE", [](const ModelReport& m) { return m.efficacy.rmse; }, "0"},
                         {"SMAPE", [](const ModelReport& m) { return m.efficacy.smape; }, "0"}}});
  } else {
    sections.push_back(
        {"Efficacy",
         {{"Accuracy", [](const ModelReport& m) { return m.efficacy.accuracy; }, "1"},
          {"F1-Score", [](const ModelReport& m) { return m.efficacy.f1_macro; }, "1"}}});
  }
  if (has("global")) {
    sections.push_back(
        {"Global Feature Imp.",
         {{"Spread Divergence",
           [](const ModelReport& m) { return m.global.spread_divergence; }, "1"},
          {"Alpha Score", [](const ModelReport& m) { return m.global.alpha_score; }, "0"},
          {"Fluctuation Ratio",
           [](const ModelReport& m) { return m.global.fluctuation_ratio; }, "0"},
          {"Rank Alignment", [](const ModelReport& m) { return m.global.rank_alignment; },
           "1"}}});
  }
  if (has("local")) {
    sections.push_back(
        {"Local Feature Imp.",
         {{"Rank Consistency",
           [](const ModelReport& m) { return Invert(m.local.rank_consistency); }, "0"},
          {"Importance Stability",
           [](const ModelReport& m) { return Invert(m.local.importance_stability); },
           "0"}}});
  }
  if (has("surrogate")) {
    sections.push_back(
        {"Surrogate",
         {{regression ? "MSE Degradation" : "Acc. Degradation",
           [](const ModelReport& m) { return m.surrogate.degradation; }, "0"},
          {"Surr. Fidelity", [](const ModelReport& m) { return m.surrogate.fidelity; }, "1"},
          {"Surr. Feature Stability",
           [](const ModelReport& m) { return m.surrogate.feature_stability; }, "1"}}});
  }
  return sections;
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string_view FamilyColor(std::string_view family) {
  if (family == "global") return "#3c8031";
  if (family == "local") return "#b6321c";
  return "#af72b0";
}

constexpr std::array<std::string_view, 8> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

constexpr double kCx = 320.0;
constexpr double kCy = 300.0;
constexpr double kRadius = 200.0;

// Axis 0 points up; axes proceed clockwise.
double Angle(double i) {
  return -std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * i / 9.0;
}

std::string Point(double radius, double angle) {
  return fmt::format("{:.3f},{:.3f}", kCx + radius * std::cos(angle),
                     kCy + radius * std::sin(angle));
}

}  // namespace

std::string RenderTable(const MetricsReport& report) {
  if (report.models.empty()) throw ValidationError("cannot render an empty report");
  const std::vector<Section> sections = Sections(report);
  std::size_t label_width = std::string_view("Metrics").size();
  for (const auto& s : sections) {
    label_width = std::max(label_width, Width(s.title));
    for (const auto& r : s.rows) label_width = std::max(label_width, Width(r.label) + 2);
  }
  label_width += 2;
  std::vector<std::size_t> widths;
  for (const auto& m : report.models) widths.push_back(std::max<std::size_t>(7, Width(m.name)) + 2);
  constexpr std::size_t kRefWidth = 5;

  std::string out = PadRight("Metrics", label_width);
  for (std::size_t i = 0; i < report.models.size(); ++i) {
    out += PadLeft(report.models[i].name, widths[i]);
  }
  out += PadLeft("REF", kRefWidth) + "\n";
  const std::size_t total =
      label_width + kRefWidth + [&] { std::size_t t = 0; for (auto w : widths) t += w; return t; }();
  const std::string rule(total, '-');
  out += rule + "\n";
  for (const auto& section : sections) {
    out += section.title + "\n";
    for (const auto& row : section.rows) {
      out += PadRight("  " + row.label, label_width);
      for (std::size_t i = 0; i < report.models.size(); ++i) {
        out += PadLeft(Cell(row.value(report.models[i])), widths[i]);
      }
      out += PadLeft(row.reference, kRefWidth) + "\n";
    }
  }
  out += rule + "\n";
  return out;
}

const std::array<RadarAxis, 9>& RadarAxes() {
  static const std::array<RadarAxis, 9> kAxes = {{
      {kSpreadDivergence, "Spread Divergence", "global", 1.0},
      {kAlphaScore, "Alpha Score", "global", 0.0},
      {kFluctuationRatio, "Fluctuation Ratio", "global", 0.0},
      {kRankAlignment, "Rank Alignment", "global", 1.0},
      {kRankConsistency, "Rank Consistency", "local", 0.0},
      {kImportanceStability, "Importance Stability", "local", 0.0},
      {kDegradation, "Degradation", "surrogate", 0.0},
      {kFidelity, "Surr. Fidelity", "surrogate", 1.0},
      {kFeatureStability, "Surr. Feature Stability", "surrogate", 1.0},
  }};
  return kAxes;
}

std::array<std::optional<double>, 9> RadarGoodness(const ModelReport& model) {
  std::array<std::optional<double>, 9> out;
  for (std::size_t i = 0; i < 9; ++i) {
    const RadarAxis& axis = RadarAxes()[i];
    std::optional<double> value = model.Metric(axis.key);
    if (!value) continue;
    if (axis.key == kRankConsistency || axis.key == kImportanceStability) {
      value = 1.0 - *value;  // table orientation
    }
    const double g = axis.reference == 1.0 ? *value : 1.0 - std::min(*value, 1.0);
    out[i] = std::clamp(g, 0.0, 1.0);
  }
  return out;
}

std::string RenderRadar(const MetricsReport& report) {
  const auto& axes = RadarAxes();
  const double legend_top = kCy + kRadius + 70.0;
  const double height = legend_top + 22.0 * static_cast<double>(report.models.size()) + 20.0;
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"{0:.0f}\" "
      "viewBox=\"0 0 640 {0:.0f}\" font-family=\"sans-serif\" font-size=\"12\">\n",
      height);
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  // Family sectors.
  const double half = std::numbers::pi / 9.0;
  svg += "<g id=\"sectors\">\n";
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const double a = Angle(static_cast<double>(i));
    svg += fmt::format(
        "<path d=\"M {:.3f},{:.3f} L {} A {:.3f},{:.3f} 0 0 1 {} Z\" fill=\"{}\" "
        "fill-opacity=\"0.12\" stroke=\"none\"/>\n",
        kCx, kCy, Point(kRadius, a - half), kRadius, kRadius, Point(kRadius, a + half),
        FamilyColor(axes[i].family));
  }
  svg += "</g>\n";

  svg += "<g id=\"grid\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (int ring = 1; ring <= 4; ++ring) {
    std::string points;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (i > 0) points += ' ';
      points += Point(kRadius * ring / 4.0, Angle(static_cast<double>(i)));
    }
    svg += fmt::format("<polygon points=\"{}\"/>\n", points);
  }
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const double a = Angle(static_cast<double>(i));
    svg += fmt::format("<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\"/>\n",
                       kCx, kCy, kCx + kRadius * std::cos(a), kCy + kRadius * std::sin(a));
  }
  svg += "</g>\n";

  svg += "<g id=\"labels\" fill=\"#222222\">\n";
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const double a = Angle(static_cast<double>(i));
    const double c = std::cos(a);
    const std::string_view anchor = c > 0.2 ? "start" : (c < -0.2 ? "end" : "middle");
    svg += fmt::format(
        "<text x=\"{:.3f}\" y=\"{:.3f}\" text-anchor=\"{}\" dominant-baseline=\"middle\">"
        "{}</text>\n",
        kCx + (kRadius + 16.0) * c, kCy + (kRadius + 16.0) * std::sin(a), anchor,
        XmlEscape(axes[i].label));
  }
  svg += "</g>\n";

  for (std::size_t m = 0; m < report.models.size(); ++m) {
    const ModelReport& model = report.models[m];
    const std::string_view color = kPalette[m % kPalette.size()];
    const auto goodness = RadarGoodness(model);
    std::string points;
    std::string markers;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (i > 0) points += ' ';
      const double a = Angle(static_cast<double>(i));
      points += Point(kRadius * goodness[i].value_or(0.0), a);
      if (!goodness[i]) {
        // Skipped: vertex collapses to the centre; a cross on the axis marks it.
        const double r = 10.0 + 4.0 * static_cast<double>(m);
        const double x = kCx + r * std::cos(a);
        const double y = kCy + r * std::sin(a);
        markers += fmt::format(
            "<path class=\"skipped\" d=\"M {:.3f},{:.3f} L {:.3f},{:.3f} M {:.3f},{:.3f} "
            "L {:.3f},{:.3f}\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
            x - 3, y - 3, x + 3, y + 3, x - 3, y + 3, x + 3, y - 3, color);
      }
    }
    svg += fmt::format("<g class=\"model\" data-name=\"{}\">\n", XmlEscape(model.name));
    svg += fmt::format(
        "<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.15\" stroke=\"{}\" "
        "stroke-width=\"2\"/>\n",
        points, color, color);
    svg += markers;
    svg += "</g>\n";
  }

  svg += "<g id=\"legend\">\n";
  for (std::size_t m = 0; m < report.models.size(); ++m) {
    const double y = legend_top + 22.0 * static_cast<double>(m);
    svg += fmt::format(
        "<rect x=\"40\" y=\"{:.3f}\" width=\"14\" height=\"14\" fill=\"{}\"/>"
        "<text x=\"62\" y=\"{:.3f}\" dominant-baseline=\"middle\">{}</text>\n",
        y, kPalette[m % kPalette.size()], y + 7.0, XmlEscape(report.models[m].name));
  }
  const std::array<std::string_view, 3> families = {"global", "local", "surrogate"};
  for (std::size_t f = 0; f < families.size(); ++f) {
    const double y = legend_top + 22.0 * static_cast<double>(f);
    svg += fmt::format(
        "<rect x=\"440\" y=\"{:.3f}\" width=\"14\" height=\"14\" fill=\"{}\" "
        "fill-opacity=\"0.35\"/><text x=\"462\" y=\"{:.3f}\" "
        "dominant-baseline=\"middle\">{}</text>\n",
        y, FamilyColor(families[f]), y + 7.0, families[f]);
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

std::string RenderDeviationCsv(const RankDeviationMap& map,
                               const std::vector<std::string>& feature_names) {
  std::string out = "sample";
  for (const auto& name : feature_names) out += "," + name;
  out += "\n";
  for (std::size_t r = 0; r < map.num_samples; ++r) {
    const std::size_t i = map.row_order[r];
    out += std::to_string(i);
    for (std::size_t j = 0; j < map.num_features; ++j) {
      out += "," + std::to_string(map.at(i, j));
    }
    out += "\n";
  }
  return out;
}

}  // namespace eamex
