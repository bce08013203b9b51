/*
 * Copyright 2026 The mcg Authors.
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

// Result tables (markdown, CSV, JSON) and the sensitivity heatmap (JSON, SVG).
// All output is deterministic for a given input.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mcg/config.hpp"
#include "mcg/core.hpp"
#include "mcg/fsr.hpp"
#include "mcg/generality.hpp"
#include "mcg/performance.hpp"
#include "mcg/plausibility.hpp"
#include "mcg/sensitivity.hpp"

namespace mcg {

enum class TableKind { kFsr, kFsrComparison, kGenerality, kPerformance, kPlausibility };
enum class TableFormat { kMarkdown, kCsv, kJson };
enum class HeatmapFormat { kJson, kSvg };

inline constexpr std::array<TableKind, 5> kAllTables = {TableKind::kFsr, TableKind::kFsrComparison,
                                                        TableKind::kGenerality, TableKind::kPerformance,
                                                        TableKind::kPlausibility};

inline std::string_view to_string(TableKind k) {
  switch (k) {
    case TableKind::kFsr: return "fsr";
    case TableKind::kFsrComparison: return "fsr-comparison";
    case TableKind::kGenerality: return "generality";
    case TableKind::kPerformance: return "performance";
    case TableKind::kPlausibility: return "plausibility";
  }
  return "";
}

inline TableKind parse_table_kind(std::string_view id) {
  for (auto k : kAllTables) {
    if (to_string(k) == id) return k;
  }
  throw DomainError("unknown table id " + std::string(id));
}

inline TableFormat parse_table_format(std::string_view id) {
  if (id == "markdown") return TableFormat::kMarkdown;
  if (id == "csv") return TableFormat::kCsv;
  if (id == "json") return TableFormat::kJson;
  throw DomainError("unknown table format " + std::string(id));
}

// Fixed-point text; never prints a negative zero.
inline std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline std::string format_signed(double v, int decimals) {
  std::string s = format_fixed(v, decimals);
  if (s.front() != '-' && s.find_first_not_of("0.") != std::string::npos) s.insert(0, "+");
  return s;
}

namespace detail {

struct Cell {
  std::string text;
  Json value;  // full-precision value for JSON output
};

inline Cell num(double v, int decimals) { return {format_fixed(v, decimals), v}; }
inline Cell signed_num(double v, int decimals) { return {format_signed(v, decimals), v}; }
inline Cell text(std::string s) { return {s, s}; }
inline Cell missing(std::string shown = "N/A") { return {std::move(shown), nullptr}; }

struct Table {
  std::string id;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;
};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render(const Table& t, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::kMarkdown: {
      os << "|";
      for (const auto& c : t.columns) os << ' ' << c << " |";
      os << "\n|";
      for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i == 0 ? " :--- |" : " ---: |");
      os << '\n';
      for (const auto& row : t.rows) {
        os << "|";
        for (const auto& cell : row) os << ' ' << cell.text << " |";
        os << '\n';
      }
      if (!t.notes.empty()) {
        os << '\n';
        for (const auto& n : t.notes) os << "> " << n << '\n';
      }
      break;
    }
    case TableFormat::kCsv: {
      for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
      os << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i].text);
        os << '\n';
      }
      break;
    }
    case TableFormat::kJson: {
      Json doc = Json::object();
      doc["table"] = t.id;
      doc["columns"] = t.columns;
      Json rows = Json::array();
      for (const auto& row : t.rows) {
        Json r = Json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i].value;
        rows.push_back(std::move(r));
      }
      doc["rows"] = std::move(rows);
      doc["notes"] = t.notes;
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

inline const std::string kRoundingNote =
    "Values are computed at full precision and rounded only for display; figures derived from "
    "already-rounded intermediates can differ in the last printed digit.";

inline Table fsr_table_view(const ValidatedSuite& suite) {
  Table t;
  t.id = "fsr";
  t.columns.push_back("Model");
  for (const auto& c : suite->scheme.constraints) {
    t.columns.push_back(c.id + " f");
    t.columns.push_back(c.id + " s");
  }
  t.columns.insert(t.columns.end(), {"F_M", "S_M", "FSR_M"});

  const auto results = fsr_table(suite);
  for (std::size_t u = 0; u < results.size(); ++u) {
    const auto& r = results[u];
    const auto& sat = suite->models[suite.units()[u].members.front()].constraint_profile.satisfaction;
    std::vector<Cell> row{text(r.model)};
    for (const auto& c : suite->scheme.constraints) {
      const int s = sat.at(c.id) == 1.0 ? 1 : 0;
      row.push_back({std::to_string(1 - s), 1 - s});
      row.push_back({std::to_string(s), s});
    }
    row.push_back(num(r.functional, 3));
    row.push_back(num(r.structural, 3));
    row.push_back(num(r.fsr_raw, 2));
    t.rows.push_back(std::move(row));
  }
  std::ostringstream legend;
  legend << "Constraints:";
  for (std::size_t i = 0; i < suite->scheme.size(); ++i) {
    const auto& c = suite->scheme.constraints[i];
    legend << (i ? "; " : " ") << c.id << " = " << (c.label.empty() ? c.id : c.label)
           << " (w=" << fmt_number(c.weight) << ")";
  }
  t.notes.push_back(legend.str());
  t.notes.push_back("FSR_M = F_M / (S_M + epsilon), epsilon = " + fmt_number(suite->epsilon) + ".");
  t.notes.push_back(kRoundingNote);
  return t;
}

inline Table fsr_comparison_view(const ValidatedSuite& suite) {
  Table t;
  t.id = "fsr-comparison";
  t.columns.push_back("");
  const auto results = fsr_table(suite);
  for (const auto& r : results) t.columns.push_back(r.model);
  std::vector<Cell> nonlinear{text("Non-linear")}, linear{text("Linear")};
  for (const auto& r : results) {
    nonlinear.push_back(num(r.fsr_normalized, 3));
    linear.push_back(num(r.linear_normalized, 3));
  }
  t.rows.push_back(std::move(nonlinear));
  t.rows.push_back(std::move(linear));
  t.notes.push_back("Non-linear: FSR' = I / (1 + I) with I = 1 / FSR_M. Linear: S_M.");
  t.notes.push_back(kRoundingNote);
  return t;
}

inline Table generality_view(const ValidatedSuite& suite) {
  Table t;
  t.id = "generality";
  t.columns = {"Model", "Quant. Know.", "Fluid Reas.", "Vis. Proc.", "Lan.&Verb.", "Sens./Mot.", "G_M", "G_M(1)"};
  for (const auto& r : generality_table(suite)) {
    const auto& c = r.coverage;
    t.rows.push_back({text(r.model), num(c.quantitative, 3), num(c.fluid, 3), num(c.visual, 3),
                      num(c.language, 3), num(c.sensorimotor, 3), num(r.g_embodied, 3), num(r.g_flat, 3)});
  }
  t.notes.push_back("G_M = 0.5 * mean(cognitive) + 0.5 * sensorimotor; G_M(1) = mean of all five domains.");
  t.notes.push_back(kRoundingNote);
  return t;
}

inline std::vector<Cell> performance_row(const PerformanceResult& r, std::string bench) {
  std::vector<Cell> row{text(r.is_group_average ? r.model + " (avg)" : r.model), text(std::move(bench)),
                        num(r.mean_human_accuracy, 3), num(r.mean_model_accuracy, 3),
                        signed_num(r.mean_accuracy_delta, 3)};
  if (r.is_group_average) {
    row.push_back(missing("--"));
    row.push_back(missing("--"));
  } else {
    // Mean error flag in [-1, 1]; a single benchmark shows its flag.
    std::optional<double> mean_flag;
    if (r.error_score) mean_flag = 2.0 * *r.error_score - 1.0;
    row.push_back(mean_flag ? signed_num(*mean_flag, 3) : missing());
    row.push_back(r.timing_score ? num(*r.timing_score, 3) : missing());
  }
  row.push_back(num(r.pm, 3));
  return row;
}

inline Table performance_view(const ValidatedSuite& suite) {
  Table t;
  t.id = "performance";
  t.columns = {"Model", "Bench.", "Human Baseline", "Accuracy", "Delta", "Error Patterns", "Resp. Time", "PM_M"};
  const auto perf = performance_table(suite);

  // A group's averaged row follows its last member.
  std::vector<std::optional<std::size_t>> group_after(suite->models.size());
  std::size_t g = 0;
  for (const auto& unit : suite.units()) {
    if (unit.is_group) group_after[unit.members.back()] = g++;
  }
  for (std::size_t i = 0; i < suite->models.size(); ++i) {
    std::string bench;
    for (const auto& b : suite->models[i].benchmarks) bench += (bench.empty() ? "" : "; ") + b.name;
    t.rows.push_back(performance_row(perf.rows[i], bench));
    if (group_after[i]) t.rows.push_back(performance_row(perf.group_rows[*group_after[i]], "--"));
  }
  const auto& w = suite->pm_weights;
  t.notes.push_back("PM_M = (alpha*A + beta*E + gamma*T) over available components, weights rescaled to sum 1; "
                    "alpha, beta, gamma = " + fmt_number(w.alpha) + ", " + fmt_number(w.beta) + ", " +
                    fmt_number(w.gamma) + ".");
  for (const auto& gr : perf.group_rows) {
    t.notes.push_back(gr.model + " (avg) averages member rows; Delta is the signed mean, mean |Delta| = " +
                      format_fixed(gr.mean_abs_accuracy_delta, 3) + ".");
  }
  t.notes.push_back(kRoundingNote);
  return t;
}

inline Table plausibility_view(const ValidatedSuite& suite, const std::optional<std::string>& scheme_filter,
                               bool embodied, bool flat) {
  Table t;
  t.id = "plausibility";
  t.columns = {"Model", "FSR'_M", "G_M", "G_M(1)", "PM_M"};
  std::vector<std::pair<std::string, GeneralityVariant>> picks;
  for (const auto& s : suite->cp_schemes) {
    if (scheme_filter && s.name != *scheme_filter) continue;
    if (embodied) {
      picks.emplace_back(s.name, GeneralityVariant::kEmbodied);
      t.columns.push_back("CP_M [" + s.name + "]");
    }
    if (flat) {
      picks.emplace_back(s.name, GeneralityVariant::kFlat);
      t.columns.push_back("CP_M(1) [" + s.name + "]");
    }
  }
  if (scheme_filter && picks.empty() && (embodied || flat)) {
    throw DomainError("unknown weighting scheme " + *scheme_filter);
  }
  for (const auto& r : plausibility_table(suite)) {
    std::vector<Cell> row{text(r.model), num(r.fsr_normalized, 3), num(r.g_embodied, 3), num(r.g_flat, 3),
                          num(r.pm, 3)};
    for (const auto& [name, variant] : picks) row.push_back(num(*r.cp_at(name, variant), 3));
    t.rows.push_back(std::move(row));
  }
  std::ostringstream schemes;
  schemes << "CP_M = lambda*FSR' + mu*G + nu*PM; CP_M(1) uses G_M(1).";
  for (const auto& s : suite->cp_schemes) {
    if (scheme_filter && s.name != *scheme_filter) continue;
    schemes << ' ' << s.name << " = (" << fmt_number(s.lambda) << ", " << fmt_number(s.mu) << ", "
            << fmt_number(s.nu) << ").";
  }
  t.notes.push_back(schemes.str());
  t.notes.push_back(kRoundingNote);
  return t;
}

}  // namespace detail

inline std::string emit_table(const ValidatedSuite& suite, TableKind which, TableFormat format) {
  switch (which) {
    case TableKind::kFsr: return detail::render(detail::fsr_table_view(suite), format);
    case TableKind::kFsrComparison: return detail::render(detail::fsr_comparison_view(suite), format);
    case TableKind::kGenerality: return detail::render(detail::generality_view(suite), format);
    case TableKind::kPerformance: return detail::render(detail::performance_view(suite), format);
    case TableKind::kPlausibility:
      return detail::render(detail::plausibility_view(suite, std::nullopt, true, true), format);
  }
  throw DomainError("unknown table");
}

// Plausibility table restricted to one weighting scheme (nullopt = all) and
// to the requested generality variants.
inline std::string emit_plausibility(const ValidatedSuite& suite, const std::optional<std::string>& scheme,
                                     bool embodied, bool flat, TableFormat format) {
  return detail::render(detail::plausibility_view(suite, scheme, embodied, flat), format);
}

// ---------------------------------------------------------------------------
// Heatmap
// ---------------------------------------------------------------------------

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string heatmap_json(const SensitivityMatrix& m) {
  Json doc = Json::object();
  doc["perturbation"] = m.perturbation;
  doc["models"] = m.models;
  doc["constraints"] = m.constraints;
  Json panels = Json::object();
  for (Direction d : {Direction::kIncrease, Direction::kDecrease}) {
    Json grid = Json::array();
    for (const auto& model : m.models) {
      Json row = Json::array();
      for (const auto& c : m.constraints) {
        auto v = m.at(model, c, d);
        row.push_back(v ? Json(*v) : Json(nullptr));
      }
      grid.push_back(std::move(row));
    }
    panels[d == Direction::kIncrease ? "positive" : "negative"] = std::move(grid);
  }
  doc["panels"] = std::move(panels);
  doc["ranking_stable"] = m.ranking_stable;
  Json skipped = Json::array();
  for (const auto& s : m.skipped) skipped.push_back({{"constraint", s.constraint}, {"direction", to_string(s.direction)}});
  doc["skipped"] = std::move(skipped);
  doc["degenerate"] = m.degenerate;
  return doc.dump(2) + "\n";
}

inline std::string heatmap_svg(const SensitivityMatrix& m) {
  constexpr int kCellW = 72, kCellH = 30, kLabelW = 110, kTop = 64, kGap = 40, kMargin = 16;
  const int cols = static_cast<int>(m.constraints.size());
  const int rows = static_cast<int>(m.models.size());
  const int panel_w = kLabelW + cols * kCellW;
  const int width = 2 * kMargin + 2 * panel_w + kGap;
  const int height = kTop + rows * kCellH + kMargin;

  double max_abs = 0.0;
  for (const auto& c : m.cells) max_abs = std::max(max_abs, std::abs(c.percent));

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  const std::string step = format_fixed(100.0 * m.perturbation, 0);

  int panel = 0;
  for (Direction d : {Direction::kIncrease, Direction::kDecrease}) {
    const int x0 = kMargin + panel * (panel_w + kGap);
    os << "<g class=\"panel\" id=\"panel-" << (d == Direction::kIncrease ? "positive" : "negative") << "\">\n";
    os << "<text x=\"" << x0 << "\" y=\"20\" font-weight=\"bold\">"
       << (d == Direction::kIncrease ? "(A) +" : "(B) -") << step << "% weight perturbation</text>\n";
    for (int c = 0; c < cols; ++c) {
      os << "<text x=\"" << x0 + kLabelW + c * kCellW + kCellW / 2 << "\" y=\"" << kTop - 8
         << "\" text-anchor=\"middle\">" << xml_escape(m.constraints[c]) << "</text>\n";
    }
    for (int r = 0; r < rows; ++r) {
      const int y = kTop + r * kCellH;
      os << "<text x=\"" << x0 + kLabelW - 8 << "\" y=\"" << y + kCellH / 2 + 4 << "\" text-anchor=\"end\">"
         << xml_escape(m.models[r]) << "</text>\n";
      for (int c = 0; c < cols; ++c) {
        const int x = x0 + kLabelW + c * kCellW;
        const auto v = m.at(m.models[r], m.constraints[c], d);
        if (!v) {
          os << "<rect class=\"cell\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCellW << "\" height=\""
             << kCellH << "\" fill=\"#dddddd\" stroke=\"white\"/>\n";
          continue;
        }
        const double t = max_abs > 0.0 ? std::abs(*v) / max_abs : 0.0;
        // White to dark red, linear in |delta|.
        const int red = static_cast<int>(std::lround(255.0 - t * (255.0 - 165.0)));
        const int green = static_cast<int>(std::lround(255.0 - t * 255.0));
        const int blue = static_cast<int>(std::lround(255.0 - t * (255.0 - 38.0)));
        os << "<rect class=\"cell\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCellW << "\" height=\""
           << kCellH << "\" fill=\"rgb(" << red << ',' << green << ',' << blue << ")\" stroke=\"white\"/>\n";
        os << "<text x=\"" << x + kCellW / 2 << "\" y=\"" << y + kCellH / 2 + 4 << "\" text-anchor=\"middle\" fill=\""
           << (t > 0.6 ? "white" : "black") << "\">" << format_signed(*v, 1) << "</text>\n";
      }
    }
    os << "</g>\n";
    ++panel;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace detail

inline std::string emit_heatmap(const SensitivityMatrix& matrix, HeatmapFormat format) {
  return format == HeatmapFormat::kJson ? detail::heatmap_json(matrix) : detail::heatmap_svg(matrix);
}

}  // namespace mcg
