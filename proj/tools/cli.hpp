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

// Command-line front end. Exit codes: 0 success, 1 validation or schema
// error, 2 I/O error. Argument errors use CLI11's own codes.

#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcg/mcg.hpp"

#ifndef MCG_REFERENCE_SUITE
#define MCG_REFERENCE_SUITE "data/reference_suite.json"
#endif

namespace mcg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;

class IoError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("cannot write " + path.string());
}

inline ValidatedSuite load_suite(const std::string& path) { return parse_suite(read_file(path)); }

inline void deliver(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << content;
  } else {
    write_file(out_path, content);
  }
}

inline std::string reference_suite_path() {
  if (const char* env = std::getenv("MCG_REFERENCE_SUITE")) return env;
  return MCG_REFERENCE_SUITE;
}

// Writes the five tables (markdown) and the heatmap (SVG + JSON) for the
// suite at `dataset` into `out_dir`. Returns the written paths.
inline std::vector<std::filesystem::path> reproduce(const std::string& dataset,
                                                    const std::filesystem::path& out_dir) {
  const auto suite = load_suite(dataset);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  const std::vector<std::pair<TableKind, std::string>> tables = {
      {TableKind::kFsr, "table1_fsr.md"},
      {TableKind::kFsrComparison, "table2_fsr_comparison.md"},
      {TableKind::kGenerality, "table3_generality.md"},
      {TableKind::kPerformance, "table4_performance.md"},
      {TableKind::kPlausibility, "table5_plausibility.md"},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [kind, file] : tables) {
    written.push_back(out_dir / file);
    write_file(written.back(), emit_table(suite, kind, TableFormat::kMarkdown));
  }
  const auto matrix = oat_sensitivity(suite, 0.30);
  written.push_back(out_dir / "figure1_sensitivity.svg");
  write_file(written.back(), emit_heatmap(matrix, HeatmapFormat::kSvg));
  written.push_back(out_dir / "figure1_sensitivity.json");
  write_file(written.back(), emit_heatmap(matrix, HeatmapFormat::kJson));
  return written;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal Cognitive Grid scoring engine"};
  app.require_subcommand(1);

  std::string config, out_path, format = "markdown", scheme = "all", gen = "both", which;
  double perturb = 0.30;
  std::string heatmap_format = "json", out_dir = "reproduction", dataset;

  auto* eval = app.add_subcommand("eval", "Cognitive plausibility table");
  eval->add_option("--config", config, "Suite configuration (JSON)")->required();
  eval->add_option("--scheme", scheme, "Weighting scheme name or 'all'");
  eval->add_option("--generality", gen, "Generality variant")
      ->check(CLI::IsMember({"embodied", "flat", "both"}));
  eval->add_option("--format", format)->check(CLI::IsMember({"markdown", "csv", "json"}));
  eval->add_option("--out", out_path, "Output file (default stdout)");

  auto* table = app.add_subcommand("table", "One result table");
  table->add_option("--config", config)->required();
  table->add_option("--which", which)
      ->required()
      ->check(CLI::IsMember({"fsr", "fsr-comparison", "generality", "performance", "plausibility"}));
  table->add_option("--format", format)->check(CLI::IsMember({"markdown", "csv", "json"}));
  table->add_option("--out", out_path);

  auto* sens = app.add_subcommand("sensitivity", "One-at-a-time FSR weight sensitivity");
  sens->add_option("--config", config)->required();
  sens->add_option("--perturb", perturb, "Relative weight step in (0,1)");
  sens->add_option("--format", heatmap_format)->check(CLI::IsMember({"json", "svg"}));
  sens->add_option("--out", out_path);

  auto* validate = app.add_subcommand("validate", "Check a suite configuration");
  validate->add_option("--config", config)->required();

  auto* repro = app.add_subcommand("reproduce-paper", "Regenerate all tables and the heatmap from the bundled suite");
  repro->add_option("--out-dir", out_dir);
  repro->add_option("--dataset", dataset, "Suite to use instead of the bundled one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*eval) {
      const auto suite = load_suite(config);
      std::optional<std::string> filter;
      if (scheme != "all") filter = scheme;
      deliver(emit_plausibility(suite, filter, gen != "flat", gen != "embodied", parse_table_format(format)),
              out_path, out);
    } else if (*table) {
      const auto suite = load_suite(config);
      deliver(emit_table(suite, parse_table_kind(which), parse_table_format(format)), out_path, out);
    } else if (*sens) {
      const auto suite = load_suite(config);
      const auto matrix = oat_sensitivity(suite, perturb);
      deliver(emit_heatmap(matrix, heatmap_format == "svg" ? HeatmapFormat::kSvg : HeatmapFormat::kJson),
              out_path, out);
    } else if (*validate) {
      const auto suite = load_suite(config);
      out << "valid: " << suite->models.size() << " models, " << suite.units().size() << " reporting units, "
          << suite->scheme.size() << " constraints\n";
    } else if (*repro) {
      const auto start = std::chrono::steady_clock::now();
      const auto files = reproduce(dataset.empty() ? reference_suite_path() : dataset, out_dir);
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      for (const auto& f : files) out << "wrote " << f.string() << '\n';
      out << "done in " << ms << " ms\n";
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace mcg::cli
