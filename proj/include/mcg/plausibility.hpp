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

// Cognitive Plausibility: convex combination of the structurality index,
// generality and performance match, plus ranking by the result.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/core.hpp"
#include "mcg/fsr.hpp"
#include "mcg/generality.hpp"
#include "mcg/performance.hpp"

namespace mcg {

enum class GeneralityVariant { kEmbodied, kFlat };

inline std::string_view to_string(GeneralityVariant v) {
  return v == GeneralityVariant::kEmbodied ? "embodied" : "flat";
}

inline double cognitive_plausibility(double fsr_normalized, double generality, double pm,
                                     const WeightingScheme& scheme) {
  return scheme.lambda * fsr_normalized + scheme.mu * generality + scheme.nu * pm;
}

struct CpCell {
  std::string scheme;
  GeneralityVariant variant = GeneralityVariant::kEmbodied;
  double value = 0.0;
};

struct PlausibilityRow {
  std::string model;
  double fsr_normalized = 0.0;
  double g_embodied = 0.0;
  double g_flat = 0.0;
  double pm = 0.0;
  std::vector<CpCell> cp;

  std::optional<double> cp_at(std::string_view scheme, GeneralityVariant variant) const {
    for (const auto& c : cp) {
      if (c.scheme == scheme && c.variant == variant) return c.value;
    }
    return std::nullopt;
  }
};

// Every suite weighting scheme crossed with both generality variants. Group
// rows use the group-averaged PM.
inline std::vector<PlausibilityRow> plausibility_table(const ValidatedSuite& suite) {
  const auto fsr_rows = fsr_table(suite);
  const auto gen_rows = generality_table(suite);
  const auto perf = performance_table(suite);

  std::vector<PlausibilityRow> rows;
  rows.reserve(suite.units().size());
  for (std::size_t u = 0; u < suite.units().size(); ++u) {
    PlausibilityRow row;
    row.model = suite.units()[u].name;
    row.fsr_normalized = fsr_rows[u].fsr_normalized;
    row.g_embodied = gen_rows[u].g_embodied;
    row.g_flat = gen_rows[u].g_flat;
    row.pm = perf.for_unit(suite.units()[u]).pm;
    for (const auto& scheme : suite->cp_schemes) {
      row.cp.push_back({scheme.name, GeneralityVariant::kEmbodied,
                        cognitive_plausibility(row.fsr_normalized, row.g_embodied, row.pm, scheme)});
      row.cp.push_back({scheme.name, GeneralityVariant::kFlat,
                        cognitive_plausibility(row.fsr_normalized, row.g_flat, row.pm, scheme)});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Model names by descending CP under (scheme, variant), ties by name.
inline std::vector<std::string> rank_models(const std::vector<PlausibilityRow>& rows,
                                            std::string_view scheme, GeneralityVariant variant) {
  if (rows.empty()) throw DomainError("cannot rank an empty table");
  std::vector<std::pair<double, std::string>> keyed;
  keyed.reserve(rows.size());
  for (const auto& r : rows) {
    auto v = r.cp_at(scheme, variant);
    if (!v) throw DomainError("unknown weighting scheme " + std::string(scheme));
    keyed.emplace_back(*v, r.model);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::string> out;
  out.reserve(keyed.size());
  for (auto& [value, name] : keyed) out.push_back(std::move(name));
  return out;
}

}  // namespace mcg
