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

// Local one-at-a-time sensitivity of the raw FSR to constraint weights.
//
// Each constraint weight is moved up and down by a relative step, the other
// weights are renormalized proportionally, and every unit's FSR is recomputed
// and compared against the baseline. Cells are ordered by constraint, then
// direction (+ before -), then unit.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/core.hpp"
#include "mcg/fsr.hpp"

namespace mcg {

enum class Direction { kIncrease, kDecrease };

inline std::string_view to_string(Direction d) { return d == Direction::kIncrease ? "+" : "-"; }

inline double percent_change(double base, double perturbed) {
  if (base == 0.0) throw DomainError("percent change from a zero baseline is undefined");
  return 100.0 * (perturbed - base) / base;
}

struct SensitivityCell {
  std::string model;
  std::string constraint;
  Direction direction = Direction::kIncrease;
  double percent = 0.0;
};

struct SkippedPerturbation {
  std::string constraint;
  Direction direction = Direction::kIncrease;
};

struct SensitivityMatrix {
  double perturbation = 0.30;
  std::vector<std::string> models;
  std::vector<std::string> constraints;
  std::vector<SensitivityCell> cells;
  bool ranking_stable = true;
  std::vector<SkippedPerturbation> skipped;
  // Units whose baseline FSR is 0 (fully structural); no percentage exists.
  std::vector<std::string> degenerate;

  std::optional<double> at(std::string_view model, std::string_view constraint, Direction d) const {
    for (const auto& c : cells) {
      if (c.model == model && c.constraint == constraint && c.direction == d) return c.percent;
    }
    return std::nullopt;
  }
};

// Unit names ordered by descending raw FSR, ties broken by name.
inline std::vector<std::string> fsr_ranking(const std::vector<FsrResult>& results) {
  std::vector<std::size_t> order(results.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (results[a].fsr_raw != results[b].fsr_raw) return results[a].fsr_raw > results[b].fsr_raw;
    return results[a].model < results[b].model;
  });
  std::vector<std::string> names;
  names.reserve(order.size());
  for (auto i : order) names.push_back(results[i].model);
  return names;
}

namespace detail {

inline std::vector<FsrResult> fsr_under(const ValidatedSuite& suite, const ConstraintScheme& scheme) {
  std::vector<FsrResult> out;
  for (const auto& unit : suite.units()) {
    const auto& m = suite->models[unit.members.front()];
    out.push_back(fsr_for(unit.name, m.constraint_profile, scheme, suite->epsilon));
  }
  return out;
}

}  // namespace detail

inline SensitivityMatrix oat_sensitivity(const ValidatedSuite& suite, double relative = 0.30) {
  if (!(relative > 0.0 && relative < 1.0)) {
    throw DomainError("relative perturbation must lie in (0,1)");
  }
  SensitivityMatrix out;
  out.perturbation = relative;
  for (const auto& c : suite->scheme.constraints) out.constraints.push_back(c.id);

  const auto baseline = detail::fsr_under(suite, suite->scheme);
  const auto base_rank = fsr_ranking(baseline);
  for (const auto& r : baseline) {
    if (r.fsr_raw == 0.0) {
      out.degenerate.push_back(r.model);
    } else {
      out.models.push_back(r.model);
    }
  }

  for (const auto& c : suite->scheme.constraints) {
    for (Direction d : {Direction::kIncrease, Direction::kDecrease}) {
      const double signed_step = d == Direction::kIncrease ? relative : -relative;
      const double w_new = c.weight * (1.0 + signed_step);
      if (!(w_new > 0.0 && w_new < 1.0)) {
        out.skipped.push_back({c.id, d});
        continue;
      }
      const auto perturbed = detail::fsr_under(suite, perturb_weights(suite->scheme, c.id, signed_step));
      for (std::size_t u = 0; u < baseline.size(); ++u) {
        if (baseline[u].fsr_raw == 0.0) continue;
        out.cells.push_back({baseline[u].model, c.id, d,
                             percent_change(baseline[u].fsr_raw, perturbed[u].fsr_raw)});
      }
      if (fsr_ranking(perturbed) != base_rank) out.ranking_stable = false;
    }
  }
  return out;
}

}  // namespace mcg
