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

// Functional/Structural Ratio: structural and functional scores from
// constraint satisfaction, the raw ratio, and its bounded structurality index.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mcg/core.hpp"

namespace mcg {

struct StructuralFunctional {
  double structural = 0.0;
  double functional = 0.0;
};

// S = sum_i w_i * s_i, F = 1 - S.
inline StructuralFunctional structural_functional(const ConstraintProfile& profile,
                                                  const ConstraintScheme& scheme) {
  // F is summed over the unsatisfied weights rather than taken as 1 - S, so a
  // fully structural profile gets F == 0 exactly despite rounding in the sum.
  double s = 0.0, f = 0.0;
  for (const auto& c : scheme.constraints) {
    auto it = profile.satisfaction.find(c.id);
    const double sat = it != profile.satisfaction.end() ? it->second : 0.0;
    s += c.weight * sat;
    f += c.weight * (1.0 - sat);
  }
  return {s, f};
}

// (1 - S) / (S + epsilon). Lower is more structural.
inline double fsr(double structural, double epsilon) {
  return (1.0 - structural) / (structural + epsilon);
}

// Inverts the raw ratio (I = 1/FSR) and maps it to I / (1 + I). A raw ratio
// of 0 maps to 1, its continuous limit.
inline double normalize_fsr(double fsr_raw) {
  if (fsr_raw == 0.0) return 1.0;
  const double inverse = 1.0 / fsr_raw;
  return inverse / (1.0 + inverse);
}

struct FsrResult {
  std::string model;
  double structural = 0.0;
  double functional = 0.0;
  double fsr_raw = 0.0;
  double fsr_normalized = 0.0;
  // Linear alternative to the non-linear index; equals the structural score.
  double linear_normalized = 0.0;
};

inline FsrResult fsr_for(std::string name, const ConstraintProfile& profile,
                         const ConstraintScheme& scheme, double epsilon) {
  const auto sf = structural_functional(profile, scheme);
  const double raw = sf.functional / (sf.structural + epsilon);
  return {std::move(name), sf.structural, sf.functional, raw, normalize_fsr(raw), sf.structural};
}

// One row per reporting unit, in suite order. Group members share a profile,
// so a group is scored from its first member.
inline std::vector<FsrResult> fsr_table(const ValidatedSuite& suite) {
  std::vector<FsrResult> out;
  out.reserve(suite.units().size());
  for (const auto& unit : suite.units()) {
    const auto& model = suite->models[unit.members.front()];
    out.push_back(fsr_for(unit.name, model.constraint_profile, suite->scheme, suite->epsilon));
  }
  return out;
}

}  // namespace mcg
