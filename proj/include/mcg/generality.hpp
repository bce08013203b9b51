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

#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "mcg/core.hpp"

namespace mcg {

// 0.5 * mean(cognitive grades) + 0.5 * sensorimotor grade.
inline double generality(const DomainCoverage& coverage) {
  const auto cognitive = coverage.cognitive();
  const double mean =
      std::accumulate(cognitive.begin(), cognitive.end(), 0.0) / static_cast<double>(cognitive.size());
  return 0.5 * mean + 0.5 * coverage.sensorimotor;
}

// Sensorimotor counted as one more domain, all domains weighted equally.
inline double generality_flat(const DomainCoverage& coverage) {
  const auto cognitive = coverage.cognitive();
  const double sum = std::accumulate(cognitive.begin(), cognitive.end(), 0.0) + coverage.sensorimotor;
  return sum / static_cast<double>(cognitive.size() + 1);
}

struct GeneralityResult {
  std::string model;
  DomainCoverage coverage;
  double g_embodied = 0.0;
  double g_flat = 0.0;
};

inline std::vector<GeneralityResult> generality_table(const ValidatedSuite& suite) {
  std::vector<GeneralityResult> out;
  out.reserve(suite.units().size());
  for (const auto& unit : suite.units()) {
    const auto& cov = suite->models[unit.members.front()].domain_coverage;
    out.push_back({unit.name, cov, generality(cov), generality_flat(cov)});
  }
  return out;
}

}  // namespace mcg
