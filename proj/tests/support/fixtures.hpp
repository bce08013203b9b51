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

// Shared test fixtures: the bundled reference suite, a small hand-built suite
// and random generators for property tests.

#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mcg/mcg.hpp"

namespace fixtures {

inline std::string read_reference_text() {
  std::ifstream in(MCG_REFERENCE_SUITE);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const mcg::ValidatedSuite& reference() {
  static const mcg::ValidatedSuite suite = mcg::parse_suite(read_reference_text());
  return suite;
}

inline mcg::ConstraintScheme default_scheme() {
  return {{{"C1", "One-to-one mapping", 0.1, "SMT"},
           {"C2", "Parallel connectivity", 0.1, "SMT"},
           {"C3", "Systematicity", 0.3, "SMT"},
           {"C4", "Inferential projection", 0.1, "SMT"},
           {"C5", "Categorization", 0.3, "CTM"},
           {"C6", "Property selection", 0.1, "CTM"}}};
}

inline mcg::ConstraintProfile bits(const std::vector<int>& b) {
  mcg::ConstraintProfile p;
  for (std::size_t i = 0; i < b.size(); ++i) p.satisfaction["C" + std::to_string(i + 1)] = b[i];
  return p;
}

inline mcg::ModelProfile model(std::string name, const std::vector<int>& b, mcg::DomainCoverage cov = {},
                               double human = 0.8, double acc = 0.7) {
  mcg::ModelProfile m;
  m.name = std::move(name);
  m.constraint_profile = bits(b);
  m.domain_coverage = cov;
  m.benchmarks.push_back({"bench", human, acc, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
  return m;
}

inline mcg::EvaluationSuite small_suite() {
  mcg::EvaluationSuite s;
  s.scheme = default_scheme();
  s.models.push_back(model("A", {1, 1, 1, 1, 0, 0}, {0, 0.5, 0.5, 0, 0}));
  s.models.push_back(model("B", {0, 0, 0, 0, 1, 1}, {0, 0.5, 0, 0.5, 0}));
  return s;
}

// ---------------------------------------------------------------------------
// Random generators
// ---------------------------------------------------------------------------

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// k positive weights summing to 1, each comfortably inside (0,1).
inline std::vector<double> random_weights(std::mt19937_64& rng, int k) {
  std::vector<double> w(k);
  double sum = 0.0;
  for (auto& x : w) sum += (x = uniform(rng, 0.05, 1.0));
  for (auto& x : w) x /= sum;
  return w;
}

inline mcg::ConstraintScheme random_scheme(std::mt19937_64& rng, int k) {
  const auto w = random_weights(rng, k);
  mcg::ConstraintScheme s;
  for (int i = 0; i < k; ++i) {
    s.constraints.push_back({"K" + std::to_string(i), "constraint " + std::to_string(i), w[i],
                             i % 2 ? "CTM" : "SMT"});
  }
  return s;
}

inline double random_grade(std::mt19937_64& rng) { return 0.5 * pick(rng, 0, 2); }

inline mcg::BenchmarkRecord random_benchmark(std::mt19937_64& rng, int i) {
  mcg::BenchmarkRecord b;
  b.name = "bench-" + std::to_string(i);
  b.human_accuracy = uniform(rng, 0.0, 1.0);
  b.model_accuracy = uniform(rng, 0.0, 1.0);
  switch (pick(rng, 0, 2)) {
    case 1: b.error_pattern = mcg::ErrorPattern::kReplicates; break;
    case 2: b.error_pattern = mcg::ErrorPattern::kDiverges; break;
    default: break;
  }
  switch (pick(rng, 0, 2)) {
    case 1:
      b.model_time = uniform(rng, 0.1, 30.0);
      b.human_time = uniform(rng, 0.1, 30.0);
      break;
    case 2: b.timing_similarity = uniform(rng, 0.0, 1.0); break;
    default: break;
  }
  return b;
}

// A valid suite with 1-6 models, some of them in groups.
inline mcg::EvaluationSuite random_suite(std::mt19937_64& rng) {
  mcg::EvaluationSuite s;
  const int k = pick(rng, 2, 8);
  s.scheme = random_scheme(rng, k);
  s.epsilon = uniform(rng, 1e-4, 0.1);
  const auto pmw = random_weights(rng, 3);
  s.pm_weights = {pmw[0], pmw[1], pmw[2]};
  s.cp_schemes.clear();
  const int n_schemes = pick(rng, 1, 3);
  for (int i = 0; i < n_schemes; ++i) {
    const auto cw = random_weights(rng, 3);
    s.cp_schemes.push_back({"scheme" + std::to_string(i), cw[0], cw[1], cw[2]});
  }

  const int n_models = pick(rng, 1, 6);
  std::optional<mcg::ModelProfile> group_template;
  for (int m = 0; m < n_models; ++m) {
    mcg::ModelProfile p;
    p.name = "model-" + std::to_string(m);
    const bool grouped = pick(rng, 0, 3) == 0;
    if (grouped && group_template) {
      p.constraint_profile = group_template->constraint_profile;
      p.domain_coverage = group_template->domain_coverage;
    } else {
      for (const auto& c : s.scheme.constraints) p.constraint_profile.satisfaction[c.id] = pick(rng, 0, 1);
      p.domain_coverage = {random_grade(rng), random_grade(rng), random_grade(rng), random_grade(rng),
                           random_grade(rng)};
    }
    if (grouped) {
      p.group = "group";
      if (!group_template) group_template = p;
    }
    const int n_bench = pick(rng, 1, 3);
    for (int b = 0; b < n_bench; ++b) p.benchmarks.push_back(random_benchmark(rng, b));
    s.models.push_back(std::move(p));
  }
  return s;
}

}  // namespace fixtures
