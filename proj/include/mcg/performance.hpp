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

// Performance Match: how closely a model tracks human baselines on accuracy,
// error patterns and response times.
//
// Components without evidence (no error flags, no timing data) are dropped
// and the remaining component weights are rescaled to sum to one. With equal
// (1/3) weights this is the plain mean of the available components.

#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcg/core.hpp"

namespace mcg {

struct AccuracyScore {
  double mean_delta = 0.0;  // mean of (model - human), as a decimal fraction
  double score = 0.0;       // 1 / (1 + |mean_delta|)
};

inline AccuracyScore accuracy_score(std::span<const BenchmarkRecord> benchmarks) {
  if (benchmarks.empty()) throw DomainError("accuracy score needs at least one benchmark");
  double sum = 0.0;
  for (const auto& b : benchmarks) sum += b.model_accuracy - b.human_accuracy;
  const double mean = sum / static_cast<double>(benchmarks.size());
  return {mean, 1.0 / (1.0 + std::abs(mean))};
}

// (mean flag + 1) / 2 over the flagged benchmarks; nullopt when none is flagged.
inline std::optional<double> error_pattern_score(std::span<const BenchmarkRecord> benchmarks) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& b : benchmarks) {
    if (!b.error_pattern) continue;
    sum += to_int(*b.error_pattern);
    ++n;
  }
  if (n == 0) return std::nullopt;
  return (sum / static_cast<double>(n) + 1.0) / 2.0;
}

// Per-benchmark timing similarity: 1 / (1 + |t_m - t_h| / t_h), or the
// directly supplied estimate. nullopt without timing data.
inline std::optional<double> timing_similarity(const BenchmarkRecord& b) {
  if (b.timing_similarity) return *b.timing_similarity;
  if (!b.model_time || !b.human_time) return std::nullopt;
  if (!(*b.human_time > 0.0)) {
    throw DomainError("benchmark " + b.name + ": human time must be > 0");
  }
  const double d = std::abs((*b.model_time - *b.human_time) / *b.human_time);
  return 1.0 / (1.0 + d);
}

inline std::optional<double> timing_score(std::span<const BenchmarkRecord> benchmarks) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& b : benchmarks) {
    if (auto t = timing_similarity(b)) {
      sum += *t;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

inline double performance_match(double accuracy, std::optional<double> error,
                                std::optional<double> timing, const PmWeights& weights) {
  double total = weights.alpha * accuracy;
  double mass = weights.alpha;
  if (error) {
    total += weights.beta * *error;
    mass += weights.beta;
  }
  if (timing) {
    total += weights.gamma * *timing;
    mass += weights.gamma;
  }
  // alpha == 0 with nothing else available leaves no evidence to weigh.
  if (mass == 0.0) return accuracy;
  return total / mass;
}

struct BenchmarkBreakdown {
  std::string name;
  double human_accuracy = 0.0;
  double model_accuracy = 0.0;
  double delta = 0.0;
  std::optional<ErrorPattern> error_pattern;
  std::optional<double> timing;
};

struct PerformanceResult {
  std::string model;
  double mean_accuracy_delta = 0.0;
  // Mean of |delta_i|; differs from |mean_accuracy_delta| when members
  // over- and undershoot the baseline.
  double mean_abs_accuracy_delta = 0.0;
  double mean_human_accuracy = 0.0;
  double mean_model_accuracy = 0.0;
  double accuracy_score = 0.0;
  std::optional<double> error_score;
  std::optional<double> timing_score;
  double pm = 0.0;
  std::vector<BenchmarkBreakdown> per_benchmark;
  bool is_group_average = false;
};

inline PerformanceResult evaluate_performance(const ModelProfile& model, const PmWeights& weights) {
  PerformanceResult r;
  r.model = model.name;
  const auto acc = accuracy_score(model.benchmarks);
  r.mean_accuracy_delta = acc.mean_delta;
  r.accuracy_score = acc.score;
  r.error_score = error_pattern_score(model.benchmarks);
  r.timing_score = timing_score(model.benchmarks);
  r.pm = performance_match(r.accuracy_score, r.error_score, r.timing_score, weights);

  double abs_sum = 0.0, human_sum = 0.0, model_sum = 0.0;
  for (const auto& b : model.benchmarks) {
    const double delta = b.model_accuracy - b.human_accuracy;
    abs_sum += std::abs(delta);
    human_sum += b.human_accuracy;
    model_sum += b.model_accuracy;
    r.per_benchmark.push_back(
        {b.name, b.human_accuracy, b.model_accuracy, delta, b.error_pattern, timing_similarity(b)});
  }
  const auto n = static_cast<double>(model.benchmarks.size());
  r.mean_abs_accuracy_delta = abs_sum / n;
  r.mean_human_accuracy = human_sum / n;
  r.mean_model_accuracy = model_sum / n;
  return r;
}

namespace detail {

template <typename Get>
std::optional<double> mean_of_present(std::span<const PerformanceResult> results, Get get) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : results) {
    if (auto v = get(r)) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

}  // namespace detail

// Unweighted mean of the members' rows. Error and timing scores average over
// the members that have them.
inline PerformanceResult group_average(std::span<const PerformanceResult> members,
                                       const std::string& group) {
  if (members.empty()) throw DomainError("group " + group + " has no members");
  if (members.size() == 1) {
    PerformanceResult single = members.front();
    single.model = group;
    single.is_group_average = true;
    return single;
  }
  const auto n = static_cast<double>(members.size());
  PerformanceResult r;
  r.model = group;
  r.is_group_average = true;
  for (const auto& m : members) {
    r.mean_accuracy_delta += m.mean_accuracy_delta;
    r.mean_abs_accuracy_delta += m.mean_abs_accuracy_delta;
    r.mean_human_accuracy += m.mean_human_accuracy;
    r.mean_model_accuracy += m.mean_model_accuracy;
    r.accuracy_score += m.accuracy_score;
    r.pm += m.pm;
    r.per_benchmark.insert(r.per_benchmark.end(), m.per_benchmark.begin(), m.per_benchmark.end());
  }
  r.mean_accuracy_delta /= n;
  r.mean_abs_accuracy_delta /= n;
  r.mean_human_accuracy /= n;
  r.mean_model_accuracy /= n;
  r.accuracy_score /= n;
  r.pm /= n;
  r.error_score = detail::mean_of_present(members, [](const PerformanceResult& m) { return m.error_score; });
  r.timing_score = detail::mean_of_present(members, [](const PerformanceResult& m) { return m.timing_score; });
  return r;
}

struct PerformanceTable {
  // One row per model, in suite order.
  std::vector<PerformanceResult> rows;
  // One averaged row per group, in order of first appearance.
  std::vector<PerformanceResult> group_rows;

  // PM for a reporting unit: the model's own row or its group's average.
  const PerformanceResult& for_unit(const ReportingUnit& unit) const {
    if (!unit.is_group) return rows[unit.members.front()];
    for (const auto& g : group_rows) {
      if (g.model == unit.name) return g;
    }
    throw DomainError("no performance row for group " + unit.name);
  }
};

inline PerformanceTable performance_table(const ValidatedSuite& suite) {
  PerformanceTable table;
  table.rows.reserve(suite->models.size());
  for (const auto& m : suite->models) table.rows.push_back(evaluate_performance(m, suite->pm_weights));
  for (const auto& unit : suite.units()) {
    if (!unit.is_group) continue;
    std::vector<PerformanceResult> members;
    for (auto idx : unit.members) members.push_back(table.rows[idx]);
    table.group_rows.push_back(group_average(members, unit.name));
  }
  return table;
}

}  // namespace mcg
