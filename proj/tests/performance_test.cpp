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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mcg/performance.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace {

using mcg::BenchmarkRecord;
using mcg::ErrorPattern;

BenchmarkRecord rec(double human, double model, std::optional<ErrorPattern> e = std::nullopt) {
  return {"b", human, model, e, std::nullopt, std::nullopt, std::nullopt};
}

BenchmarkRecord timed(double tm, double th) {
  BenchmarkRecord b = rec(0.5, 0.5);
  b.model_time = tm;
  b.human_time = th;
  return b;
}

TEST(AccuracyScore, Examples) {
  std::vector<BenchmarkRecord> met = {rec(1.0, 0.599)};
  auto a = mcg::accuracy_score(met);
  EXPECT_NEAR(a.mean_delta, -0.401, 1e-12);
  EXPECT_NEAR(a.score, 0.714, 5e-4);

  std::vector<BenchmarkRecord> cog = {rec(0.733, 0.916)};
  a = mcg::accuracy_score(cog);
  EXPECT_NEAR(a.mean_delta, 0.183, 1e-12);
  EXPECT_NEAR(a.score, 1.0 / 1.183, 1e-12);
  EXPECT_NEAR(a.score, 0.8453, 5e-5);

  std::vector<BenchmarkRecord> same = {rec(0.42, 0.42)};
  EXPECT_EQ(mcg::accuracy_score(same).score, 1.0);
  EXPECT_THROW(mcg::accuracy_score({}), mcg::DomainError);
}

TEST(AccuracyScore, EvenInDeltaAndMaximalOnlyAtZero) {
  for (int i = -100; i <= 100; ++i) {
    const double d = i / 200.0;
    std::vector<BenchmarkRecord> over = {rec(0.5, 0.5 + d)};
    std::vector<BenchmarkRecord> under = {rec(0.5, 0.5 - d)};
    const double a = mcg::accuracy_score(over).score;
    EXPECT_NEAR(a, mcg::accuracy_score(under).score, 1e-12);
    EXPECT_GT(a, 0.0);
    EXPECT_LE(a, 1.0);
    EXPECT_EQ(a == 1.0, i == 0);
  }
}

TEST(ErrorPatternScore, Examples) {
  std::vector<BenchmarkRecord> plus = {rec(0.5, 0.5, ErrorPattern::kReplicates)};
  EXPECT_EQ(mcg::error_pattern_score(plus), 1.0);
  std::vector<BenchmarkRecord> minus = {rec(0.5, 0.5, ErrorPattern::kDiverges)};
  EXPECT_EQ(mcg::error_pattern_score(minus), 0.0);
  std::vector<BenchmarkRecord> mixed = {rec(0.5, 0.5, ErrorPattern::kReplicates),
                                        rec(0.5, 0.5, ErrorPattern::kDiverges)};
  EXPECT_EQ(mcg::error_pattern_score(mixed), 0.5);
  std::vector<BenchmarkRecord> none = {rec(0.5, 0.5)};
  EXPECT_FALSE(mcg::error_pattern_score(none).has_value());
}

TEST(ErrorPatternScore, FlaglessBenchmarksDoNotCount) {
  std::vector<BenchmarkRecord> b = {rec(0.5, 0.5, ErrorPattern::kReplicates),
                                    rec(0.5, 0.5, ErrorPattern::kDiverges),
                                    rec(0.5, 0.5, ErrorPattern::kDiverges)};
  const auto before = mcg::error_pattern_score(b);
  b.push_back(rec(0.1, 0.9));
  EXPECT_EQ(mcg::error_pattern_score(b), before);
  EXPECT_NEAR(*before, (-1.0 / 3.0 + 1.0) / 2.0, 1e-12);
}

TEST(TimingScore, Examples) {
  std::vector<BenchmarkRecord> aligned = {timed(3.0, 3.0)};
  EXPECT_EQ(mcg::timing_score(aligned), 1.0);
  std::vector<BenchmarkRecord> twice = {timed(4.0, 2.0)};
  EXPECT_DOUBLE_EQ(*mcg::timing_score(twice), 0.5);
  BenchmarkRecord estimate = rec(0.5, 0.5);
  estimate.timing_similarity = 0.59;
  std::vector<BenchmarkRecord> est = {estimate};
  EXPECT_EQ(mcg::timing_score(est), 0.59);
  std::vector<BenchmarkRecord> none = {rec(0.5, 0.5)};
  EXPECT_FALSE(mcg::timing_score(none).has_value());
  std::vector<BenchmarkRecord> bad = {timed(1.0, 0.0)};
  EXPECT_THROW(mcg::timing_score(bad), mcg::DomainError);
}

TEST(TimingScore, ScaleInvariantAndBounded) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const double tm = fixtures::uniform(rng, 0.01, 50), th = fixtures::uniform(rng, 0.01, 50);
    const double k = fixtures::uniform(rng, 0.01, 100);
    std::vector<BenchmarkRecord> a = {timed(tm, th)}, b = {timed(k * tm, k * th)};
    const double ta = *mcg::timing_score(a);
    EXPECT_NEAR(ta, *mcg::timing_score(b), 1e-12);
    EXPECT_GT(ta, 0.0);
    EXPECT_LE(ta, 1.0);
    EXPECT_NEAR(ta, 1.0 / (1.0 + std::abs(tm - th) / th), 1e-12);
  }
}

TEST(PerformanceMatch, Examples) {
  const mcg::PmWeights eq;
  EXPECT_NEAR(mcg::performance_match(0.8453, 1.0, std::nullopt, eq), 0.923, 5e-4);
  EXPECT_NEAR(mcg::performance_match(0.714, std::nullopt, std::nullopt, eq), 0.714, 1e-12);
  EXPECT_NEAR(mcg::performance_match(0.8696, 0.0, std::nullopt, eq), 0.436, 2e-3);
  EXPECT_NEAR(mcg::performance_match(0.6, 0.3, 0.9, eq), 0.6, 1e-12);
}

TEST(PerformanceMatch, WeightedRenormalization) {
  const mcg::PmWeights w{0.5, 0.3, 0.2};
  EXPECT_NEAR(mcg::performance_match(0.8, 0.4, 0.6, w), 0.5 * 0.8 + 0.3 * 0.4 + 0.2 * 0.6, 1e-12);
  EXPECT_NEAR(mcg::performance_match(0.8, 0.4, std::nullopt, w), (0.5 * 0.8 + 0.3 * 0.4) / 0.8, 1e-12);
  EXPECT_NEAR(mcg::performance_match(0.8, std::nullopt, 0.6, w), (0.5 * 0.8 + 0.2 * 0.6) / 0.7, 1e-12);
}

// Metamorphic: an absent component contributes neither a value nor a weight.
// Reassigning its weight (rescaling the others to keep the sum at 1) and
// attaching or varying evidence on the present components only moves PM
// through those components.
TEST(PerformanceMatch, AbsentComponentsCannotInfluence) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const auto w = fixtures::random_weights(rng, 3);
    const mcg::PmWeights pw{w[0], w[1], w[2]};
    const double a = fixtures::uniform(rng, 0.01, 1), e = fixtures::uniform(rng, 0, 1);
    const double t = fixtures::uniform(rng, 0, 1);

    // Move mass onto / off the absent error component.
    const double beta2 = fixtures::uniform(rng, 0.0, 0.95);
    const double k = (1.0 - beta2) / (pw.alpha + pw.gamma);
    const mcg::PmWeights shifted{pw.alpha * k, beta2, pw.gamma * k};
    EXPECT_NEAR(mcg::performance_match(a, std::nullopt, t, pw),
                mcg::performance_match(a, std::nullopt, t, shifted), 1e-12);

    // Same for an absent timing component.
    const double gamma2 = fixtures::uniform(rng, 0.0, 0.95);
    const double k2 = (1.0 - gamma2) / (pw.alpha + pw.beta);
    const mcg::PmWeights shifted2{pw.alpha * k2, pw.beta * k2, gamma2};
    EXPECT_NEAR(mcg::performance_match(a, e, std::nullopt, pw),
                mcg::performance_match(a, e, std::nullopt, shifted2), 1e-12);

    // Record path: the unflagged, untimed model scores its accuracy alone,
    // whatever the component weights.
    mcg::ModelProfile m;
    m.name = "m";
    m.benchmarks = {rec(0.5, 0.5 + a / 4)};
    EXPECT_NEAR(mcg::evaluate_performance(m, pw).pm, mcg::accuracy_score(m.benchmarks).score, 1e-12);

    const double full = mcg::performance_match(a, e, t, pw);
    EXPECT_GE(full, 0.0);
    EXPECT_LE(full, 1.0);
  }
}

TEST(PerformanceTable, ReferenceRowsMatchPrintedValues) {
  const auto table = mcg::performance_table(fixtures::reference());
  // Printed PM per Table row, in dataset order (SME repeats the CogSketch row).
  const std::vector<double> printed = {0.923, 0.923, 0.714, 0.436, 0.395, 0.468,
                                       0.472, 0.444, 0.711, 0.717, 0.711, 0.853};
  ASSERT_EQ(table.rows.size(), printed.size());
  const auto& models = fixtures::reference()->models;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const auto& b = models[i].benchmarks.front();
    std::optional<double> e;
    if (b.error_pattern) e = b.error_pattern == ErrorPattern::kReplicates ? 1.0 : 0.0;
    const double expected = oracle::pm_equal(oracle::accuracy(b.human_accuracy, b.model_accuracy), e, std::nullopt);
    EXPECT_NEAR(table.rows[i].pm, expected, 1e-12) << models[i].name;
    EXPECT_NEAR(table.rows[i].pm, printed[i], 2e-3) << models[i].name;
  }
  ASSERT_EQ(table.group_rows.size(), 1u);
  EXPECT_EQ(table.group_rows[0].model, "LLMs");
  EXPECT_NEAR(table.group_rows[0].pm, 0.578, 2e-3);
}

TEST(GroupAverage, ReferenceLlms) {
  const auto table = mcg::performance_table(fixtures::reference());
  const auto& g = table.group_rows[0];
  double pm = 0.0, delta = 0.0, abs_delta = 0.0;
  for (std::size_t i = 3; i < 12; ++i) {
    pm += table.rows[i].pm;
    delta += table.rows[i].mean_accuracy_delta;
    abs_delta += std::abs(table.rows[i].mean_accuracy_delta);
  }
  EXPECT_NEAR(g.pm, pm / 9, 1e-12);
  EXPECT_NEAR(g.pm, 0.57844, 1e-5);
  // Signed mean of the member deltas is -0.1949; the -0.228 figure in the
  // published table is the mean absolute delta.
  EXPECT_NEAR(g.mean_accuracy_delta, delta / 9, 1e-12);
  EXPECT_NEAR(g.mean_accuracy_delta, -1.754 / 9, 1e-12);
  EXPECT_NEAR(g.mean_abs_accuracy_delta, abs_delta / 9, 1e-12);
  EXPECT_NEAR(g.mean_abs_accuracy_delta, 0.228, 1e-3);
  EXPECT_NEAR(g.mean_human_accuracy, 0.830, 1e-3);
  EXPECT_NEAR(g.mean_model_accuracy, 0.636, 1e-3);
  EXPECT_EQ(g.error_score, 0.0);
  EXPECT_FALSE(g.timing_score.has_value());
}

TEST(GroupAverage, SingleMemberAndEmpty) {
  mcg::ModelProfile m;
  m.name = "solo";
  m.benchmarks = {rec(0.7, 0.6, ErrorPattern::kReplicates)};
  const auto r = mcg::evaluate_performance(m, {});
  const std::vector<mcg::PerformanceResult> one = {r};
  const auto g = mcg::group_average(one, "G");
  EXPECT_EQ(g.pm, r.pm);
  EXPECT_EQ(g.mean_accuracy_delta, r.mean_accuracy_delta);
  EXPECT_EQ(g.error_score, r.error_score);
  EXPECT_THROW(mcg::group_average({}, "G"), mcg::DomainError);
}

}  // namespace
