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

// Domain types shared by every scoring engine: constraint schemes, model
// profiles, benchmark records, weighting schemes and the evaluation suite
// that binds them. Also hosts suite validation and the weight-vector algebra
// (proportional renormalization after a one-weight perturbation).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcg {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A violated suite invariant. `path()` locates the offending field, e.g.
// "models[CogSketch].satisfaction.C1".
class ValidationError : public Error {
 public:
  ValidationError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)),
        message_(message) {}

  const std::string& path() const noexcept { return path_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string path_;
  std::string message_;
};

// An argument outside an operation's domain (perturbation magnitude, zero
// baseline, empty evidence).
class DomainError : public Error {
 public:
  using Error::Error;
};

inline constexpr double kWeightSumTolerance = 1e-9;
inline constexpr double kDefaultEpsilon = 0.01;

// ---------------------------------------------------------------------------
// Constraint scheme
// ---------------------------------------------------------------------------

struct Constraint {
  std::string id;
  std::string label;
  double weight = 0.0;
  std::string theory;

  bool operator==(const Constraint&) const = default;
};

struct ConstraintScheme {
  std::vector<Constraint> constraints;

  std::size_t size() const noexcept { return constraints.size(); }

  // Index of `id`, or nullopt.
  std::optional<std::size_t> index_of(std::string_view id) const {
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      if (constraints[i].id == id) return i;
    }
    return std::nullopt;
  }

  double weight_sum() const {
    double sum = 0.0;
    for (const auto& c : constraints) sum += c.weight;
    return sum;
  }

  bool operator==(const ConstraintScheme&) const = default;
};

// ---------------------------------------------------------------------------
// Model data
// ---------------------------------------------------------------------------

// Satisfaction bits s_i keyed by constraint id. Stored as parsed (double) so
// that validation can report non-binary values; validated profiles hold only
// 0 or 1. The functional bit is always 1 - s_i and is never stored.
struct ConstraintProfile {
  std::map<std::string, double> satisfaction;

  bool operator==(const ConstraintProfile&) const = default;
};

// Grades on the three-point ordinal scale {0, 0.5, 1}.
struct DomainCoverage {
  double quantitative = 0.0;
  double fluid = 0.0;
  double visual = 0.0;
  double language = 0.0;
  double sensorimotor = 0.0;

  static constexpr std::array<std::string_view, 4> kCognitiveIds = {
      "quantitative", "fluid", "visual", "language"};

  std::array<double, 4> cognitive() const noexcept {
    return {quantitative, fluid, visual, language};
  }

  bool operator==(const DomainCoverage&) const = default;
};

enum class ErrorPattern : int { kDiverges = -1, kReplicates = +1 };

inline int to_int(ErrorPattern e) noexcept { return static_cast<int>(e); }

struct BenchmarkRecord {
  std::string name;
  double human_accuracy = 0.0;
  double model_accuracy = 0.0;
  std::optional<ErrorPattern> error_pattern;
  std::optional<double> model_time;
  std::optional<double> human_time;
  std::optional<double> timing_similarity;

  bool has_times() const noexcept { return model_time && human_time; }

  bool operator==(const BenchmarkRecord&) const = default;
};

struct ModelProfile {
  std::string name;
  ConstraintProfile constraint_profile;
  DomainCoverage domain_coverage;
  std::vector<BenchmarkRecord> benchmarks;
  std::optional<std::string> group;

  bool operator==(const ModelProfile&) const = default;
};

// ---------------------------------------------------------------------------
// Weightings
// ---------------------------------------------------------------------------

// (lambda, mu, nu) applied to (FSR', G, PM).
struct WeightingScheme {
  std::string name;
  double lambda = 0.0;
  double mu = 0.0;
  double nu = 0.0;

  static WeightingScheme nonequal() { return {"nonequal", 0.5, 0.25, 0.25}; }
  static WeightingScheme equal() {
    return {"equal", 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  }
  // FSR-led scheme with generality ahead of performance.
  static WeightingScheme alternative() {
    return {"alternative", 0.5, 0.3, 0.2};
  }

  bool operator==(const WeightingScheme&) const = default;
};

// (alpha, beta, gamma) applied to (accuracy, error pattern, timing).
struct PmWeights {
  double alpha = 1.0 / 3.0;
  double beta = 1.0 / 3.0;
  double gamma = 1.0 / 3.0;

  bool operator==(const PmWeights&) const = default;
};

struct EvaluationSuite {
  ConstraintScheme scheme;
  double epsilon = kDefaultEpsilon;
  std::vector<ModelProfile> models;
  PmWeights pm_weights;
  std::vector<WeightingScheme> cp_schemes = {WeightingScheme::nonequal(),
                                             WeightingScheme::equal()};

  bool operator==(const EvaluationSuite&) const = default;
};

// ---------------------------------------------------------------------------
// Reporting units
// ---------------------------------------------------------------------------

// A row in the per-system tables: either an ungrouped model or a whole group
// (e.g. "LLMs"). Members are indices into EvaluationSuite::models, in suite
// order; a group sits at the position of its first member.
struct ReportingUnit {
  std::string name;
  std::vector<std::size_t> members;
  bool is_group = false;
};

inline std::vector<ReportingUnit> reporting_units(const EvaluationSuite& suite) {
  std::vector<ReportingUnit> units;
  std::map<std::string, std::size_t, std::less<>> group_slot;
  for (std::size_t i = 0; i < suite.models.size(); ++i) {
    const auto& m = suite.models[i];
    if (!m.group) {
      units.push_back({m.name, {i}, false});
      continue;
    }
    auto it = group_slot.find(*m.group);
    if (it == group_slot.end()) {
      group_slot.emplace(*m.group, units.size());
      units.push_back({*m.group, {i}, true});
    } else {
      units[it->second].members.push_back(i);
    }
  }
  return units;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace detail {

inline std::string fmt_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

inline bool is_grade(double g) { return g == 0.0 || g == 0.5 || g == 1.0; }

inline bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

inline void check_scheme(const ConstraintScheme& scheme) {
  std::set<std::string, std::less<>> ids;
  for (std::size_t i = 0; i < scheme.constraints.size(); ++i) {
    const auto& c = scheme.constraints[i];
    const std::string path = "constraints[" + std::to_string(i) + "]";
    if (c.id.empty()) throw ValidationError(path + ".id", "constraint id must be non-empty");
    if (!ids.insert(c.id).second) {
      throw ValidationError(path + ".id", "duplicate constraint id " + c.id);
    }
    if (!(c.weight > 0.0 && c.weight < 1.0)) {
      throw ValidationError("constraints[" + c.id + "].weight",
                            "weight must lie strictly in (0,1), got " + fmt_number(c.weight));
    }
  }
  if (std::abs(scheme.weight_sum() - 1.0) > kWeightSumTolerance) {
    throw ValidationError("constraints", "weights sum " + fmt_number(scheme.weight_sum()) +
                                             ", expected 1");
  }
}

inline void check_weight_triple(const std::string& path, double a, double b, double c,
                                const char* names) {
  for (double v : {a, b, c}) {
    if (!in_unit_interval(v)) {
      throw ValidationError(path, std::string(names) + " must each lie in [0,1]");
    }
  }
  if (std::abs(a + b + c - 1.0) > kWeightSumTolerance) {
    throw ValidationError(path, std::string(names) + " sum " + fmt_number(a + b + c) +
                                    ", expected 1");
  }
}

inline void check_benchmark(const std::string& path, const BenchmarkRecord& b) {
  if (b.name.empty()) throw ValidationError(path + ".name", "benchmark name must be non-empty");
  if (!in_unit_interval(b.human_accuracy)) {
    throw ValidationError(path + ".human_accuracy", "accuracy must lie in [0,1]");
  }
  if (!in_unit_interval(b.model_accuracy)) {
    throw ValidationError(path + ".model_accuracy", "accuracy must lie in [0,1]");
  }
  if (b.model_time.has_value() != b.human_time.has_value()) {
    throw ValidationError(path, "model_time and human_time must be supplied together");
  }
  if (b.has_times() && b.timing_similarity) {
    throw ValidationError(path, "supply either model_time/human_time or timing_similarity, not both");
  }
  if (b.model_time && !(*b.model_time > 0.0)) {
    throw ValidationError(path + ".model_time", "time must be > 0");
  }
  if (b.human_time && !(*b.human_time > 0.0)) {
    throw ValidationError(path + ".human_time", "time must be > 0");
  }
  if (b.timing_similarity && !in_unit_interval(*b.timing_similarity)) {
    throw ValidationError(path + ".timing_similarity", "timing similarity must lie in [0,1]");
  }
}

inline void check_model(const ConstraintScheme& scheme, const ModelProfile& m) {
  const std::string base = "models[" + m.name + "]";
  const auto& sat = m.constraint_profile.satisfaction;
  for (const auto& c : scheme.constraints) {
    auto it = sat.find(c.id);
    if (it == sat.end()) {
      throw ValidationError(base + ".satisfaction." + c.id, "missing satisfaction value");
    }
    if (it->second != 0.0 && it->second != 1.0) {
      throw ValidationError(base + ".satisfaction." + c.id, "satisfaction must be 0 or 1");
    }
  }
  for (const auto& [id, value] : sat) {
    if (!scheme.index_of(id)) {
      throw ValidationError(base + ".satisfaction." + id, "unknown constraint id");
    }
  }

  const auto& g = m.domain_coverage;
  const std::array<std::pair<const char*, double>, 5> grades = {{
      {"quantitative", g.quantitative},
      {"fluid", g.fluid},
      {"visual", g.visual},
      {"language", g.language},
      {"sensorimotor", g.sensorimotor},
  }};
  for (const auto& [domain, grade] : grades) {
    if (!is_grade(grade)) {
      throw ValidationError(base + ".generality." + domain, "grade must be 0, 0.5 or 1");
    }
  }

  if (m.benchmarks.empty()) {
    throw ValidationError(base + ".benchmarks", "at least one benchmark is required");
  }
  for (std::size_t i = 0; i < m.benchmarks.size(); ++i) {
    check_benchmark(base + ".benchmarks[" + std::to_string(i) + "]", m.benchmarks[i]);
  }
  if (m.group && m.group->empty()) {
    throw ValidationError(base + ".group", "group label must be non-empty when present");
  }
}

}  // namespace detail

// A suite whose every invariant has been checked. Only validate_suite() can
// produce one; all engines take this type.
class ValidatedSuite {
 public:
  const EvaluationSuite& get() const noexcept { return suite_; }
  const EvaluationSuite* operator->() const noexcept { return &suite_; }
  const std::vector<ReportingUnit>& units() const noexcept { return units_; }

 private:
  explicit ValidatedSuite(EvaluationSuite suite)
      : suite_(std::move(suite)), units_(reporting_units(suite_)) {}
  friend ValidatedSuite validate_suite(EvaluationSuite raw);

  EvaluationSuite suite_;
  std::vector<ReportingUnit> units_;
};

// Checks every invariant and throws ValidationError on the first violation.
inline ValidatedSuite validate_suite(EvaluationSuite raw) {
  detail::check_scheme(raw.scheme);
  if (!(raw.epsilon > 0.0) || !std::isfinite(raw.epsilon)) {
    throw ValidationError("epsilon", "epsilon must be > 0");
  }
  detail::check_weight_triple("pm_weights", raw.pm_weights.alpha, raw.pm_weights.beta,
                              raw.pm_weights.gamma, "alpha, beta, gamma");

  std::set<std::string, std::less<>> scheme_names;
  for (const auto& w : raw.cp_schemes) {
    const std::string path = "cp_schemes[" + w.name + "]";
    if (w.name.empty()) throw ValidationError("cp_schemes", "scheme name must be non-empty");
    if (!scheme_names.insert(w.name).second) {
      throw ValidationError(path, "duplicate scheme name");
    }
    detail::check_weight_triple(path, w.lambda, w.mu, w.nu, "lambda, mu, nu");
  }

  std::set<std::string, std::less<>> names;
  for (std::size_t i = 0; i < raw.models.size(); ++i) {
    const auto& m = raw.models[i];
    if (m.name.empty()) {
      throw ValidationError("models[" + std::to_string(i) + "].name", "model name must be non-empty");
    }
    if (!names.insert(m.name).second) {
      throw ValidationError("models[" + m.name + "].name", "duplicate model name");
    }
    detail::check_model(raw.scheme, m);
  }

  // Group members are scored as one system on FSR and generality, so they
  // must agree on both.
  std::map<std::string, const ModelProfile*, std::less<>> first_member;
  for (const auto& m : raw.models) {
    if (!m.group) continue;
    if (names.count(*m.group)) {
      throw ValidationError("models[" + m.name + "].group",
                            "group label collides with model name " + *m.group);
    }
    auto [it, inserted] = first_member.emplace(*m.group, &m);
    if (inserted) continue;
    if (!(it->second->constraint_profile == m.constraint_profile)) {
      throw ValidationError("models[" + m.name + "].satisfaction",
                            "differs from other members of group " + *m.group);
    }
    if (!(it->second->domain_coverage == m.domain_coverage)) {
      throw ValidationError("models[" + m.name + "].generality",
                            "differs from other members of group " + *m.group);
    }
  }

  return ValidatedSuite(std::move(raw));
}

// ---------------------------------------------------------------------------
// Weight algebra
// ---------------------------------------------------------------------------

// Sets the target weight to w * (1 + relative_change) and rescales every other
// weight by (1 - w') / (1 - w), so the scheme still sums to 1 and the
// non-target weights keep their mutual proportions.
inline ConstraintScheme perturb_weights(const ConstraintScheme& scheme, std::string_view target,
                                        double relative_change) {
  const auto idx = scheme.index_of(target);
  if (!idx) throw DomainError("unknown constraint id " + std::string(target));

  const double w = scheme.constraints[*idx].weight;
  const double w_new = w * (1.0 + relative_change);
  if (!(w_new > 0.0 && w_new < 1.0)) {
    throw DomainError("perturbed weight " + detail::fmt_number(w_new) + " for " +
                      std::string(target) + " is outside (0,1)");
  }
  if (relative_change == 0.0) return scheme;

  const double scale = (1.0 - w_new) / (1.0 - w);
  ConstraintScheme out = scheme;
  for (std::size_t j = 0; j < out.constraints.size(); ++j) {
    out.constraints[j].weight = (j == *idx) ? w_new : out.constraints[j].weight * scale;
  }
  return out;
}

}  // namespace mcg
