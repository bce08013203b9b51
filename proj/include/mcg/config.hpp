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

// Suite configuration documents (JSON).
//
//   {
//     "constraints": [{"id": "C1", "label": "...", "weight": 0.1, "theory": "SMT"}, ...],
//     "epsilon": 0.01,                                   // optional
//     "pm_weights": {"alpha": .., "beta": .., "gamma": ..},  // optional, default 1/3 each
//     "cp_schemes": {"nonequal": {"lambda": .., "mu": .., "nu": ..}, ...},  // optional
//     "models": [{
//       "name": "...", "group": "...",                   // group optional
//       "satisfaction": {"C1": 1, ...},
//       "generality": {"quantitative": 0, "fluid": 0.5, "visual": 0, "language": 0,
//                      "sensorimotor": 0},
//       "benchmarks": [{"name": "...", "human_accuracy": .., "model_accuracy": ..,
//                       "error_pattern": 1 | -1, "model_time": .., "human_time": ..,
//                       "timing_similarity": ..}]   // the last four optional
//     }]
//   }
//
// Unknown keys are rejected. Missing optional sections take their defaults.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "mcg/core.hpp"

namespace mcg {

// Malformed document text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline void expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path, "expected an object");
}

inline void reject_unknown(const Json& j, const std::string& path,
                           std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw ValidationError(path.empty() ? key : path + "." + key, "unknown field");
  }
}

inline const Json& require(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ValidationError(path.empty() ? key : path + "." + key, "missing required field");
  }
  return *it;
}

inline double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ValidationError(path, "expected a number");
  return j.get<double>();
}

inline std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ValidationError(path, "expected a string");
  return j.get<std::string>();
}

inline std::optional<double> optional_number(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return as_number(*it, path + "." + key);
}

inline BenchmarkRecord parse_benchmark(const Json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown(j, path, {"name", "human_accuracy", "model_accuracy", "error_pattern", "model_time",
                           "human_time", "timing_similarity"});
  BenchmarkRecord b;
  b.name = as_string(require(j, path, "name"), path + ".name");
  b.human_accuracy = as_number(require(j, path, "human_accuracy"), path + ".human_accuracy");
  b.model_accuracy = as_number(require(j, path, "model_accuracy"), path + ".model_accuracy");
  if (auto e = optional_number(j, path, "error_pattern")) {
    if (*e == 1.0) {
      b.error_pattern = ErrorPattern::kReplicates;
    } else if (*e == -1.0) {
      b.error_pattern = ErrorPattern::kDiverges;
    } else {
      throw ValidationError(path + ".error_pattern", "error pattern must be +1 or -1");
    }
  }
  b.model_time = optional_number(j, path, "model_time");
  b.human_time = optional_number(j, path, "human_time");
  b.timing_similarity = optional_number(j, path, "timing_similarity");
  return b;
}

inline ModelProfile parse_model(const Json& j, const std::string& index_path) {
  expect_object(j, index_path);
  reject_unknown(j, index_path, {"name", "group", "satisfaction", "generality", "benchmarks"});
  ModelProfile m;
  m.name = as_string(require(j, index_path, "name"), index_path + ".name");
  const std::string path = "models[" + m.name + "]";
  if (auto it = j.find("group"); it != j.end() && !it->is_null()) {
    m.group = as_string(*it, path + ".group");
  }

  const auto& sat = require(j, path, "satisfaction");
  expect_object(sat, path + ".satisfaction");
  for (const auto& [id, value] : sat.items()) {
    m.constraint_profile.satisfaction[id] = as_number(value, path + ".satisfaction." + id);
  }

  const auto& gen = require(j, path, "generality");
  const std::string gpath = path + ".generality";
  expect_object(gen, gpath);
  reject_unknown(gen, gpath, {"quantitative", "fluid", "visual", "language", "sensorimotor"});
  auto grade = [&](const char* key) { return as_number(require(gen, gpath, key), gpath + "." + key); };
  m.domain_coverage.quantitative = grade("quantitative");
  m.domain_coverage.fluid = grade("fluid");
  m.domain_coverage.visual = grade("visual");
  m.domain_coverage.language = grade("language");
  m.domain_coverage.sensorimotor = grade("sensorimotor");

  const auto& benches = require(j, path, "benchmarks");
  if (!benches.is_array()) throw ValidationError(path + ".benchmarks", "expected an array");
  for (std::size_t i = 0; i < benches.size(); ++i) {
    m.benchmarks.push_back(parse_benchmark(benches[i], path + ".benchmarks[" + std::to_string(i) + "]"));
  }
  return m;
}

inline Json number_or_int(double v) {
  if (v == 0.0 || v == 1.0) return static_cast<int>(v);
  return v;
}

}  // namespace detail

// Parses a suite document without checking domain invariants.
inline EvaluationSuite parse_suite_unvalidated(std::string_view text) {
  using detail::Json;
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = detail::line_column(text, e.byte);
    throw ParseError(line, column, "syntax error");
  }
  detail::expect_object(doc, "");
  detail::reject_unknown(doc, "", {"constraints", "epsilon", "pm_weights", "cp_schemes", "models"});

  EvaluationSuite suite;
  const auto& constraints = detail::require(doc, "", "constraints");
  if (!constraints.is_array()) throw ValidationError("constraints", "expected an array");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const std::string path = "constraints[" + std::to_string(i) + "]";
    const auto& c = constraints[i];
    detail::expect_object(c, path);
    detail::reject_unknown(c, path, {"id", "label", "weight", "theory"});
    Constraint out;
    out.id = detail::as_string(detail::require(c, path, "id"), path + ".id");
    if (auto it = c.find("label"); it != c.end()) out.label = detail::as_string(*it, path + ".label");
    out.weight = detail::as_number(detail::require(c, path, "weight"), path + ".weight");
    if (auto it = c.find("theory"); it != c.end()) out.theory = detail::as_string(*it, path + ".theory");
    suite.scheme.constraints.push_back(std::move(out));
  }

  if (auto it = doc.find("epsilon"); it != doc.end()) suite.epsilon = detail::as_number(*it, "epsilon");

  if (auto it = doc.find("pm_weights"); it != doc.end()) {
    detail::expect_object(*it, "pm_weights");
    detail::reject_unknown(*it, "pm_weights", {"alpha", "beta", "gamma"});
    suite.pm_weights.alpha = detail::as_number(detail::require(*it, "pm_weights", "alpha"), "pm_weights.alpha");
    suite.pm_weights.beta = detail::as_number(detail::require(*it, "pm_weights", "beta"), "pm_weights.beta");
    suite.pm_weights.gamma = detail::as_number(detail::require(*it, "pm_weights", "gamma"), "pm_weights.gamma");
  }

  if (auto it = doc.find("cp_schemes"); it != doc.end()) {
    detail::expect_object(*it, "cp_schemes");
    suite.cp_schemes.clear();
    for (const auto& [name, w] : it->items()) {
      const std::string path = "cp_schemes." + name;
      detail::expect_object(w, path);
      detail::reject_unknown(w, path, {"lambda", "mu", "nu"});
      suite.cp_schemes.push_back({name, detail::as_number(detail::require(w, path, "lambda"), path + ".lambda"),
                                  detail::as_number(detail::require(w, path, "mu"), path + ".mu"),
                                  detail::as_number(detail::require(w, path, "nu"), path + ".nu")});
    }
  }

  const auto& models = detail::require(doc, "", "models");
  if (!models.is_array()) throw ValidationError("models", "expected an array");
  for (std::size_t i = 0; i < models.size(); ++i) {
    suite.models.push_back(detail::parse_model(models[i], "models[" + std::to_string(i) + "]"));
  }
  return suite;
}

inline ValidatedSuite parse_suite(std::string_view text) {
  return validate_suite(parse_suite_unvalidated(text));
}

// Writes the canonical document; parse_suite(serialize_suite(s)) == s.
inline std::string serialize_suite(const EvaluationSuite& suite) {
  using detail::Json;
  Json doc = Json::object();
  Json constraints = Json::array();
  for (const auto& c : suite.scheme.constraints) {
    constraints.push_back({{"id", c.id}, {"label", c.label}, {"weight", c.weight}, {"theory", c.theory}});
  }
  doc["constraints"] = std::move(constraints);
  doc["epsilon"] = suite.epsilon;
  doc["pm_weights"] = {{"alpha", suite.pm_weights.alpha},
                       {"beta", suite.pm_weights.beta},
                       {"gamma", suite.pm_weights.gamma}};
  Json schemes = Json::object();
  for (const auto& w : suite.cp_schemes) {
    schemes[w.name] = {{"lambda", w.lambda}, {"mu", w.mu}, {"nu", w.nu}};
  }
  doc["cp_schemes"] = std::move(schemes);

  Json models = Json::array();
  for (const auto& m : suite.models) {
    Json jm = Json::object();
    jm["name"] = m.name;
    if (m.group) jm["group"] = *m.group;
    Json sat = Json::object();
    for (const auto& c : suite.scheme.constraints) {
      if (auto it = m.constraint_profile.satisfaction.find(c.id); it != m.constraint_profile.satisfaction.end()) {
        sat[c.id] = detail::number_or_int(it->second);
      }
    }
    for (const auto& [id, v] : m.constraint_profile.satisfaction) {
      if (!sat.contains(id)) sat[id] = detail::number_or_int(v);
    }
    jm["satisfaction"] = std::move(sat);
    const auto& g = m.domain_coverage;
    jm["generality"] = {{"quantitative", detail::number_or_int(g.quantitative)},
                        {"fluid", detail::number_or_int(g.fluid)},
                        {"visual", detail::number_or_int(g.visual)},
                        {"language", detail::number_or_int(g.language)},
                        {"sensorimotor", detail::number_or_int(g.sensorimotor)}};
    Json benches = Json::array();
    for (const auto& b : m.benchmarks) {
      Json jb = {{"name", b.name}, {"human_accuracy", b.human_accuracy}, {"model_accuracy", b.model_accuracy}};
      if (b.error_pattern) jb["error_pattern"] = to_int(*b.error_pattern);
      if (b.model_time) jb["model_time"] = *b.model_time;
      if (b.human_time) jb["human_time"] = *b.human_time;
      if (b.timing_similarity) jb["timing_similarity"] = *b.timing_similarity;
      benches.push_back(std::move(jb));
    }
    jm["benchmarks"] = std::move(benches);
    models.push_back(std::move(jm));
  }
  doc["models"] = std::move(models);
  return doc.dump(2) + "\n";
}

}  // namespace mcg
