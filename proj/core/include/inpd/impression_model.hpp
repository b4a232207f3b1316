// Copyright 2026 The inpd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "inpd/act.hpp"

namespace inpd {

inline constexpr std::size_t kEventComponents = 9;

/// Component names in file order: fA_e, fA_p, fA_a, fB_e, ..., fO_a.
std::string_view component_name(std::size_t index);

inline bool is_behavior_component(int index) { return index >= 3 && index < 6; }

/// A monomial of degree <= 2 over the nine fundamental components.
/// Indices of -1 mean "absent": {-1,-1} is the constant term.
struct FeatureTerm {
  int first = -1;
  int second = -1;

  static FeatureTerm constant() { return {}; }
  static FeatureTerm linear(int i) { return {i, -1}; }
  static FeatureTerm interaction(int i, int j) { return {i < j ? i : j, i < j ? j : i}; }

  int degree() const { return (first >= 0 ? 1 : 0) + (second >= 0 ? 1 : 0); }
  std::string label() const;

  friend bool operator==(const FeatureTerm&, const FeatureTerm&) = default;
};

/// Thrown for structurally invalid models. `line()` is the 1-based file line
/// when the model came from a file, 0 otherwise.
class ModelError : public std::runtime_error {
 public:
  ModelError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }
  /// The message without the line prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Transient = affine function of the behavior with actor and object held
/// fixed: transient(b) = offset + slope * b.
struct BehaviorAffine {
  std::array<double, kEventComponents> offset{};
  std::array<std::array<double, 3>, kEventComponents> slope{};
};

/// Impression-formation equations: transient_i = sum_k coefficients(i,k) * term_k(f).
class ImpressionModel {
 public:
  /// `coefficients` is row-major, 9 rows by terms.size() columns.
  ImpressionModel(std::string name, std::vector<FeatureTerm> terms,
                  std::vector<double> coefficients);

  /// Constant column zero, linear block the 9x9 identity, no interactions.
  static ImpressionModel identity();

  const std::string& name() const { return name_; }
  std::span<const FeatureTerm> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  double coefficient(std::size_t row, std::size_t col) const {
    return coefficients_[row * terms_.size() + col];
  }

  std::array<double, kEventComponents> apply(const std::array<double, kEventComponents>& f) const;

  /// True if some term multiplies two behavior components, which makes the
  /// deflection non-quadratic in the behavior.
  bool has_behavior_quadratic() const { return behavior_quadratic_; }

  /// Precondition: !has_behavior_quadratic().
  BehaviorAffine linearize_in_behavior(const Epa& actor, const Epa& object) const;

 private:
  std::string name_;
  std::vector<FeatureTerm> terms_;
  std::vector<double> coefficients_;
  bool behavior_quadratic_ = false;
};

ImpressionModel parse_impression_model(std::istream& in, std::string name);
ImpressionModel load_impression_model(const std::filesystem::path& path);

/// The shipped model files ("identity", "default"), compiled into the library.
ImpressionModel builtin_impression_model(std::string_view name);

/// Resolves a builtin name or a path to a model file.
ImpressionModel resolve_impression_model(const std::string& name_or_path);

}  // namespace inpd
