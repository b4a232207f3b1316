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
#include <string>

namespace inpd {

class ImpressionModel;

enum class Action : unsigned char { Cooperate, Defect };

inline char to_char(Action a) { return a == Action::Cooperate ? 'C' : 'D'; }

/// A point in Evaluation-Potency-Activity space, clamped to the affective
/// scale [-kBound, kBound] on every axis.
class Epa {
 public:
  static constexpr double kBound = 4.3;

  constexpr Epa() = default;
  /// Throws std::invalid_argument on non-finite input; finite values are
  /// clamped into the scale.
  Epa(double e, double p, double a);
  explicit Epa(const std::array<double, 3>& v) : Epa(v[0], v[1], v[2]) {}

  double e() const { return v_[0]; }
  double p() const { return v_[1]; }
  double a() const { return v_[2]; }
  double operator[](std::size_t i) const { return v_[i]; }
  const std::array<double, 3>& values() const { return v_; }

  friend bool operator==(const Epa&, const Epa&) = default;

 private:
  std::array<double, 3> v_{0.0, 0.0, 0.0};
};

double squared_distance(const Epa& x, const Epa& y);

namespace identities {
inline const Epa kFriend{2.8, 1.9, 1.4};
inline const Epa kScrooge{-2.2, -0.2, -0.5};
}  // namespace identities

/// Actor, behavior and object sentiments of one event (9 components).
struct FundamentalSentiment {
  Epa actor;
  Epa behavior;
  Epa object;

  std::array<double, 9> as_vector() const;
};

/// Context-shifted impressions after an event. Not clamped.
struct TransientImpression {
  std::array<double, 9> values{};

  std::array<double, 3> actor() const { return {values[0], values[1], values[2]}; }
  std::array<double, 3> behavior() const { return {values[3], values[4], values[5]}; }
  std::array<double, 3> object() const { return {values[6], values[7], values[8]}; }
};

/// EPA profiles standing in for the two game actions.
class ActionSemantics {
 public:
  /// Throws std::invalid_argument if the two profiles coincide.
  ActionSemantics(Epa cooperate, Epa defect, std::string label);

  static const ActionSemantics& standard();  // "default": flatter / abandon
  static const ActionSemantics& study();     // "study": survey-derived values
  /// Looks up "default" or "study"; throws std::invalid_argument otherwise.
  static const ActionSemantics& by_label(const std::string& label);

  const Epa& cooperate() const { return cooperate_; }
  const Epa& defect() const { return defect_; }
  const Epa& epa_of(Action a) const { return a == Action::Cooperate ? cooperate_ : defect_; }
  const std::string& label() const { return label_; }

 private:
  Epa cooperate_;
  Epa defect_;
  std::string label_;
};

TransientImpression form_impression(const FundamentalSentiment& f, const ImpressionModel& model);

double deflection(const FundamentalSentiment& f, const TransientImpression& t);

/// Deflection-minimizing behavior of `actor` toward `object`. The objective is
/// a convex quadratic in the behavior whenever the model has no
/// behavior-by-behavior interaction, and is minimized exactly over the
/// clamp box. A flat objective returns `prior`; a singular (or non-quadratic)
/// objective falls back to a 0.1-step grid search.
Epa optimal_behavior(const Epa& actor, const Epa& object, const ImpressionModel& model,
                     const Epa& prior);

/// Closest action profile in squared distance; exact ties go to Cooperate.
Action nearest_action(const Epa& b, const ActionSemantics& semantics);

}  // namespace inpd
