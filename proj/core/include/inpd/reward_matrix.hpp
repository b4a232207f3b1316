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

#include <cstdint>
#include <string>

#include "inpd/act.hpp"

namespace inpd {

/// Payoffs are held in integer tenths of a point so that sums over
/// neighbors stay exact for decimal matrices such as M2's 1.4.
using Tenths = std::int64_t;

std::string format_tenths(Tenths value);
/// Parses a decimal with at most one fractional digit; throws
/// std::invalid_argument otherwise.
Tenths parse_tenths(const std::string& text);
/// Throws std::invalid_argument if `value` is not a multiple of 0.1.
Tenths to_tenths(double value);

/// Prisoner's dilemma payoffs for the row player.
class RewardMatrix {
 public:
  RewardMatrix(Tenths t, Tenths r, Tenths p, Tenths s, std::string label);
  static RewardMatrix from_decimal(double t, double r, double p, double s, std::string label);

  static RewardMatrix m1();  // (3, 2, 1, 0)
  static RewardMatrix m2();  // (1.4, 1, 0, 0), not strict
  static RewardMatrix m3();  // (11, 10, 1, 0)

  Tenths t() const { return t_; }
  Tenths r() const { return r_; }
  Tenths p() const { return p_; }
  Tenths s() const { return s_; }
  const std::string& label() const { return label_; }

  /// True unless T > R > P > S holds.
  bool non_strict() const { return !(t_ > r_ && r_ > p_ && p_ > s_); }

  Tenths cell(Action own, Action other) const {
    if (own == Action::Cooperate) return other == Action::Cooperate ? r_ : s_;
    return other == Action::Cooperate ? t_ : p_;
  }

  /// max - min over the four entries, in tenths; at least 1.
  Tenths range() const;

 private:
  Tenths t_, r_, p_, s_;
  std::string label_;
};

}  // namespace inpd
