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


#include "inpd/reward_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace inpd {

std::string format_tenths(Tenths value) {
  std::string out = value < 0 ? "-" : "";
  Tenths magnitude = value < 0 ? -value : value;
  out += std::to_string(magnitude / 10);
  if (magnitude % 10 != 0) {
    out += '.';
    out += static_cast<char>('0' + magnitude % 10);
  }
  return out;
}

Tenths parse_tenths(const std::string& text) {
  auto fail = [&] { throw std::invalid_argument("not a one-decimal number: '" + text + "'"); };
  std::string_view s(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty()) fail();
  Tenths units = 0;
  auto [ptr, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), units);
  if (ec != std::errc() || ptr != whole.data() + whole.size()) fail();
  // Trailing zeros beyond the first decimal are allowed ("1.40").
  while (frac.size() > 1 && frac.back() == '0') frac.remove_suffix(1);
  if (dot != std::string_view::npos && frac.empty()) fail();
  if (frac.size() > 1 || (!frac.empty() && (frac[0] < '0' || frac[0] > '9'))) fail();
  Tenths value = units * 10 + (frac.empty() ? 0 : frac[0] - '0');
  return negative ? -value : value;
}

Tenths to_tenths(double value) {
  double scaled = std::round(value * 10.0);
  if (!std::isfinite(value) || std::abs(scaled - value * 10.0) > 1e-6) {
    throw std::invalid_argument("payoff " + std::to_string(value) + " is not a multiple of 0.1");
  }
  return static_cast<Tenths>(scaled);
}

RewardMatrix::RewardMatrix(Tenths t, Tenths r, Tenths p, Tenths s, std::string label)
    : t_(t), r_(r), p_(p), s_(s), label_(std::move(label)) {}

RewardMatrix RewardMatrix::from_decimal(double t, double r, double p, double s,
                                        std::string label) {
  return RewardMatrix(to_tenths(t), to_tenths(r), to_tenths(p), to_tenths(s), std::move(label));
}

RewardMatrix RewardMatrix::m1() { return RewardMatrix(30, 20, 10, 0, "M1"); }
RewardMatrix RewardMatrix::m2() { return RewardMatrix(14, 10, 0, 0, "M2"); }
RewardMatrix RewardMatrix::m3() { return RewardMatrix(110, 100, 10, 0, "M3"); }

Tenths RewardMatrix::range() const {
  auto [lo, hi] = std::minmax({t_, r_, p_, s_});
  return std::max<Tenths>(hi - lo, 1);
}

}  // namespace inpd
