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


#include "inpd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace inpd {

Contingency::Contingency(std::vector<double> cooperate, std::vector<double> defect)
    : cooperate_(std::move(cooperate)), defect_(std::move(defect)) {
  if (cooperate_.size() != defect_.size()) {
    throw std::invalid_argument("contingency rows differ in length");
  }
  if (cooperate_.size() < 2) throw std::invalid_argument("contingency needs two columns");
  for (std::size_t c = 0; c < cooperate_.size(); ++c) {
    for (double v : {cooperate_[c], defect_[c]}) {
      if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("counts must be finite and >= 0");
    }
    if (cooperate_[c] + defect_[c] == 0.0) {
      throw std::invalid_argument("contingency column " + std::to_string(c) + " is empty");
    }
  }
}

GTestResult g_test(const Contingency& table) {
  const std::size_t k = table.columns();
  std::array<double, 2> row_total{};
  std::vector<double> col_total(k, 0.0);
  double total = 0.0;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      row_total[r] += table.at(r, c);
      col_total[c] += table.at(r, c);
      total += table.at(r, c);
    }
  }
  if (row_total[0] == 0.0 || row_total[1] == 0.0) {
    throw DegenerateDataError("G-test undefined: a row total is zero");
  }
  double sum = 0.0;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      const double observed = table.at(r, c);
      if (observed == 0.0) continue;
      const double expected = row_total[r] * col_total[c] / total;
      sum += observed * std::log(observed / expected);
    }
  }
  GTestResult out;
  out.df = static_cast<int>(k - 1);
  // Rounding can leave a tiny negative sum for tables at independence.
  out.g = std::max(0.0, 2.0 * sum);
  out.p = chi2_sf(out.g, out.df);
  return out;
}

double chi2_sf(double x, int df) {
  if (!(x >= 0.0)) throw std::domain_error("chi2_sf: x must be non-negative");
  if (df < 1) throw std::domain_error("chi2_sf: df must be positive");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  return boost::math::gamma_q(df / 2.0, x / 2.0);
}

double f_sf(double x, double df1, double df2) {
  if (!(x >= 0.0)) throw std::domain_error("f_sf: x must be non-negative");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  // P(F > x) = I_{df2/(df2 + df1 x)}(df2/2, df1/2)
  return boost::math::ibeta(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * x));
}

double t_two_sided(double t, double df) {
  if (std::isinf(t)) return 0.0;
  // P(|T| > t) = I_{df/(df + t^2)}(df/2, 1/2)
  return boost::math::ibeta(df / 2.0, 0.5, df / (df + t * t));
}

AnovaResult one_way_anova(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw DegenerateDataError("ANOVA needs at least two groups");
  std::size_t n = 0;
  double grand_sum = 0.0;
  for (const auto& g : groups) {
    if (g.size() < 2) throw DegenerateDataError("ANOVA needs two values per group");
    n += g.size();
    for (double v : g) grand_sum += v;
  }
  const double grand_mean = grand_sum / static_cast<double>(n);
  double ss_between = 0.0;
  double ss_within = 0.0;
  for (const auto& g : groups) {
    double mean = 0.0;
    for (double v : g) mean += v;
    mean /= static_cast<double>(g.size());
    ss_between += static_cast<double>(g.size()) * (mean - grand_mean) * (mean - grand_mean);
    for (double v : g) ss_within += (v - mean) * (v - mean);
  }
  AnovaResult out;
  out.df_between = groups.size() - 1;
  out.df_within = n - groups.size();
  if (!(ss_within > 0.0)) throw DegenerateDataError("ANOVA undefined: zero within-group variance");
  const double ms_between = ss_between / static_cast<double>(out.df_between);
  const double ms_within = ss_within / static_cast<double>(out.df_within);
  out.f = ms_between / ms_within;
  out.p = f_sf(out.f, static_cast<double>(out.df_between), static_cast<double>(out.df_within));
  return out;
}

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: samples differ in length");
  if (x.size() < 3) throw std::invalid_argument("pearson: need at least three pairs");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) throw DegenerateDataError("pearson: zero variance");
  PearsonResult out;
  out.n = x.size();
  out.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  // With t = r sqrt(df / (1 - r^2)), df / (df + t^2) reduces to 1 - r^2.
  const double df = n - 2.0;
  const double one_minus = 1.0 - out.r * out.r;
  out.p = one_minus <= 0.0 ? 0.0 : boost::math::ibeta(df / 2.0, 0.5, one_minus);
  return out;
}

}  // namespace inpd
