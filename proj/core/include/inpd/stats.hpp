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
#include <span>
#include <stdexcept>
#include <vector>

namespace inpd {

/// Raised when a test is undefined for its input (zero marginal, zero
/// variance, too few observations).
class DegenerateDataError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// 2 x k table of counts: row 0 cooperate, row 1 defect; one column per group.
class Contingency {
 public:
  /// Throws std::invalid_argument for fewer than two columns, negative or
  /// non-finite counts, or an all-zero column.
  Contingency(std::vector<double> cooperate, std::vector<double> defect);

  std::size_t columns() const { return cooperate_.size(); }
  double at(std::size_t row, std::size_t col) const {
    return row == 0 ? cooperate_[col] : defect_[col];
  }

 private:
  std::vector<double> cooperate_;
  std::vector<double> defect_;
};

struct GTestResult {
  double g = 0.0;
  double p = 1.0;
  int df = 0;
};

/// Likelihood-ratio test of independence against marginal-product expected
/// counts; 0 log 0 = 0. Throws DegenerateDataError if a row total is zero.
GTestResult g_test(const Contingency& table);

/// Upper tail of the chi-square distribution. Throws std::domain_error for
/// x < 0 or df < 1.
double chi2_sf(double x, int df);

/// Upper tail of the F distribution.
double f_sf(double x, double df1, double df2);

/// Two-sided p-value of a Student t statistic.
double t_two_sided(double t, double df);

struct AnovaResult {
  double f = 0.0;
  double p = 1.0;
  std::size_t df_between = 0;
  std::size_t df_within = 0;
};

/// Classic between/within mean-square ratio. Throws DegenerateDataError for
/// fewer than two groups, a group with fewer than two values, or zero
/// within-group variance.
AnovaResult one_way_anova(std::span<const std::vector<double>> groups);

struct PearsonResult {
  double r = 0.0;
  double p = 1.0;
  std::size_t n = 0;
};

/// Sample correlation with a two-sided t-test. Throws std::invalid_argument
/// on length mismatch or n < 3, DegenerateDataError on zero variance.
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

}  // namespace inpd
