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
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "inpd/engine.hpp"
#include "inpd/stats.hpp"

namespace inpd {

/// Significance threshold used by every satisfied flag.
inline constexpr double kAlpha = 0.05;

/// (setting, network, matrix) indices of a batch cell.
struct CellKey {
  std::size_t setting = 0;
  std::size_t network = 0;
  std::size_t matrix = 0;

  auto operator<=>(const CellKey&) const = default;
};

CellKey cell_of(const SimulationLog& log);

/// Groups logs by cell; each group is ordered by simulation index.
std::map<CellKey, std::vector<const SimulationLog*>> group_cells(std::span<const SimulationLog> logs);

// --- network invariance --------------------------------------------------

struct InvarianceRow {
  int round = 0;
  std::vector<double> cooperation_percent;  // one per network
  double g = 0.0;
  double p = 1.0;
  /// No cooperation (or no defection) anywhere in the round: the networks are
  /// trivially indistinguishable and the row is reported as G = 0, p = 1.
  bool degenerate = false;
  bool satisfied() const { return p > kAlpha; }
};

struct InvarianceReport {
  std::string setting;
  std::string matrix;
  std::vector<std::string> networks;
  std::vector<InvarianceRow> rows;

  /// Fraction of rounds with p > alpha, in [0, 1].
  double satisfied_fraction() const;
};

/// `by_network[i]` holds all logs of network i for one setting and matrix.
InvarianceReport network_invariance_report(
    std::span<const std::vector<const SimulationLog*>> by_network);

// --- anti-correlation of score and cooperation ---------------------------

struct AnticorrelationReport {
  std::string setting, network, matrix;
  double mean_cooperator_payoff = 0.0;
  double mean_defector_payoff = 0.0;
  std::optional<AnovaResult> anova;
  double mean_cooperation_percent = 0.0;
  double mean_round_payoff = 0.0;
  std::optional<PearsonResult> correlation;

  bool scores_satisfied() const;
  bool correlation_satisfied() const;
  bool satisfied() const { return scores_satisfied() && correlation_satisfied(); }
};

AnticorrelationReport anticorrelation_report(std::span<const SimulationLog* const> logs);

// --- moody conditional cooperation ---------------------------------------

/// Cooperation after one of two conditions, with a 2x2 G-test.
struct ConditionalTable {
  // counts[condition][current action]; condition 0 = "C before", 1 = "D before".
  std::array<std::array<double, 2>, 2> counts{};
  std::optional<GTestResult> test;

  double cooperation_percent(int condition) const;
  bool satisfied() const;
};

struct MccReport {
  std::string setting, network, matrix;
  ConditionalTable hysteresis;      // condition = own previous action
  ConditionalTable conditionality;  // condition = strict neighbor majority
};

MccReport mcc_report(std::span<const SimulationLog* const> logs);

// --- stratification ------------------------------------------------------

enum class PlayerClass { PureDefector, MostlyDefector, Mixed, MostlyCooperator, PureCooperator };

/// Class of a player that cooperated `cooperations` times in `rounds` rounds.
PlayerClass classify(int cooperations, int rounds);

struct StratificationReport {
  std::string setting, network, matrix;
  // Indexed by PlayerClass.
  std::array<double, 5> percent{};

  bool satisfied() const;
};

StratificationReport stratification_report(std::span<const SimulationLog* const> logs);

// --- cooperation over time -----------------------------------------------

inline constexpr std::size_t kHistogramBins = 20;  // width 0.05
inline constexpr std::array<int, 4> kDefaultHistogramRounds{0, 10, 30, 60};

struct CooperationReport {
  std::string setting, network, matrix;
  std::vector<double> rate;  // per round, averaged over simulations
  /// Histogram rounds actually used (requested rounds clipped to the game).
  std::vector<int> histogram_rounds;
  std::vector<std::array<std::size_t, kHistogramBins>> histograms;
};

std::vector<double> cooperation_timeseries(std::span<const SimulationLog* const> logs);
std::array<std::size_t, kHistogramBins> cooperation_histogram(
    std::span<const SimulationLog* const> logs, int round);

CooperationReport cooperation_report(std::span<const SimulationLog* const> logs,
                                     std::span<const int> rounds = kDefaultHistogramRounds);

// --- full battery --------------------------------------------------------

struct ReportSet {
  std::vector<InvarianceReport> invariance;
  std::vector<AnticorrelationReport> anticorrelation;
  std::vector<MccReport> mcc;
  std::vector<StratificationReport> stratification;
  std::vector<CooperationReport> cooperation;
};

ReportSet build_reports(std::span<const SimulationLog> logs);

/// Formats a double as its shortest round-trip decimal; "NA" for NaN.
std::string format_number(double value);

void write_invariance_csv(std::ostream& out, std::span<const InvarianceReport> reports);
void write_anticorrelation_csv(std::ostream& out, std::span<const AnticorrelationReport> reports);
void write_mcc_csv(std::ostream& out, std::span<const MccReport> reports);
void write_stratification_csv(std::ostream& out, std::span<const StratificationReport> reports);
void write_cooperation_csv(std::ostream& out, std::span<const CooperationReport> reports);
/// One row per setting: share of cells (or rounds) satisfying each property.
void write_summary_csv(std::ostream& out, const ReportSet& reports);

}  // namespace inpd
