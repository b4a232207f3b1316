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


#include "inpd/reports.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <set>

namespace inpd {

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

double pct(double part, double whole) { return whole > 0.0 ? 100.0 * part / whole : std::nan(""); }

template <typename Report>
void label_from(Report& r, const SimulationLog& log) {
  r.setting = log.identity().setting;
  r.network = log.identity().network;
  r.matrix = log.identity().matrix;
}

std::optional<GTestResult> try_g_test(const std::array<std::array<double, 2>, 2>& counts) {
  try {
    Contingency table({counts[0][0], counts[1][0]}, {counts[0][1], counts[1][1]});
    return g_test(table);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  } catch (const DegenerateDataError&) {
    return std::nullopt;
  }
}

constexpr int kCooperate = 0;
constexpr int kDefect = 1;

int slot(Action a) { return a == Action::Cooperate ? kCooperate : kDefect; }

}  // namespace

CellKey cell_of(const SimulationLog& log) {
  return {log.identity().setting_index, log.identity().network_index,
          log.identity().matrix_index};
}

std::map<CellKey, std::vector<const SimulationLog*>> group_cells(std::span<const SimulationLog> logs) {
  std::map<CellKey, std::vector<const SimulationLog*>> cells;
  for (const auto& log : logs) cells[cell_of(log)].push_back(&log);
  for (auto& [key, group] : cells) {
    std::stable_sort(group.begin(), group.end(), [](const auto* a, const auto* b) {
      return a->identity().sim_index < b->identity().sim_index;
    });
  }
  return cells;
}

double InvarianceReport::satisfied_fraction() const {
  if (rows.empty()) return 0.0;
  auto n = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.satisfied(); });
  return static_cast<double>(n) / static_cast<double>(rows.size());
}

InvarianceReport network_invariance_report(
    std::span<const std::vector<const SimulationLog*>> by_network) {
  InvarianceReport report;
  if (by_network.size() < 2) throw std::invalid_argument("invariance needs at least two networks");
  int rounds = -1;
  for (const auto& group : by_network) {
    if (group.empty()) throw std::invalid_argument("network without logs");
    report.networks.push_back(group.front()->identity().network);
    for (const auto* log : group) {
      rounds = rounds < 0 ? log->rounds() : std::min(rounds, log->rounds());
    }
  }
  report.setting = by_network.front().front()->identity().setting;
  report.matrix = by_network.front().front()->identity().matrix;

  for (int t = 0; t < rounds; ++t) {
    InvarianceRow row;
    row.round = t;
    std::vector<double> cooperate;
    std::vector<double> defect;
    for (const auto& group : by_network) {
      double c = 0.0;
      double n = 0.0;
      for (const auto* log : group) {
        for (const auto& rec : log->round(t)) c += rec.action == Action::Cooperate ? 1.0 : 0.0;
        n += static_cast<double>(log->agents());
      }
      cooperate.push_back(c);
      defect.push_back(n - c);
      row.cooperation_percent.push_back(pct(c, n));
    }
    try {
      auto result = g_test(Contingency(cooperate, defect));
      row.g = result.g;
      row.p = result.p;
    } catch (const DegenerateDataError&) {
      row.degenerate = true;
      row.g = 0.0;
      row.p = 1.0;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool AnticorrelationReport::scores_satisfied() const {
  return anova && mean_defector_payoff > mean_cooperator_payoff && anova->p < kAlpha;
}

bool AnticorrelationReport::correlation_satisfied() const {
  return correlation && correlation->r < 0.0 && correlation->p < kAlpha;
}

AnticorrelationReport anticorrelation_report(std::span<const SimulationLog* const> logs) {
  AnticorrelationReport report;
  if (logs.empty()) throw std::invalid_argument("no logs");
  label_from(report, *logs.front());

  std::vector<double> groups[2];
  std::vector<double> agent_rate;
  std::vector<double> agent_score;
  double cooperation_sum = 0.0;
  double agents_seen = 0.0;
  for (const auto* log : logs) {
    const int rounds = log->rounds();
    std::vector<double> cumulative(log->agents(), 0.0);
    std::vector<int> cooperations(log->agents(), 0);
    for (int t = 0; t < rounds; ++t) {
      auto recs = log->round(t);
      for (std::size_t a = 0; a < recs.size(); ++a) {
        const auto& rec = recs[a];
        if (rec.degree == 0) continue;  // isolated nodes play no games
        const double payoff = static_cast<double>(rec.payoff) / 10.0;
        groups[slot(rec.action)].push_back(payoff);
        cumulative[a] += payoff;
        cooperations[a] += rec.action == Action::Cooperate ? 1 : 0;
      }
    }
    double score_sum = 0.0;
    std::size_t connected = 0;
    for (std::size_t a = 0; a < log->agents(); ++a) {
      if (log->at(0, a).degree == 0) continue;
      score_sum += cumulative[a];
      ++connected;
    }
    if (connected == 0) continue;
    const double mean_score = score_sum / static_cast<double>(connected);
    for (std::size_t a = 0; a < log->agents(); ++a) {
      if (log->at(0, a).degree == 0) continue;
      const double rate = static_cast<double>(cooperations[a]) / rounds;
      cooperation_sum += rate;
      agents_seen += 1.0;
      // A simulation where nobody scores has no defined normalized score.
      if (mean_score != 0.0) {
        agent_rate.push_back(rate);
        agent_score.push_back(cumulative[a] / mean_score);
      }
    }
  }
  auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? std::nan("") : s / static_cast<double>(v.size());
  };
  report.mean_cooperator_payoff = mean(groups[kCooperate]);
  report.mean_defector_payoff = mean(groups[kDefect]);
  std::vector<double> all = groups[kCooperate];
  all.insert(all.end(), groups[kDefect].begin(), groups[kDefect].end());
  report.mean_round_payoff = mean(all);
  report.mean_cooperation_percent = agents_seen > 0.0 ? 100.0 * cooperation_sum / agents_seen : std::nan("");
  try {
    std::vector<std::vector<double>> g{groups[kCooperate], groups[kDefect]};
    report.anova = one_way_anova(g);
  } catch (const DegenerateDataError&) {
  }
  try {
    report.correlation = pearson(agent_rate, agent_score);
  } catch (const DegenerateDataError&) {
  } catch (const std::invalid_argument&) {
  }
  return report;
}

double ConditionalTable::cooperation_percent(int condition) const {
  const auto& row = counts[condition];
  return pct(row[kCooperate], row[kCooperate] + row[kDefect]);
}

bool ConditionalTable::satisfied() const {
  return test && cooperation_percent(0) > cooperation_percent(1) && test->p < kAlpha;
}

MccReport mcc_report(std::span<const SimulationLog* const> logs) {
  MccReport report;
  if (logs.empty()) throw std::invalid_argument("no logs");
  label_from(report, *logs.front());
  for (const auto* log : logs) {
    for (int t = 1; t < log->rounds(); ++t) {
      auto prev = log->round(t - 1);
      auto now = log->round(t);
      for (std::size_t a = 0; a < now.size(); ++a) {
        const int current = slot(now[a].action);
        report.hysteresis.counts[slot(prev[a].action)][current] += 1.0;
        const int degree = prev[a].degree;
        if (degree == 0) continue;
        const int twice = 2 * prev[a].cooperating_neighbors;
        if (twice == degree) continue;  // exact ties carry no majority
        report.conditionality.counts[twice > degree ? 0 : 1][current] += 1.0;
      }
    }
  }
  report.hysteresis.test = try_g_test(report.hysteresis.counts);
  report.conditionality.test = try_g_test(report.conditionality.counts);
  return report;
}

PlayerClass classify(int cooperations, int rounds) {
  if (cooperations <= 0) return PlayerClass::PureDefector;
  if (cooperations >= rounds) return PlayerClass::PureCooperator;
  if (3 * cooperations <= rounds) return PlayerClass::MostlyDefector;
  if (3 * cooperations >= 2 * rounds) return PlayerClass::MostlyCooperator;
  return PlayerClass::Mixed;
}

bool StratificationReport::satisfied() const {
  const double pure_d = percent[0], mostly_d = percent[1], mixed = percent[2],
               mostly_c = percent[3], pure_c = percent[4];
  return mixed > mostly_d && mostly_d > pure_d && pure_d > 0.0 && mixed > mostly_c &&
         mostly_c > pure_c && pure_c > 0.0;
}

StratificationReport stratification_report(std::span<const SimulationLog* const> logs) {
  StratificationReport report;
  if (logs.empty()) throw std::invalid_argument("no logs");
  label_from(report, *logs.front());
  std::array<double, 5> counts{};
  double players = 0.0;
  for (const auto* log : logs) {
    std::vector<int> cooperations(log->agents(), 0);
    for (int t = 0; t < log->rounds(); ++t) {
      auto recs = log->round(t);
      for (std::size_t a = 0; a < recs.size(); ++a) {
        cooperations[a] += recs[a].action == Action::Cooperate ? 1 : 0;
      }
    }
    for (int c : cooperations) {
      counts[static_cast<std::size_t>(classify(c, log->rounds()))] += 1.0;
      players += 1.0;
    }
  }
  for (std::size_t i = 0; i < counts.size(); ++i) report.percent[i] = pct(counts[i], players);
  return report;
}

std::vector<double> cooperation_timeseries(std::span<const SimulationLog* const> logs) {
  if (logs.empty()) return {};
  int rounds = logs.front()->rounds();
  for (const auto* log : logs) rounds = std::min(rounds, log->rounds());
  std::vector<double> rate(static_cast<std::size_t>(rounds), 0.0);
  for (int t = 0; t < rounds; ++t) {
    for (const auto* log : logs) rate[t] += log->cooperation_rate(t);
    rate[t] /= static_cast<double>(logs.size());
  }
  return rate;
}

std::array<std::size_t, kHistogramBins> cooperation_histogram(
    std::span<const SimulationLog* const> logs, int round) {
  std::array<std::size_t, kHistogramBins> bins{};
  for (const auto* log : logs) {
    std::size_t c = 0;
    for (const auto& rec : log->round(round)) c += rec.action == Action::Cooperate ? 1 : 0;
    // Integer binning: bin = floor(20 c / n), with rate 1.0 in the last bin.
    std::size_t bin = kHistogramBins * c / std::max<std::size_t>(log->agents(), 1);
    ++bins[std::min(bin, kHistogramBins - 1)];
  }
  return bins;
}

CooperationReport cooperation_report(std::span<const SimulationLog* const> logs,
                                     std::span<const int> rounds) {
  CooperationReport report;
  if (logs.empty()) throw std::invalid_argument("no logs");
  label_from(report, *logs.front());
  report.rate = cooperation_timeseries(logs);
  const int last = static_cast<int>(report.rate.size()) - 1;
  for (int r : rounds) {
    const int used = std::clamp(r, 0, last);
    if (std::find(report.histogram_rounds.begin(), report.histogram_rounds.end(), used) !=
        report.histogram_rounds.end()) {
      continue;
    }
    report.histogram_rounds.push_back(used);
    report.histograms.push_back(cooperation_histogram(logs, used));
  }
  return report;
}

ReportSet build_reports(std::span<const SimulationLog> logs) {
  ReportSet set;
  auto cells = group_cells(logs);
  std::set<std::pair<std::size_t, std::size_t>> setting_matrix;
  for (const auto& [key, group] : cells) {
    set.anticorrelation.push_back(anticorrelation_report(group));
    set.mcc.push_back(mcc_report(group));
    set.stratification.push_back(stratification_report(group));
    set.cooperation.push_back(cooperation_report(group));
    setting_matrix.emplace(key.setting, key.matrix);
  }
  for (auto [setting, matrix] : setting_matrix) {
    std::vector<std::vector<const SimulationLog*>> by_network;
    for (const auto& [key, group] : cells) {
      if (key.setting == setting && key.matrix == matrix) by_network.push_back(group);
    }
    if (by_network.size() >= 2) set.invariance.push_back(network_invariance_report(by_network));
  }
  return set;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "NA";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_invariance_csv(std::ostream& out, std::span<const InvarianceReport> reports) {
  out << "setting,matrix,round";
  if (!reports.empty()) {
    for (const auto& n : reports.front().networks) out << ',' << n << "_coop_pct";
  }
  out << ",g,p,degenerate,satisfied\n";
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      out << r.setting << ',' << r.matrix << ',' << row.round;
      for (double c : row.cooperation_percent) out << ',' << format_number(c);
      out << ',' << format_number(row.g) << ',' << format_number(row.p) << ','
          << flag(row.degenerate) << ',' << flag(row.satisfied()) << '\n';
    }
  }
}

void write_anticorrelation_csv(std::ostream& out, std::span<const AnticorrelationReport> reports) {
  out << "setting,network,matrix,mean_c_payoff,mean_d_payoff,anova_f,anova_p,scores_satisfied,"
         "mean_coop_pct,mean_round_payoff,pearson_r,pearson_p,correlation_satisfied,satisfied\n";
  const double na = std::nan("");
  for (const auto& r : reports) {
    out << r.setting << ',' << r.network << ',' << r.matrix << ','
        << format_number(r.mean_cooperator_payoff) << ',' << format_number(r.mean_defector_payoff)
        << ',' << format_number(r.anova ? r.anova->f : na) << ','
        << format_number(r.anova ? r.anova->p : na) << ',' << flag(r.scores_satisfied()) << ','
        << format_number(r.mean_cooperation_percent) << ',' << format_number(r.mean_round_payoff)
        << ',' << format_number(r.correlation ? r.correlation->r : na) << ','
        << format_number(r.correlation ? r.correlation->p : na) << ','
        << flag(r.correlation_satisfied()) << ',' << flag(r.satisfied()) << '\n';
  }
}

void write_mcc_csv(std::ostream& out, std::span<const MccReport> reports) {
  out << "setting,network,matrix,c_after_c_pct,c_after_d_pct,hysteresis_g,hysteresis_p,"
         "hysteresis_satisfied,c_near_c_pct,c_near_d_pct,conditionality_g,conditionality_p,"
         "conditionality_satisfied\n";
  const double na = std::nan("");
  auto table = [&](const ConditionalTable& t) {
    out << format_number(t.cooperation_percent(0)) << ',' << format_number(t.cooperation_percent(1))
        << ',' << format_number(t.test ? t.test->g : na) << ','
        << format_number(t.test ? t.test->p : na) << ',' << flag(t.satisfied());
  };
  for (const auto& r : reports) {
    out << r.setting << ',' << r.network << ',' << r.matrix << ',';
    table(r.hysteresis);
    out << ',';
    table(r.conditionality);
    out << '\n';
  }
}

void write_stratification_csv(std::ostream& out, std::span<const StratificationReport> reports) {
  out << "setting,network,matrix,pure_d_pct,mostly_d_pct,mixed_pct,mostly_c_pct,pure_c_pct,"
         "satisfied\n";
  for (const auto& r : reports) {
    out << r.setting << ',' << r.network << ',' << r.matrix;
    for (double p : r.percent) out << ',' << format_number(p);
    out << ',' << flag(r.satisfied()) << '\n';
  }
}

void write_cooperation_csv(std::ostream& out, std::span<const CooperationReport> reports) {
  out << "setting,network,matrix,round,coop_rate,histogram\n";
  for (const auto& r : reports) {
    for (std::size_t t = 0; t < r.rate.size(); ++t) {
      out << r.setting << ',' << r.network << ',' << r.matrix << ',' << t << ','
          << format_number(r.rate[t]) << ',';
      for (std::size_t h = 0; h < r.histogram_rounds.size(); ++h) {
        if (r.histogram_rounds[h] != static_cast<int>(t)) continue;
        for (std::size_t b = 0; b < kHistogramBins; ++b) {
          out << (b ? ";" : "") << r.histograms[h][b];
        }
      }
      out << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, const ReportSet& reports) {
  struct Tally {
    double invariance_rounds = 0, invariance_total = 0;
    double scores = 0, correlation = 0, hysteresis = 0, conditionality = 0, strat = 0, cells = 0;
  };
  std::vector<std::string> order;
  std::map<std::string, Tally> tally;
  auto touch = [&](const std::string& s) -> Tally& {
    if (!tally.contains(s)) order.push_back(s);
    return tally[s];
  };
  for (const auto& r : reports.invariance) {
    auto& t = touch(r.setting);
    for (const auto& row : r.rows) {
      t.invariance_rounds += row.satisfied() ? 1 : 0;
      t.invariance_total += 1;
    }
  }
  for (std::size_t i = 0; i < reports.anticorrelation.size(); ++i) {
    auto& t = touch(reports.anticorrelation[i].setting);
    t.cells += 1;
    t.scores += reports.anticorrelation[i].scores_satisfied() ? 1 : 0;
    t.correlation += reports.anticorrelation[i].correlation_satisfied() ? 1 : 0;
    t.hysteresis += reports.mcc[i].hysteresis.satisfied() ? 1 : 0;
    t.conditionality += reports.mcc[i].conditionality.satisfied() ? 1 : 0;
    t.strat += reports.stratification[i].satisfied() ? 1 : 0;
  }
  out << "setting,cells,invariance_rounds_pct,anticorrelation_scores_pct,"
         "anticorrelation_pearson_pct,hysteresis_pct,conditionality_pct,stratification_pct\n";
  for (const auto& s : order) {
    const auto& t = tally[s];
    out << s << ',' << t.cells << ',' << format_number(pct(t.invariance_rounds, t.invariance_total))
        << ',' << format_number(pct(t.scores, t.cells)) << ','
        << format_number(pct(t.correlation, t.cells)) << ','
        << format_number(pct(t.hysteresis, t.cells)) << ','
        << format_number(pct(t.conditionality, t.cells)) << ','
        << format_number(pct(t.strat, t.cells)) << '\n';
  }
}

}  // namespace inpd
