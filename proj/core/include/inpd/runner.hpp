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
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "inpd/config.hpp"
#include "inpd/reports.hpp"

namespace inpd {

struct SimulateOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::filesystem::path> out;
  /// Receives one line per finished run when set.
  std::ostream* progress = nullptr;
};

/// Output layout:
///   <out>/config.json         resolved configuration
///   <out>/logs/<run>.csv      raw log, one per simulation (+ .json sidecar)
///   <out>/reports/*.csv       invariance, anticorrelation, mcc,
///                             stratification, cooperation
///   <out>/summary.csv         per-setting satisfaction shares
inline constexpr const char* kReportFiles[] = {"invariance.csv", "anticorrelation.csv", "mcc.csv",
                                               "stratification.csv", "cooperation.csv"};

/// Writes the five report files and the summary under `out`.
void write_reports(const ReportSet& reports, const std::filesystem::path& out);

/// Runs the whole batch and writes the output tree; returns its root.
/// Command-line overrides of the worker count and output directory are not
/// echoed, so the tree does not depend on them.
std::filesystem::path simulate(const LoadedConfig& config, const SimulateOptions& options = {});

/// Default destination of `report`: the parent of a directory named "logs",
/// else <log_dir>/report.
std::filesystem::path default_report_dir(const std::filesystem::path& log_dir);

/// Rebuilds every report from the raw logs in `log_dir`.
ReportSet report_from_logs(const std::filesystem::path& log_dir, const std::filesystem::path& out);

}  // namespace inpd
