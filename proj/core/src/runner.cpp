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


#include "inpd/runner.hpp"

#include <ostream>
#include <sstream>

#include "inpd/log_io.hpp"

namespace inpd {

namespace fs = std::filesystem;

void write_reports(const ReportSet& reports, const fs::path& out) {
  const fs::path dir = out / "reports";
  fs::create_directories(dir);
  auto emit = [&](const fs::path& path, auto&& writer) {
    std::ostringstream text;
    writer(text);
    atomic_write(path, text.str());
  };
  emit(dir / kReportFiles[0], [&](std::ostream& o) { write_invariance_csv(o, reports.invariance); });
  emit(dir / kReportFiles[1],
       [&](std::ostream& o) { write_anticorrelation_csv(o, reports.anticorrelation); });
  emit(dir / kReportFiles[2], [&](std::ostream& o) { write_mcc_csv(o, reports.mcc); });
  emit(dir / kReportFiles[3],
       [&](std::ostream& o) { write_stratification_csv(o, reports.stratification); });
  emit(dir / kReportFiles[4], [&](std::ostream& o) { write_cooperation_csv(o, reports.cooperation); });
  emit(out / "summary.csv", [&](std::ostream& o) { write_summary_csv(o, reports); });
}

fs::path simulate(const LoadedConfig& config, const SimulateOptions& options) {
  ExperimentConfig experiment = config.experiment;
  if (options.seed) experiment.master_seed = *options.seed;
  const fs::path out = options.out ? *options.out : fs::path(experiment.output_dir);
  const std::size_t workers = options.workers ? *options.workers : experiment.workers;

  const fs::path logs_dir = out / "logs";
  fs::create_directories(logs_dir);
  // Stale logs from an earlier, different batch would leak into `report`.
  for (const auto& entry : fs::directory_iterator(logs_dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".csv" || ext == ".json" || ext == ".tmp")) {
      fs::remove(entry.path());
    }
  }
  atomic_write(out / "config.json", config_echo(experiment));

  std::size_t finished = 0;
  const std::size_t total = experiment.run_count();
  auto logs = run_batch(experiment, workers, [&](const SimulationLog& log) {
    save_log(log, logs_dir, experiment.impression_model);
    ++finished;
    if (options.progress) {
      *options.progress << "[" << finished << "/" << total << "] " << log.identity().name() << '\n';
    }
  });
  write_reports(build_reports(logs), out);
  return out;
}

fs::path default_report_dir(const fs::path& log_dir) {
  fs::path dir = log_dir.lexically_normal();
  if (!dir.has_filename()) dir = dir.parent_path();
  if (dir.filename() == "logs") return dir.parent_path().empty() ? fs::path(".") : dir.parent_path();
  return dir / "report";
}

ReportSet report_from_logs(const fs::path& log_dir, const fs::path& out) {
  auto logs = load_logs(log_dir);
  auto reports = build_reports(logs);
  write_reports(reports, out);
  return reports;
}

}  // namespace inpd
