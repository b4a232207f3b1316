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


// Command-line front end: simulate, report, validate.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "inpd/config.hpp"
#include "inpd/log_io.hpp"
#include "inpd/runner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kRuntimeError = 2;

std::optional<inpd::LoadedConfig> load(const std::string& path) {
  try {
    auto loaded = inpd::parse_config(path);
    for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
    return loaded;
  } catch (const inpd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Networked prisoner's dilemma with affective agents"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::string> out;
  bool quiet = false;
  auto* simulate = app.add_subcommand("simulate", "Run a batch and write logs and reports");
  simulate->add_option("config", config_path, "Experiment configuration (JSON)")->required();
  simulate->add_option("--seed", seed, "Override the master seed");
  simulate->add_option("--workers", workers, "Worker threads (0 = all cores)");
  simulate->add_option("--out", out, "Output directory");
  simulate->add_flag("-q,--quiet", quiet, "No per-run progress lines");

  std::string log_dir;
  std::optional<std::string> report_out;
  auto* report = app.add_subcommand("report", "Recompute reports from raw logs");
  report->add_option("log-dir", log_dir, "Directory of raw log CSVs")->required();
  report->add_option("--out", report_out, "Output directory");

  auto* validate = app.add_subcommand("validate", "Check a configuration and print it resolved");
  validate->add_option("config", config_path, "Experiment configuration (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfigError;
  }

  if (*validate) {
    auto loaded = load(config_path);
    if (!loaded) return kConfigError;
    std::cout << inpd::config_echo(loaded->experiment);
    return kOk;
  }

  if (*simulate) {
    auto loaded = load(config_path);
    if (!loaded) return kConfigError;
    inpd::SimulateOptions options;
    options.seed = seed;
    options.workers = workers;
    if (out) options.out = *out;
    if (!quiet) options.progress = &std::cerr;
    try {
      auto root = inpd::simulate(*loaded, options);
      std::cerr << "wrote " << root.string() << '\n';
    } catch (const inpd::BatchError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kRuntimeError;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kRuntimeError;
    }
    return kOk;
  }

  try {
    const auto dest = report_out ? std::filesystem::path(*report_out)
                                 : inpd::default_report_dir(log_dir);
    inpd::report_from_logs(log_dir, dest);
    std::cerr << "wrote " << dest.string() << '\n';
  } catch (const inpd::LogFormatError& e) {
    std::cerr << "log error: " << e.what() << '\n';
    return kRuntimeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kOk;
}
