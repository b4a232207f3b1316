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

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "inpd/engine.hpp"

namespace inpd {

/// A raw log that cannot be read back; names the offending file.
class LogFormatError : public std::runtime_error {
 public:
  LogFormatError(const std::filesystem::path& file, std::size_t line, const std::string& what);
  const std::filesystem::path& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::filesystem::path file_;
  std::size_t line_;
};

inline constexpr std::string_view kLogHeader =
    "sim_id,round,agent_id,action,payoff,coop_neighbors,degree";

/// One row per (round, agent), round-major.
void write_log_csv(std::ostream& out, const SimulationLog& log);

/// Run identity, seed, agent/network/matrix settings and the graph's edges.
std::string log_sidecar_json(const SimulationLog& log, const std::string& impression_model);

/// Writes `content` to a sibling temp file, then renames it over `path`.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Writes <dir>/<run name>.csv and its .json sidecar, each atomically.
void save_log(const SimulationLog& log, const std::filesystem::path& dir,
              const std::string& impression_model);

/// Reads one log. The sidecar is optional: without it the run identity is
/// recovered from the file name and indices are left at zero.
SimulationLog read_log(const std::filesystem::path& csv);

/// Reads every *.csv in `dir`. Runs without sidecars get indices from the
/// sorted order of their setting, network and matrix names. Throws
/// std::runtime_error for an empty directory.
std::vector<SimulationLog> load_logs(const std::filesystem::path& dir);

}  // namespace inpd
