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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "inpd/engine.hpp"

namespace inpd {

/// Invalid experiment configuration. `location()` is a JSON pointer into the
/// document ("" for the root, "/agents/2/q" for a field).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string source, std::string location, const std::string& message);
  const std::string& source() const { return source_; }
  const std::string& location() const { return location_; }
  const std::string& message() const { return message_; }

 private:
  std::string source_;
  std::string location_;
  std::string message_;
};

struct LoadedConfig {
  ExperimentConfig experiment;
  /// Non-fatal findings, e.g. matrices that break the strict payoff order.
  std::vector<std::string> warnings;
};

/// Parses a JSON experiment description. `source` names the document in
/// error messages.
LoadedConfig parse_config_text(std::string_view text, const std::string& source = "<config>");
LoadedConfig parse_config(const std::filesystem::path& path);

/// The resolved configuration as pretty-printed JSON, every default filled in.
std::string config_echo(const ExperimentConfig& experiment);

}  // namespace inpd
