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

// JSON encodings shared by the config parser, the log sidecars and the
// config echo. Internal to the core library.

#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "inpd/engine.hpp"

namespace inpd::detail {

using Json = nlohmann::ordered_json;

const char* family_name(AgentFamily family);
AgentFamily family_from_name(const std::string& name);

Json encode_agent(const AgentConfig& agent, const std::string& label);
/// Network spec in config notation: "grid8_torus_13x13" or "er(169,434)".
std::string network_notation(const NetworkSpec& network);
Json encode_network(const NetworkSpec& network);
Json encode_matrix(const RewardMatrix& matrix);

/// Decoding failure at a JSON pointer inside the document.
class DecodeError : public std::invalid_argument {
 public:
  DecodeError(std::string pointer, const std::string& what)
      : std::invalid_argument(what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Shorthand string or object {"shorthand", "label", overrides...}. `label`
/// receives the explicit label, if any.
AgentConfig decode_agent(const Json& j, const std::string& where, std::string* label);
/// Notation string or object {"spec", "label"}.
NetworkSpec decode_network(const Json& j, const std::string& where);
/// "M1" | "M2" | "M3" or object {"label", "T", "R", "P", "S"}.
RewardMatrix decode_matrix(const Json& j, const std::string& where);

/// Parses "gridK_torus_RxC" or "er(n,m)"; nullopt if the text matches neither.
std::optional<NetworkSpec> parse_network_notation(const std::string& text);

}  // namespace inpd::detail
