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


#include "inpd/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json_codec.hpp"

namespace inpd {

namespace fs = std::filesystem;
using detail::DecodeError;
using detail::Json;

ConfigError::ConfigError(std::string source, std::string location, const std::string& message)
    : std::runtime_error(source + ": " + (location.empty() ? "/" : location) + ": " + message),
      source_(std::move(source)),
      location_(std::move(location)),
      message_(message) {}

namespace {

const Json& list_at(const Json& root, const char* key) {
  if (!root.contains(key)) throw DecodeError("", std::string("missing key '") + key + "'");
  const Json& list = root.at(key);
  if (!list.is_array() || list.empty()) {
    throw DecodeError(std::string("/") + key, "expected a non-empty list");
  }
  return list;
}

void check_unique(const std::vector<std::string>& labels, const char* key) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty() || labels[i].find_first_of(",/\\\n") != std::string::npos ||
        labels[i].find("__") != std::string::npos) {
      throw DecodeError(std::string("/") + key + "/" + std::to_string(i),
                        "label '" + labels[i] + "' is empty or contains ',', '/', '__' or a newline");
    }
    if (!seen.insert(labels[i]).second) {
      throw DecodeError(std::string("/") + key + "/" + std::to_string(i),
                        "duplicate label '" + labels[i] + "'");
    }
  }
}

LoadedConfig decode(const Json& root) {
  if (!root.is_object()) throw DecodeError("", "expected a JSON object");
  for (const auto& [key, value] : root.items()) {
    static const std::set<std::string> known{
        "master_seed", "agents",       "networks",   "matrices",        "rounds",
        "sims_per_cell", "output_dir", "parallelism", "impression_model", "run_count"};
    if (!known.contains(key)) throw DecodeError("/" + key, "unknown key '" + key + "'");
  }
  LoadedConfig loaded;
  auto& x = loaded.experiment;

  if (!root.contains("master_seed")) throw DecodeError("", "missing key 'master_seed'");
  if (!root["master_seed"].is_number_unsigned()) {
    throw DecodeError("/master_seed", "expected a non-negative 64-bit integer");
  }
  x.master_seed = root["master_seed"].get<std::uint64_t>();

  const Json& agents = list_at(root, "agents");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    std::string label;
    x.agents.push_back(detail::decode_agent(agents[i], "/agents/" + std::to_string(i), &label));
    x.agent_labels.push_back(label);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < x.agents.size(); ++i) labels.push_back(x.setting_label(i));
  check_unique(labels, "agents");

  const Json& networks = list_at(root, "networks");
  labels.clear();
  for (std::size_t i = 0; i < networks.size(); ++i) {
    x.networks.push_back(detail::decode_network(networks[i], "/networks/" + std::to_string(i)));
    labels.push_back(x.networks.back().label);
  }
  check_unique(labels, "networks");

  const Json& matrices = list_at(root, "matrices");
  labels.clear();
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    x.matrices.push_back(detail::decode_matrix(matrices[i], "/matrices/" + std::to_string(i)));
    const auto& m = x.matrices.back();
    labels.push_back(m.label());
    if (m.non_strict()) {
      loaded.warnings.push_back("/matrices/" + std::to_string(i) + ": matrix " + m.label() +
                                " violates the strict dilemma order T > R > P > S (non_strict)");
    }
  }
  check_unique(labels, "matrices");

  if (root.contains("rounds")) {
    if (!root["rounds"].is_number_unsigned() || root["rounds"].get<std::uint64_t>() < 1 ||
        root["rounds"].get<std::uint64_t>() > 1000000) {
      throw DecodeError("/rounds", "expected a positive integer");
    }
    x.rounds = root["rounds"].get<int>();
  }
  if (root.contains("sims_per_cell")) {
    if (!root["sims_per_cell"].is_number_unsigned() || root["sims_per_cell"].get<std::uint64_t>() < 1) {
      throw DecodeError("/sims_per_cell", "expected a positive integer");
    }
    x.sims_per_cell = root["sims_per_cell"].get<std::size_t>();
  }
  if (root.contains("output_dir")) {
    if (!root["output_dir"].is_string()) throw DecodeError("/output_dir", "expected a string");
    x.output_dir = root["output_dir"].get<std::string>();
  }
  if (root.contains("parallelism")) {
    const Json& p = root["parallelism"];
    if (p.is_string() && p.get<std::string>() == "auto") {
      x.workers = 0;
    } else if (p.is_number_unsigned() && p.get<std::uint64_t>() >= 1) {
      x.workers = p.get<std::size_t>();
    } else {
      throw DecodeError("/parallelism", "expected \"auto\" or a positive worker count");
    }
  }
  if (root.contains("impression_model")) {
    if (!root["impression_model"].is_string()) {
      throw DecodeError("/impression_model", "expected a string");
    }
    x.impression_model = root["impression_model"].get<std::string>();
  }
  // Present in echoed configurations; must agree with the grid.
  if (root.contains("run_count")) {
    if (!root["run_count"].is_number_unsigned() ||
        root["run_count"].get<std::uint64_t>() != x.run_count()) {
      throw DecodeError("/run_count", "does not match agents x networks x matrices x sims_per_cell (" +
                                          std::to_string(x.run_count()) + ")");
    }
  }
  return loaded;
}

}  // namespace

LoadedConfig parse_config_text(std::string_view text, const std::string& source) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(source, "", std::string("malformed JSON (") + e.what() + ")");
  }
  try {
    return decode(root);
  } catch (const DecodeError& e) {
    throw ConfigError(source, e.pointer(), e.what());
  }
}

LoadedConfig parse_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "", "cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  auto loaded = parse_config_text(text.str(), path.string());
  // Impression model files are resolved against the config's directory.
  auto& model = loaded.experiment.impression_model;
  if (model != "default" && model != "identity" && fs::path(model).is_relative()) {
    model = (path.parent_path() / model).lexically_normal().string();
  }
  try {
    (void)resolve_impression_model(model);
  } catch (const std::exception& e) {
    throw ConfigError(path.string(), "/impression_model", e.what());
  }
  return loaded;
}

std::string config_echo(const ExperimentConfig& x) {
  Json j;
  j["master_seed"] = x.master_seed;
  j["agents"] = Json::array();
  for (std::size_t i = 0; i < x.agents.size(); ++i) {
    j["agents"].push_back(detail::encode_agent(x.agents[i], x.setting_label(i)));
  }
  j["networks"] = Json::array();
  for (const auto& n : x.networks) j["networks"].push_back(detail::encode_network(n));
  j["matrices"] = Json::array();
  for (const auto& m : x.matrices) j["matrices"].push_back(detail::encode_matrix(m));
  j["rounds"] = x.rounds;
  j["sims_per_cell"] = x.sims_per_cell;
  j["output_dir"] = x.output_dir;
  if (x.workers == 0) {
    j["parallelism"] = "auto";
  } else {
    j["parallelism"] = x.workers;
  }
  j["impression_model"] = x.impression_model;
  j["run_count"] = x.run_count();
  return j.dump(2) + "\n";
}

}  // namespace inpd
