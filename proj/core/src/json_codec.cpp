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


#include "json_codec.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <stdexcept>

namespace inpd::detail {

namespace {

double decimal(Tenths t) { return static_cast<double>(t) / 10.0; }

template <typename T>
T parse_number(const std::string& s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number '" + s + "'");
  }
  return value;
}

}  // namespace

const char* family_name(AgentFamily family) {
  switch (family) {
    case AgentFamily::BayesActLite: return "bayesact_lite";
    case AgentFamily::Imitation: return "imitation";
    case AgentFamily::AllC: return "all_c";
    case AgentFamily::AllD: return "all_d";
    case AgentFamily::RandomCoin: return "random_coin";
    case AgentFamily::TitForTatAggregate: return "tit_for_tat_aggregate";
  }
  return "?";
}

AgentFamily family_from_name(const std::string& name) {
  for (auto f : {AgentFamily::BayesActLite, AgentFamily::Imitation, AgentFamily::AllC,
                 AgentFamily::AllD, AgentFamily::RandomCoin, AgentFamily::TitForTatAggregate}) {
    if (name == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown agent family '" + name + "'");
}

Json encode_agent(const AgentConfig& agent, const std::string& label) {
  Json j;
  j["label"] = label;
  j["shorthand"] = agent.shorthand();
  j["family"] = family_name(agent.family);
  switch (agent.family) {
    case AgentFamily::BayesActLite:
      j["semantics"] = agent.semantics_label;
      j["planning_budget"] = agent.planning_budget;
      j["particle_count"] = agent.particle_count;
      j["likelihood_sigma"] = agent.likelihood_sigma;
      j["drift_rate"] = agent.drift_rate;
      j["rollout_depth"] = agent.rollout_depth;
      j["affect_weight"] = agent.affect_weight;
      break;
    case AgentFamily::Imitation:
      j["q"] = agent.q;
      break;
    default:
      break;
  }
  return j;
}

std::string network_notation(const NetworkSpec& network) {
  if (network.kind == NetworkSpec::Kind::GridTorus) {
    return std::string(network.neighborhood == Neighborhood::Eight ? "grid8" : "grid4") +
           "_torus_" + std::to_string(network.rows) + "x" + std::to_string(network.cols);
  }
  return "er(" + std::to_string(network.nodes) + "," + std::to_string(network.edges) + ")";
}

Json encode_network(const NetworkSpec& network) {
  Json j;
  j["label"] = network.label;
  j["spec"] = network_notation(network);
  return j;
}

Json encode_matrix(const RewardMatrix& matrix) {
  Json j;
  j["label"] = matrix.label();
  j["T"] = decimal(matrix.t());
  j["R"] = decimal(matrix.r());
  j["P"] = decimal(matrix.p());
  j["S"] = decimal(matrix.s());
  j["non_strict"] = matrix.non_strict();
  return j;
}

std::optional<NetworkSpec> parse_network_notation(const std::string& text) {
  static const std::regex grid_re(R"(grid(4|8)_torus_([0-9]+)x([0-9]+))");
  static const std::regex er_re(R"(er\(\s*([0-9]+)\s*,\s*([0-9]+)\s*\))");
  std::smatch m;
  if (std::regex_match(text, m, grid_re)) {
    auto spec = NetworkSpec::grid8_torus(parse_number<int>(m[2]), parse_number<int>(m[3]));
    spec.neighborhood = m[1] == "4" ? Neighborhood::Four : Neighborhood::Eight;
    spec.label = text;
    return spec;
  }
  if (std::regex_match(text, m, er_re)) {
    const auto n = parse_number<std::size_t>(m[1]);
    const auto e = parse_number<std::size_t>(m[2]);
    return NetworkSpec::erdos_renyi(n, e, "ER" + std::to_string(n) + "_" + std::to_string(e));
  }
  return std::nullopt;
}

}  // namespace inpd::detail

namespace inpd::detail {

namespace {

void check_keys(const Json& j, const std::string& where,
                std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw DecodeError(where + "/" + key, "unknown key '" + key + "'");
    }
  }
}

const Json& require(const Json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) throw DecodeError(where, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw DecodeError(where, "expected a string");
  return j.get<std::string>();
}

double as_real(const Json& j, const std::string& where) {
  if (!j.is_number()) throw DecodeError(where, "expected a number");
  return j.get<double>();
}

std::size_t as_count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw DecodeError(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Tenths as_tenths(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_tenths(j.get<std::string>());
    return to_tenths(as_real(j, where));
  } catch (const std::invalid_argument&) {
    throw DecodeError(where, "payoffs must be multiples of 0.1");
  }
}

}  // namespace

AgentConfig decode_agent(const Json& j, const std::string& where, std::string* label) {
  auto shorthand = [&](const std::string& name, const std::string& at) {
    try {
      return AgentConfig::from_shorthand(name);
    } catch (const std::invalid_argument& e) {
      throw DecodeError(at, e.what());
    }
  };
  if (j.is_string()) return shorthand(j.get<std::string>(), where);
  if (!j.is_object()) throw DecodeError(where, "expected a shorthand string or an object");
  check_keys(j, where,
             {"label", "shorthand", "family", "semantics", "planning_budget", "q",
              "particle_count", "likelihood_sigma", "drift_rate", "rollout_depth",
              "affect_weight"});
  AgentConfig c = shorthand(as_string(require(j, where, "shorthand"), where + "/shorthand"),
                            where + "/shorthand");
  if (j.contains("family") &&
      as_string(j["family"], where + "/family") != family_name(c.family)) {
    throw DecodeError(where + "/family", "family does not match the shorthand");
  }
  if (j.contains("label") && label) *label = as_string(j["label"], where + "/label");
  if (j.contains("semantics")) {
    c.semantics_label = as_string(j["semantics"], where + "/semantics");
    if (c.semantics_label != "default" && c.semantics_label != "study") {
      throw DecodeError(where + "/semantics", "semantics must be 'default' or 'study'");
    }
  }
  if (j.contains("planning_budget")) {
    c.planning_budget = as_count(j["planning_budget"], where + "/planning_budget");
  }
  if (j.contains("q")) c.q = as_real(j["q"], where + "/q");
  if (j.contains("particle_count")) {
    c.particle_count = as_count(j["particle_count"], where + "/particle_count");
  }
  if (j.contains("likelihood_sigma")) {
    c.likelihood_sigma = as_real(j["likelihood_sigma"], where + "/likelihood_sigma");
  }
  if (j.contains("drift_rate")) c.drift_rate = as_real(j["drift_rate"], where + "/drift_rate");
  if (j.contains("rollout_depth")) {
    c.rollout_depth = static_cast<int>(as_count(j["rollout_depth"], where + "/rollout_depth"));
  }
  if (j.contains("affect_weight")) {
    c.affect_weight = as_real(j["affect_weight"], where + "/affect_weight");
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw DecodeError(where, e.what());
  }
  return c;
}

NetworkSpec decode_network(const Json& j, const std::string& where) {
  auto parse = [&](const std::string& text, const std::string& at) {
    auto spec = parse_network_notation(text);
    if (!spec) {
      throw DecodeError(at, "unknown network '" + text +
                                "' (expected grid8_torus_RxC, grid4_torus_RxC or er(n,m))");
    }
    if (spec->kind == NetworkSpec::Kind::GridTorus && (spec->rows < 3 || spec->cols < 3)) {
      throw DecodeError(at, "grid sides must be at least 3");
    }
    if (spec->kind == NetworkSpec::Kind::ErdosRenyi &&
        spec->edges > spec->nodes * (spec->nodes - (spec->nodes > 0 ? 1 : 0)) / 2) {
      throw DecodeError(at, "too many edges for a simple graph");
    }
    if (spec->node_count() == 0) throw DecodeError(at, "network has no nodes");
    if (spec->node_count() > 65535) throw DecodeError(at, "at most 65535 nodes are supported");
    return *spec;
  };
  if (j.is_string()) return parse(j.get<std::string>(), where);
  if (!j.is_object()) throw DecodeError(where, "expected a network string or an object");
  check_keys(j, where, {"spec", "label"});
  NetworkSpec spec = parse(as_string(require(j, where, "spec"), where + "/spec"), where + "/spec");
  if (j.contains("label")) spec.label = as_string(j["label"], where + "/label");
  return spec;
}

RewardMatrix decode_matrix(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "M1") return RewardMatrix::m1();
    if (name == "M2") return RewardMatrix::m2();
    if (name == "M3") return RewardMatrix::m3();
    throw DecodeError(where, "unknown matrix '" + name + "' (expected M1, M2, M3 or an object)");
  }
  if (!j.is_object()) throw DecodeError(where, "expected a matrix name or an object");
  check_keys(j, where, {"label", "T", "R", "P", "S", "non_strict"});
  const auto label = as_string(require(j, where, "label"), where + "/label");
  return RewardMatrix(as_tenths(require(j, where, "T"), where + "/T"),
                      as_tenths(require(j, where, "R"), where + "/R"),
                      as_tenths(require(j, where, "P"), where + "/P"),
                      as_tenths(require(j, where, "S"), where + "/S"), label);
}

}  // namespace inpd::detail
