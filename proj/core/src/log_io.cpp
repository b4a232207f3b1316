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


#include "inpd/log_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json_codec.hpp"

namespace inpd {

namespace fs = std::filesystem;
using detail::Json;

LogFormatError::LogFormatError(const fs::path& file, std::size_t line, const std::string& what)
    : std::runtime_error(file.string() + (line ? ":" + std::to_string(line) : std::string()) +
                         ": " + what),
      file_(file),
      line_(line) {}

void write_log_csv(std::ostream& out, const SimulationLog& log) {
  const std::string sim = log.identity().name();
  out << kLogHeader << '\n';
  for (int t = 0; t < log.rounds(); ++t) {
    auto recs = log.round(t);
    for (std::size_t a = 0; a < recs.size(); ++a) {
      const auto& r = recs[a];
      out << sim << ',' << t << ',' << a << ',' << to_char(r.action) << ','
          << format_tenths(r.payoff) << ',' << r.cooperating_neighbors << ',' << r.degree << '\n';
    }
  }
}

std::string log_sidecar_json(const SimulationLog& log, const std::string& impression_model) {
  const auto& spec = log.spec();
  const auto& id = spec.identity;
  Json j;
  j["sim_id"] = id.name();
  j["setting"] = id.setting;
  j["network"] = id.network;
  j["matrix"] = id.matrix;
  j["setting_index"] = id.setting_index;
  j["network_index"] = id.network_index;
  j["matrix_index"] = id.matrix_index;
  j["sim_index"] = id.sim_index;
  j["seed"] = id.seed;
  j["rounds"] = spec.rounds;
  j["agents"] = log.agents();
  j["impression_model"] = impression_model;
  j["agent_config"] = detail::encode_agent(spec.agent, id.setting);
  j["network_config"] = detail::encode_network(spec.network);
  j["matrix_config"] = detail::encode_matrix(spec.matrix);
  Json edges = Json::array();
  for (auto [u, v] : log.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

void atomic_write(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

void save_log(const SimulationLog& log, const fs::path& dir, const std::string& impression_model) {
  std::ostringstream csv;
  write_log_csv(csv, log);
  const std::string stem = log.identity().name();
  // Sidecar first: a CSV on disk always has its metadata next to it.
  atomic_write(dir / (stem + ".json"), log_sidecar_json(log, impression_model));
  atomic_write(dir / (stem + ".csv"), csv.str());
}

namespace {

struct Row {
  int round;
  std::size_t agent;
  AgentRecord record;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
bool parse_field(std::string_view s, T& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

// "<setting>__<network>__<matrix>__simNN"
RunIdentity identity_from_name(const fs::path& file, const std::string& stem) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto sep = stem.find("__", start);
    parts.push_back(stem.substr(start, sep - start));
    if (sep == std::string::npos) break;
    start = sep + 2;
  }
  RunIdentity id;
  if (parts.size() != 4 || !parts[3].starts_with("sim") ||
      !parse_field(std::string_view(parts[3]).substr(3), id.sim_index)) {
    throw LogFormatError(file, 0, "file name is not <setting>__<network>__<matrix>__simNN");
  }
  id.setting = parts[0];
  id.network = parts[1];
  id.matrix = parts[2];
  return id;
}

RunSpec spec_from_sidecar(const fs::path& file) {
  std::ifstream in(file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw LogFormatError(file, 0, std::string("bad sidecar: ") + e.what());
  }
  RunSpec spec;
  try {
    auto& id = spec.identity;
    id.setting = j.at("setting").get<std::string>();
    id.network = j.at("network").get<std::string>();
    id.matrix = j.at("matrix").get<std::string>();
    id.setting_index = j.at("setting_index").get<std::size_t>();
    id.network_index = j.at("network_index").get<std::size_t>();
    id.matrix_index = j.at("matrix_index").get<std::size_t>();
    id.sim_index = j.at("sim_index").get<std::size_t>();
    id.seed = j.at("seed").get<std::uint64_t>();
    spec.rounds = j.at("rounds").get<int>();
    spec.agent = detail::decode_agent(j.at("agent_config"), "/agent_config", nullptr);
    spec.network = detail::decode_network(j.at("network_config"), "/network_config");
    spec.matrix = detail::decode_matrix(j.at("matrix_config"), "/matrix_config");
  } catch (const detail::DecodeError& e) {
    throw LogFormatError(file, 0, "bad sidecar at " + e.pointer() + ": " + e.what());
  } catch (const std::exception& e) {
    throw LogFormatError(file, 0, std::string("bad sidecar: ") + e.what());
  }
  return spec;
}

std::vector<std::pair<NodeId, NodeId>> edges_from_sidecar(const fs::path& file) {
  std::ifstream in(file);
  auto j = Json::parse(in);
  std::vector<std::pair<NodeId, NodeId>> edges;
  if (!j.contains("edges")) return edges;
  for (const auto& e : j["edges"]) edges.emplace_back(e.at(0).get<NodeId>(), e.at(1).get<NodeId>());
  return edges;
}

}  // namespace

SimulationLog read_log(const fs::path& csv) {
  std::ifstream in(csv);
  if (!in) throw LogFormatError(csv, 0, "cannot open");
  const std::string stem = csv.stem().string();
  fs::path sidecar = csv;
  sidecar.replace_extension(".json");
  const bool has_sidecar = fs::exists(sidecar);
  RunSpec spec;
  if (has_sidecar) {
    spec = spec_from_sidecar(sidecar);
  } else {
    spec.identity = identity_from_name(csv, stem);
  }

  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != kLogHeader) {
    throw LogFormatError(csv, 1, "expected header '" + std::string(kLogHeader) + "'");
  }
  std::vector<Row> rows;
  int max_round = -1;
  std::size_t max_agent = 0;
  std::string sim_id;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto f = split(line);
    if (f.size() != 7) throw LogFormatError(csv, line_no, "expected 7 fields");
    if (sim_id.empty()) sim_id = std::string(f[0]);
    if (f[0] != sim_id) throw LogFormatError(csv, line_no, "mixed sim_id values");
    Row row{};
    if (!parse_field(f[1], row.round) || row.round < 0) {
      throw LogFormatError(csv, line_no, "bad round");
    }
    if (!parse_field(f[2], row.agent)) throw LogFormatError(csv, line_no, "bad agent_id");
    if (f[3] == "C") {
      row.record.action = Action::Cooperate;
    } else if (f[3] == "D") {
      row.record.action = Action::Defect;
    } else {
      throw LogFormatError(csv, line_no, "action must be C or D");
    }
    try {
      row.record.payoff = parse_tenths(std::string(f[4]));
    } catch (const std::invalid_argument&) {
      throw LogFormatError(csv, line_no, "bad payoff");
    }
    if (!parse_field(f[5], row.record.cooperating_neighbors) ||
        !parse_field(f[6], row.record.degree) ||
        row.record.cooperating_neighbors > row.record.degree) {
      throw LogFormatError(csv, line_no, "bad neighbor counts");
    }
    max_round = std::max(max_round, row.round);
    max_agent = std::max(max_agent, row.agent);
    rows.push_back(row);
  }
  if (rows.empty()) throw LogFormatError(csv, line_no, "no records");
  const int rounds = max_round + 1;
  const std::size_t agents = max_agent + 1;
  if (has_sidecar && rounds != spec.rounds) {
    throw LogFormatError(csv, 0, "log has " + std::to_string(rounds) + " rounds, sidecar says " +
                                     std::to_string(spec.rounds));
  }
  spec.rounds = rounds;
  if (rows.size() != static_cast<std::size_t>(rounds) * agents) {
    throw LogFormatError(csv, 0, "incomplete log: expected " +
                                     std::to_string(static_cast<std::size_t>(rounds) * agents) +
                                     " records, found " + std::to_string(rows.size()));
  }
  SimulationLog log(spec, agents);
  std::vector<bool> seen(rows.size(), false);
  for (const auto& row : rows) {
    const std::size_t k = static_cast<std::size_t>(row.round) * agents + row.agent;
    if (seen[k]) throw LogFormatError(csv, 0, "duplicate record for round " +
                                                  std::to_string(row.round) + ", agent " +
                                                  std::to_string(row.agent));
    seen[k] = true;
    log.at(row.round, row.agent) = row.record;
  }
  if (has_sidecar) log.set_edges(edges_from_sidecar(sidecar));
  return log;
}

std::vector<SimulationLog> load_logs(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error(dir.string() + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  if (files.empty()) throw std::runtime_error(dir.string() + ": no log files");
  std::sort(files.begin(), files.end());

  std::vector<SimulationLog> logs;
  std::vector<bool> named_only;
  for (const auto& f : files) {
    fs::path sidecar = f;
    sidecar.replace_extension(".json");
    named_only.push_back(!fs::exists(sidecar));
    logs.push_back(read_log(f));
  }
  // Logs without sidecars: index names in sorted order.
  std::set<std::string> settings, networks, matrices;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    if (!named_only[i]) continue;
    settings.insert(logs[i].identity().setting);
    networks.insert(logs[i].identity().network);
    matrices.insert(logs[i].identity().matrix);
  }
  auto index_of = [](const std::set<std::string>& s, const std::string& v) {
    return static_cast<std::size_t>(std::distance(s.begin(), s.find(v)));
  };
  for (std::size_t i = 0; i < logs.size(); ++i) {
    if (!named_only[i]) continue;
    RunSpec spec = logs[i].spec();
    spec.identity.setting_index = index_of(settings, spec.identity.setting);
    spec.identity.network_index = index_of(networks, spec.identity.network);
    spec.identity.matrix_index = index_of(matrices, spec.identity.matrix);
    SimulationLog relabeled(spec, logs[i].agents());
    for (int t = 0; t < spec.rounds; ++t) {
      for (std::size_t a = 0; a < logs[i].agents(); ++a) relabeled.at(t, a) = logs[i].at(t, a);
    }
    logs[i] = std::move(relabeled);
  }
  std::sort(logs.begin(), logs.end(), [](const SimulationLog& a, const SimulationLog& b) {
    const auto& x = a.identity();
    const auto& y = b.identity();
    return std::tie(x.setting_index, x.network_index, x.matrix_index, x.sim_index) <
           std::tie(y.setting_index, y.network_index, y.matrix_index, y.sim_index);
  });
  return logs;
}

}  // namespace inpd
