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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "inpd/agents.hpp"
#include "inpd/impression_model.hpp"
#include "inpd/network.hpp"
#include "inpd/reward_matrix.hpp"

namespace inpd {

/// Interaction graph recipe; graphs are rebuilt per run from the run seed.
struct NetworkSpec {
  enum class Kind { GridTorus, ErdosRenyi };

  Kind kind = Kind::GridTorus;
  int rows = 13;
  int cols = 13;
  Neighborhood neighborhood = Neighborhood::Eight;
  std::size_t nodes = 169;
  std::size_t edges = 0;
  std::string label = "Grid";

  static NetworkSpec grid8_torus(int rows, int cols, std::string label = "Grid");
  static NetworkSpec erdos_renyi(std::size_t nodes, std::size_t edges, std::string label);

  std::size_t node_count() const;
  Graph build(Rng& rng) const;
};

/// Index of a run inside a batch plus its resolved seed.
struct RunIdentity {
  std::size_t setting_index = 0;
  std::size_t network_index = 0;
  std::size_t matrix_index = 0;
  std::size_t sim_index = 0;
  std::string setting;
  std::string network;
  std::string matrix;
  std::uint64_t seed = 0;

  /// "<setting>__<network>__<matrix>__sim<NN>"; used for file names.
  std::string name() const;
};

std::uint64_t run_seed(std::uint64_t master_seed, std::size_t setting, std::size_t network,
                       std::size_t matrix, std::size_t sim);

struct RunSpec {
  RunIdentity identity;
  AgentConfig agent;
  NetworkSpec network;
  RewardMatrix matrix = RewardMatrix::m1();
  int rounds = 60;
};

/// One (round, agent) row of a simulation log.
struct AgentRecord {
  Tenths payoff = 0;
  std::uint16_t cooperating_neighbors = 0;
  std::uint16_t degree = 0;
  Action action = Action::Cooperate;
};

/// Complete history of one run, round-major.
class SimulationLog {
 public:
  SimulationLog() = default;
  SimulationLog(RunSpec spec, std::size_t agents);

  const RunSpec& spec() const { return spec_; }
  const RunIdentity& identity() const { return spec_.identity; }
  int rounds() const { return spec_.rounds; }
  std::size_t agents() const { return agents_; }

  const AgentRecord& at(int round, std::size_t agent) const {
    return records_[static_cast<std::size_t>(round) * agents_ + agent];
  }
  AgentRecord& at(int round, std::size_t agent) {
    return records_[static_cast<std::size_t>(round) * agents_ + agent];
  }
  std::span<const AgentRecord> round(int r) const {
    return {records_.data() + static_cast<std::size_t>(r) * agents_, agents_};
  }

  /// Edges of the run's graph (u < v), kept for re-derivation checks.
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  void set_edges(std::vector<std::pair<NodeId, NodeId>> edges) { edges_ = std::move(edges); }

  double cooperation_rate(int round) const;

  friend bool operator==(const SimulationLog& a, const SimulationLog& b);

 private:
  RunSpec spec_;
  std::size_t agents_ = 0;
  std::vector<AgentRecord> records_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

bool operator==(const AgentRecord& a, const AgentRecord& b);

/// Broadcast scoring: each node's payoff is the sum of its pairwise game
/// cells against all neighbors.
std::vector<Tenths> score_round(std::span<const Action> actions, const Graph& graph,
                                const RewardMatrix& matrix);

/// A running game: agents on a graph, advanced one synchronous round at a
/// time. Every decision of round t reads only the round t-1 snapshot.
class Simulation {
 public:
  Simulation(const RunSpec& spec, const ImpressionModel& model);

  const Graph& graph() const { return graph_; }
  int next_round() const { return round_; }
  bool done() const { return round_ >= spec_.rounds; }

  /// Observation of `agent` built from the committed previous round.
  AgentView view_of(NodeId agent) const;

  /// Every agent decides from the snapshot; agents are visited in `order`
  /// (defaults to 0..n-1).
  std::vector<Action> decide(std::span<const NodeId> order = {});

  /// Scores `actions`, logs the round and makes it the new snapshot.
  void commit(std::span<const Action> actions);

  void step() { commit(decide()); }

  SimulationLog& log() { return log_; }
  SimulationLog take_log() { return std::move(log_); }

 private:
  RunSpec spec_;
  const ImpressionModel& model_;
  ActionSemantics semantics_;
  Graph graph_;
  std::vector<Agent> agents_;
  std::vector<Action> last_actions_;
  std::vector<Tenths> last_payoffs_;
  int round_ = 0;
  SimulationLog log_;
};

SimulationLog run_simulation(const RunSpec& spec, const ImpressionModel& model);

/// Agent settings x networks x matrices x simulations.
struct ExperimentConfig {
  std::uint64_t master_seed = 0;
  std::vector<AgentConfig> agents;
  /// Optional display names, parallel to `agents`; empty entries fall back
  /// to the shorthand.
  std::vector<std::string> agent_labels;
  std::vector<NetworkSpec> networks;
  std::vector<RewardMatrix> matrices;
  int rounds = 60;
  std::size_t sims_per_cell = 20;
  std::string impression_model = "default";
  std::string output_dir = "out";
  std::size_t workers = 0;  // 0 = hardware concurrency

  std::string setting_label(std::size_t i) const;

  std::size_t run_count() const {
    return agents.size() * networks.size() * matrices.size() * sims_per_cell;
  }
};

/// Run specs in canonical (setting, network, matrix, sim) order.
std::vector<RunSpec> expand_runs(const ExperimentConfig& experiment);

class BatchError : public std::runtime_error {
 public:
  BatchError(RunIdentity run, const std::string& cause);
  const RunIdentity& run() const { return run_; }

 private:
  RunIdentity run_;
};

/// Runs every simulation of the experiment on `workers` threads (0 = auto).
/// `on_complete`, if given, is called once per finished log, possibly from a
/// worker thread; calls are serialized. Results are in canonical order and
/// independent of the worker count.
std::vector<SimulationLog> run_batch(
    const ExperimentConfig& experiment, std::size_t workers = 0,
    const std::function<void(const SimulationLog&)>& on_complete = {});

}  // namespace inpd
