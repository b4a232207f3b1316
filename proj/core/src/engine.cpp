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


#include "inpd/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

namespace inpd {

namespace {

// Stream tags for the per-run generators.
constexpr std::uint64_t kGraphStream = 0x67726170ULL;
constexpr std::uint64_t kAgentStream = 0x6167656eULL;

}  // namespace

NetworkSpec NetworkSpec::grid8_torus(int rows, int cols, std::string label) {
  NetworkSpec s;
  s.kind = Kind::GridTorus;
  s.rows = rows;
  s.cols = cols;
  s.neighborhood = Neighborhood::Eight;
  s.nodes = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  s.label = std::move(label);
  return s;
}

NetworkSpec NetworkSpec::erdos_renyi(std::size_t nodes, std::size_t edges, std::string label) {
  NetworkSpec s;
  s.kind = Kind::ErdosRenyi;
  s.nodes = nodes;
  s.edges = edges;
  s.label = std::move(label);
  return s;
}

std::size_t NetworkSpec::node_count() const {
  return kind == Kind::GridTorus ? static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)
                                 : nodes;
}

Graph NetworkSpec::build(Rng& rng) const {
  if (kind == Kind::GridTorus) return grid(rows, cols, neighborhood, true);
  return inpd::erdos_renyi(nodes, edges, rng);
}

std::string RunIdentity::name() const {
  char sim[16];
  std::snprintf(sim, sizeof sim, "sim%02zu", sim_index);
  return setting + "__" + network + "__" + matrix + "__" + sim;
}

std::uint64_t run_seed(std::uint64_t master_seed, std::size_t setting, std::size_t network,
                       std::size_t matrix, std::size_t sim) {
  return mix_seed({master_seed, setting, network, matrix, sim});
}

SimulationLog::SimulationLog(RunSpec spec, std::size_t agents)
    : spec_(std::move(spec)),
      agents_(agents),
      records_(static_cast<std::size_t>(spec_.rounds) * agents) {}

double SimulationLog::cooperation_rate(int r) const {
  if (agents_ == 0) return 0.0;
  std::size_t c = 0;
  for (const auto& rec : round(r)) c += rec.action == Action::Cooperate ? 1 : 0;
  return static_cast<double>(c) / static_cast<double>(agents_);
}

bool operator==(const AgentRecord& a, const AgentRecord& b) {
  return a.payoff == b.payoff && a.cooperating_neighbors == b.cooperating_neighbors &&
         a.degree == b.degree && a.action == b.action;
}

bool operator==(const SimulationLog& a, const SimulationLog& b) {
  return a.agents_ == b.agents_ && a.spec_.rounds == b.spec_.rounds &&
         a.spec_.identity.seed == b.spec_.identity.seed && a.records_ == b.records_ &&
         a.edges_ == b.edges_;
}

std::vector<Tenths> score_round(std::span<const Action> actions, const Graph& graph,
                                const RewardMatrix& matrix) {
  if (actions.size() != graph.size()) {
    throw std::invalid_argument("one action per node required");
  }
  std::vector<Tenths> payoffs(graph.size(), 0);
  for (NodeId u = 0; u < graph.size(); ++u) {
    for (NodeId v : graph.neighbors(u)) payoffs[u] += matrix.cell(actions[u], actions[v]);
  }
  return payoffs;
}

Simulation::Simulation(const RunSpec& spec, const ImpressionModel& model)
    : spec_(spec),
      model_(model),
      semantics_(ActionSemantics::by_label(spec.agent.semantics_label)) {
  if (spec_.rounds < 1) throw std::invalid_argument("rounds must be positive");
  spec_.agent.validate();
  Rng graph_rng(mix_seed({spec_.identity.seed, kGraphStream}));
  graph_ = spec_.network.build(graph_rng);
  agents_.reserve(graph_.size());
  for (NodeId v = 0; v < graph_.size(); ++v) {
    agents_.emplace_back(spec_.agent, Rng(mix_seed({spec_.identity.seed, kAgentStream, v})));
  }
  last_actions_.assign(graph_.size(), Action::Cooperate);
  last_payoffs_.assign(graph_.size(), 0);
  log_ = SimulationLog(spec_, graph_.size());
  log_.set_edges(graph_.edges());
}

AgentView Simulation::view_of(NodeId agent) const {
  AgentView view;
  view.round_index = round_;
  if (round_ == 0) return view;
  view.own_last_payoff = last_payoffs_[agent];
  for (NodeId v : graph_.neighbors(agent)) {
    view.neighbor_summaries.push_back({last_actions_[v], last_payoffs_[v]});
  }
  return view;
}

std::vector<Action> Simulation::decide(std::span<const NodeId> order) {
  const DecisionContext ctx{model_, semantics_, spec_.matrix};
  std::vector<Action> actions(graph_.size(), Action::Cooperate);
  auto visit = [&](NodeId v) { actions[v] = agents_[v].decide(view_of(v), ctx); };
  if (order.empty()) {
    for (NodeId v = 0; v < graph_.size(); ++v) visit(v);
  } else {
    for (NodeId v : order) visit(v);
  }
  return actions;
}

void Simulation::commit(std::span<const Action> actions) {
  if (done()) throw std::logic_error("simulation already finished");
  auto payoffs = score_round(actions, graph_, spec_.matrix);
  for (NodeId u = 0; u < graph_.size(); ++u) {
    auto& rec = log_.at(round_, u);
    rec.action = actions[u];
    rec.payoff = payoffs[u];
    rec.degree = static_cast<std::uint16_t>(graph_.degree(u));
    std::uint16_t c = 0;
    for (NodeId v : graph_.neighbors(u)) c += actions[v] == Action::Cooperate ? 1 : 0;
    rec.cooperating_neighbors = c;
  }
  last_actions_.assign(actions.begin(), actions.end());
  last_payoffs_ = std::move(payoffs);
  ++round_;
}

SimulationLog run_simulation(const RunSpec& spec, const ImpressionModel& model) {
  Simulation sim(spec, model);
  while (!sim.done()) sim.step();
  return sim.take_log();
}

std::string ExperimentConfig::setting_label(std::size_t i) const {
  if (i < agent_labels.size() && !agent_labels[i].empty()) return agent_labels[i];
  return agents.at(i).shorthand();
}

std::vector<RunSpec> expand_runs(const ExperimentConfig& experiment) {
  std::vector<RunSpec> runs;
  runs.reserve(experiment.run_count());
  for (std::size_t a = 0; a < experiment.agents.size(); ++a) {
    for (std::size_t n = 0; n < experiment.networks.size(); ++n) {
      for (std::size_t m = 0; m < experiment.matrices.size(); ++m) {
        for (std::size_t s = 0; s < experiment.sims_per_cell; ++s) {
          RunSpec spec;
          spec.identity = {a,
                           n,
                           m,
                           s,
                           experiment.setting_label(a),
                           experiment.networks[n].label,
                           experiment.matrices[m].label(),
                           run_seed(experiment.master_seed, a, n, m, s)};
          spec.agent = experiment.agents[a];
          spec.network = experiment.networks[n];
          spec.matrix = experiment.matrices[m];
          spec.rounds = experiment.rounds;
          runs.push_back(std::move(spec));
        }
      }
    }
  }
  return runs;
}

BatchError::BatchError(RunIdentity run, const std::string& cause)
    : std::runtime_error("run " + run.name() + " failed: " + cause), run_(std::move(run)) {}

std::vector<SimulationLog> run_batch(
    const ExperimentConfig& experiment, std::size_t workers,
    const std::function<void(const SimulationLog&)>& on_complete) {
  const ImpressionModel model = resolve_impression_model(experiment.impression_model);
  const auto runs = expand_runs(experiment);
  std::vector<SimulationLog> logs(runs.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(runs.size(), 1));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mutex;
  std::optional<BatchError> first_error;
  std::size_t first_error_index = runs.size();

  auto work = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= runs.size()) return;
      try {
        logs[i] = run_simulation(runs[i], model);
        if (on_complete) {
          std::lock_guard lock(mutex);
          on_complete(logs[i]);
        }
      } catch (const std::exception& e) {
        std::lock_guard lock(mutex);
        failed = true;
        if (i < first_error_index) {
          first_error_index = i;
          first_error.emplace(runs[i].identity, e.what());
        }
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (first_error) throw *first_error;
  return logs;
}

}  // namespace inpd
