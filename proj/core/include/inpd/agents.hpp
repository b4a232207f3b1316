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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inpd/act.hpp"
#include "inpd/impression_model.hpp"
#include "inpd/reward_matrix.hpp"
#include "inpd/rng.hpp"

namespace inpd {

enum class AgentFamily { BayesActLite, Imitation, AllC, AllD, RandomCoin, TitForTatAggregate };

/// Planning iterations standing in for the 0 / 1 / 10 second search limits.
std::size_t budget_for_timeout(int seconds);

struct AgentConfig {
  AgentFamily family = AgentFamily::AllC;
  std::string semantics_label = "default";
  std::size_t planning_budget = 0;
  double q = 0.0;
  std::size_t particle_count = 300;
  double likelihood_sigma = 1.0;
  double drift_rate = 0.05;
  int rollout_depth = 3;
  /// Weight of one unit of deflection against a full-range payoff
  /// difference inside planning rollouts.
  double affect_weight = 0.5;

  /// BACT[D|S][0|1|10], IM[0..100], ALLC, ALLD, RANDOM, TFT.
  static AgentConfig from_shorthand(std::string_view name);
  /// Inverse of from_shorthand. Non-standard budgets render as BACTD@<n>.
  std::string shorthand() const;

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

struct Particle {
  Epa self;
  Epa opponent;
  double weight = 0.0;
};

/// Joint particle belief over (self identity, aggregate opponent identity).
struct BeliefState {
  std::vector<Particle> particles;
  std::optional<Action> last_action;
  std::size_t degenerate_updates = 0;
};

struct NeighborSummary {
  Action last_action = Action::Cooperate;
  Tenths last_payoff = 0;
};

/// What an agent observes before choosing its round-t action: everything
/// refers to round t-1.
struct AgentView {
  Tenths own_last_payoff = 0;
  std::vector<NeighborSummary> neighbor_summaries;
  int round_index = 0;
};

/// Shared, read-only inputs of a decision.
struct DecisionContext {
  const ImpressionModel& model;
  const ActionSemantics& semantics;
  const RewardMatrix& matrix;
};

/// Friend/scrooge mixture prior: one mixture weight for the self cloud and an
/// independent one for the opponent cloud, isotropic spread `sd` per axis.
BeliefState init_belief(const AgentConfig& config, Rng& rng, double sd = 0.5);

/// Componentwise mean of the neighbors' action profiles. Throws
/// std::invalid_argument for an empty list.
Epa aggregate_opponent_epa(std::span<const Action> neighbor_actions,
                           const ActionSemantics& semantics);

double effective_sample_size(const BeliefState& state);

/// Reweights every particle by how well its opponent identity predicts the
/// observed aggregate behavior, then resamples (systematic) and roughens when
/// the effective sample size falls below half the particle count.
BeliefState update_belief(BeliefState state, const Epa& observed, const ImpressionModel& model,
                          const AgentConfig& config, Rng& rng);

/// BayesACT-lite action choice. `observed` is the last aggregate opponent
/// behavior, if any.
Action plan_action(const BeliefState& state, const std::optional<Epa>& observed,
                   const DecisionContext& ctx, const AgentConfig& config, Rng& rng);

/// Unconditional imitation with random-neighbor noise q. Requires
/// round_index >= 1.
Action imitation_choose(const AgentView& view, Action own_last_action, double q, Rng& rng);

/// A strategy instance owned by one node of one simulation.
class Agent {
 public:
  Agent(const AgentConfig& config, Rng rng);

  /// Chooses the round-`view.round_index` action from the previous round's
  /// snapshot and remembers it.
  Action decide(const AgentView& view, const DecisionContext& ctx);

  const AgentConfig& config() const { return config_; }
  const BeliefState& belief() const { return belief_; }
  std::optional<Action> last_action() const { return last_action_; }

 private:
  AgentConfig config_;
  Rng rng_;
  BeliefState belief_;
  std::optional<Action> last_action_;
};

}  // namespace inpd
