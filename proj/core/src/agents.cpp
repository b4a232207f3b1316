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


#include "inpd/agents.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace inpd {

namespace {

Epa sample_identity(Rng& rng, double mixture, double sd) {
  const Epa& mean = uniform01(rng) < mixture ? identities::kFriend : identities::kScrooge;
  double e = normal(rng, mean.e(), sd);
  double p = normal(rng, mean.p(), sd);
  double a = normal(rng, mean.a(), sd);
  return Epa(e, p, a);
}

Epa roughen(const Epa& x, double sd, Rng& rng) {
  return Epa(x.e() + normal(rng, 0.0, sd), x.p() + normal(rng, 0.0, sd),
             x.a() + normal(rng, 0.0, sd));
}

std::size_t sample_by_weight(const std::vector<Particle>& particles, Rng& rng) {
  double u = uniform01(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < particles.size(); ++i) {
    acc += particles[i].weight;
    if (u < acc) return i;
  }
  return particles.size() - 1;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Per-particle quantities reused across planning iterations.
struct ParticleOutlook {
  bool ready = false;
  double deflection_cooperate = 0.0;
  double deflection_defect = 0.0;
  Action opponent = Action::Cooperate;

  double prior_cooperate() const {
    double c = 1.0 / (1.0 + deflection_cooperate);
    double d = 1.0 / (1.0 + deflection_defect);
    return c / (c + d);
  }
  double deflection_of(Action a) const {
    return a == Action::Cooperate ? deflection_cooperate : deflection_defect;
  }
};

double action_deflection(const Particle& p, Action a, const DecisionContext& ctx) {
  FundamentalSentiment f{p.self, ctx.semantics.epa_of(a), p.opponent};
  return deflection(f, form_impression(f, ctx.model));
}

}  // namespace

std::size_t budget_for_timeout(int seconds) {
  switch (seconds) {
    case 0: return 0;
    case 1: return 300;
    case 10: return 3000;
    default: throw std::invalid_argument("no planning budget for a " + std::to_string(seconds) + " s limit");
  }
}

AgentConfig AgentConfig::from_shorthand(std::string_view name) {
  AgentConfig c;
  auto fail = [&] { throw std::invalid_argument("unknown agent shorthand '" + std::string(name) + "'"); };
  if (name == "ALLC") {
    c.family = AgentFamily::AllC;
  } else if (name == "ALLD") {
    c.family = AgentFamily::AllD;
  } else if (name == "RANDOM") {
    c.family = AgentFamily::RandomCoin;
  } else if (name == "TFT") {
    c.family = AgentFamily::TitForTatAggregate;
  } else if (name.starts_with("BACT") && name.size() > 6 && name[5] == '@') {
    // Non-standard budget, as rendered by shorthand().
    c = from_shorthand(name.substr(0, 5) == "BACTS" ? "BACTS0" : "BACTD0");
    if (name[4] != 'D' && name[4] != 'S') fail();
    auto budget = parse_int(name.substr(6));
    if (!budget || *budget < 0) fail();
    c.planning_budget = static_cast<std::size_t>(*budget);
  } else if (name.starts_with("BACT") && name.size() > 5) {
    c.family = AgentFamily::BayesActLite;
    if (name[4] == 'D') {
      c.semantics_label = "default";
    } else if (name[4] == 'S') {
      c.semantics_label = "study";
    } else {
      fail();
    }
    auto seconds = parse_int(name.substr(5));
    if (!seconds || (*seconds != 0 && *seconds != 1 && *seconds != 10)) fail();
    c.planning_budget = budget_for_timeout(*seconds);
  } else if (name.starts_with("IM@") && name.size() > 3) {
    c.family = AgentFamily::Imitation;
    auto text = name.substr(3);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), c.q);
    if (ec != std::errc() || ptr != text.data() + text.size() || !(c.q >= 0.0 && c.q <= 1.0)) fail();
  } else if (name.starts_with("IM") && name.size() > 2) {
    c.family = AgentFamily::Imitation;
    auto percent = parse_int(name.substr(2));
    if (!percent || *percent < 0 || *percent > 100) fail();
    c.q = *percent / 100.0;
  } else {
    fail();
  }
  return c;
}

std::string AgentConfig::shorthand() const {
  switch (family) {
    case AgentFamily::AllC: return "ALLC";
    case AgentFamily::AllD: return "ALLD";
    case AgentFamily::RandomCoin: return "RANDOM";
    case AgentFamily::TitForTatAggregate: return "TFT";
    case AgentFamily::Imitation: {
      double percent = q * 100.0;
      if (std::abs(percent - std::round(percent)) < 1e-9) {
        return "IM" + std::to_string(static_cast<int>(std::round(percent)));
      }
      char buf[32];
      auto end = std::to_chars(buf, buf + sizeof buf, q).ptr;
      return "IM@" + std::string(buf, end);
    }
    case AgentFamily::BayesActLite: {
      std::string out = "BACT";
      out += semantics_label == "study" ? 'S' : 'D';
      for (int seconds : {0, 1, 10}) {
        if (budget_for_timeout(seconds) == planning_budget) return out + std::to_string(seconds);
      }
      return out + "@" + std::to_string(planning_budget);
    }
  }
  return "?";
}

void AgentConfig::validate() const {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("q must lie in [0, 1]");
  if (particle_count == 0) throw std::invalid_argument("particle_count must be positive");
  if (!(likelihood_sigma > 0.0)) throw std::invalid_argument("likelihood_sigma must be positive");
  if (!(drift_rate >= 0.0)) throw std::invalid_argument("drift_rate must be non-negative");
  if (rollout_depth < 1) throw std::invalid_argument("rollout_depth must be at least 1");
  if (!(affect_weight >= 0.0)) throw std::invalid_argument("affect_weight must be non-negative");
  ActionSemantics::by_label(semantics_label);
}

BeliefState init_belief(const AgentConfig& config, Rng& rng, double sd) {
  BeliefState state;
  const double self_mixture = uniform01(rng);
  const double opponent_mixture = uniform01(rng);
  const double weight = 1.0 / static_cast<double>(config.particle_count);
  state.particles.reserve(config.particle_count);
  for (std::size_t i = 0; i < config.particle_count; ++i) {
    Epa self = sample_identity(rng, self_mixture, sd);
    Epa opponent = sample_identity(rng, opponent_mixture, sd);
    state.particles.push_back({self, opponent, weight});
  }
  return state;
}

Epa aggregate_opponent_epa(std::span<const Action> neighbor_actions,
                           const ActionSemantics& semantics) {
  if (neighbor_actions.empty()) throw std::invalid_argument("no neighbors to aggregate");
  std::array<double, 3> sum{};
  for (Action a : neighbor_actions) {
    const Epa& x = semantics.epa_of(a);
    for (std::size_t i = 0; i < 3; ++i) sum[i] += x[i];
  }
  const auto n = static_cast<double>(neighbor_actions.size());
  return Epa(sum[0] / n, sum[1] / n, sum[2] / n);
}

double effective_sample_size(const BeliefState& state) {
  double sum_sq = 0.0;
  for (const auto& p : state.particles) sum_sq += p.weight * p.weight;
  return sum_sq > 0.0 ? 1.0 / sum_sq : 0.0;
}

BeliefState update_belief(BeliefState state, const Epa& observed, const ImpressionModel& model,
                          const AgentConfig& config, Rng& rng) {
  auto& particles = state.particles;
  const double denom = 2.0 * config.likelihood_sigma * config.likelihood_sigma;
  double total = 0.0;
  for (auto& p : particles) {
    Epa predicted = optimal_behavior(p.opponent, p.self, model, observed);
    p.weight *= std::exp(-squared_distance(observed, predicted) / denom);
    total += p.weight;
  }
  const double n = static_cast<double>(particles.size());
  if (!(total > 0.0)) {
    ++state.degenerate_updates;
    for (auto& p : particles) p.weight = 1.0 / n;
    return state;
  }
  for (auto& p : particles) p.weight /= total;

  if (effective_sample_size(state) >= n / 2.0) return state;

  // Systematic resampling: one uniform offset, evenly spaced pointers.
  std::vector<Particle> resampled;
  resampled.reserve(particles.size());
  const double step = 1.0 / n;
  double pointer = uniform01(rng) * step;
  double acc = particles.front().weight;
  std::size_t i = 0;
  for (std::size_t k = 0; k < particles.size(); ++k) {
    while (pointer > acc && i + 1 < particles.size()) acc += particles[++i].weight;
    resampled.push_back({particles[i].self, particles[i].opponent, step});
    pointer += step;
  }
  if (config.drift_rate > 0.0) {
    for (auto& p : resampled) {
      p.self = roughen(p.self, config.drift_rate, rng);
      p.opponent = roughen(p.opponent, config.drift_rate, rng);
    }
  }
  particles = std::move(resampled);
  return state;
}

Action plan_action(const BeliefState& state, const std::optional<Epa>& observed,
                   const DecisionContext& ctx, const AgentConfig& config, Rng& rng) {
  const Epa prior = observed.value_or(ctx.semantics.cooperate());
  const auto& particles = state.particles;
  if (config.planning_budget == 0) {
    const Particle& p = particles[sample_by_weight(particles, rng)];
    return nearest_action(optimal_behavior(p.self, p.opponent, ctx.model, prior), ctx.semantics);
  }

  std::vector<ParticleOutlook> outlook(particles.size());
  const double range = static_cast<double>(ctx.matrix.range());
  double value_sum[2] = {0.0, 0.0};
  double prior_sum[2] = {0.0, 0.0};
  std::size_t visits[2] = {0, 0};
  auto slot = [](Action a) { return a == Action::Cooperate ? 0 : 1; };

  for (std::size_t it = 0; it < config.planning_budget; ++it) {
    std::size_t idx = sample_by_weight(particles, rng);
    ParticleOutlook& o = outlook[idx];
    if (!o.ready) {
      const Particle& p = particles[idx];
      o.deflection_cooperate = action_deflection(p, Action::Cooperate, ctx);
      o.deflection_defect = action_deflection(p, Action::Defect, ctx);
      o.opponent =
          nearest_action(optimal_behavior(p.opponent, p.self, ctx.model, prior), ctx.semantics);
      o.ready = true;
    }
    const double p_cooperate = o.prior_cooperate();
    const Action root = uniform01(rng) < p_cooperate ? Action::Cooperate : Action::Defect;
    double value = 0.0;
    Action own = root;
    for (int depth = 0; depth < config.rollout_depth; ++depth) {
      if (depth > 0) own = uniform01(rng) < p_cooperate ? Action::Cooperate : Action::Defect;
      value += static_cast<double>(ctx.matrix.cell(own, o.opponent)) / range -
               config.affect_weight * o.deflection_of(own);
    }
    value_sum[slot(root)] += value;
    prior_sum[slot(root)] += root == Action::Cooperate ? p_cooperate : 1.0 - p_cooperate;
    ++visits[slot(root)];
  }

  if (visits[0] == 0) return Action::Defect;
  if (visits[1] == 0) return Action::Cooperate;
  const double mean_c = value_sum[0] / static_cast<double>(visits[0]);
  const double mean_d = value_sum[1] / static_cast<double>(visits[1]);
  if (mean_c != mean_d) return mean_c > mean_d ? Action::Cooperate : Action::Defect;
  const double prior_c = prior_sum[0] / static_cast<double>(visits[0]);
  const double prior_d = prior_sum[1] / static_cast<double>(visits[1]);
  return prior_d > prior_c ? Action::Defect : Action::Cooperate;
}

Action imitation_choose(const AgentView& view, Action own_last_action, double q, Rng& rng) {
  const auto& neighbors = view.neighbor_summaries;
  const bool random_neighbor = uniform01(rng) < q;
  if (neighbors.empty()) return own_last_action;
  if (random_neighbor) return neighbors[uniform_index(rng, neighbors.size())].last_action;

  Tenths best = view.own_last_payoff;
  for (const auto& n : neighbors) best = std::max(best, n.last_payoff);
  // Candidate 0 is self; candidate i+1 is neighbor i.
  std::vector<Action> tied;
  if (view.own_last_payoff == best) tied.push_back(own_last_action);
  for (const auto& n : neighbors) {
    if (n.last_payoff == best) tied.push_back(n.last_action);
  }
  return tied.size() == 1 ? tied.front() : tied[uniform_index(rng, tied.size())];
}

Agent::Agent(const AgentConfig& config, Rng rng) : config_(config), rng_(rng) {
  config_.validate();
  if (config_.family == AgentFamily::BayesActLite) belief_ = init_belief(config_, rng_);
}

Action Agent::decide(const AgentView& view, const DecisionContext& ctx) {
  std::vector<Action> neighbor_actions;
  neighbor_actions.reserve(view.neighbor_summaries.size());
  for (const auto& n : view.neighbor_summaries) neighbor_actions.push_back(n.last_action);

  Action choice = Action::Cooperate;
  const bool first = view.round_index == 0 || !last_action_;
  switch (config_.family) {
    case AgentFamily::AllC: choice = Action::Cooperate; break;
    case AgentFamily::AllD: choice = Action::Defect; break;
    case AgentFamily::RandomCoin:
      choice = bernoulli(rng_, 0.5) ? Action::Cooperate : Action::Defect;
      break;
    case AgentFamily::TitForTatAggregate: {
      if (first) {
        choice = Action::Cooperate;
      } else if (neighbor_actions.empty()) {
        choice = *last_action_;
      } else {
        auto cooperators = std::count(neighbor_actions.begin(), neighbor_actions.end(),
                                      Action::Cooperate);
        choice = 2 * static_cast<std::size_t>(cooperators) > neighbor_actions.size()
                     ? Action::Cooperate
                     : Action::Defect;
      }
      break;
    }
    case AgentFamily::Imitation:
      choice = first ? (bernoulli(rng_, 0.5) ? Action::Cooperate : Action::Defect)
                     : imitation_choose(view, *last_action_, config_.q, rng_);
      break;
    case AgentFamily::BayesActLite: {
      if (first) {
        AgentConfig reflex = config_;
        reflex.planning_budget = 0;
        choice = plan_action(belief_, std::nullopt, ctx, reflex, rng_);
      } else if (neighbor_actions.empty()) {
        choice = plan_action(belief_, std::nullopt, ctx, config_, rng_);
      } else {
        Epa observed = aggregate_opponent_epa(neighbor_actions, ctx.semantics);
        belief_ = update_belief(std::move(belief_), observed, ctx.model, config_, rng_);
        choice = plan_action(belief_, observed, ctx, config_, rng_);
      }
      break;
    }
  }
  last_action_ = choice;
  belief_.last_action = choice;
  return choice;
}

}  // namespace inpd
