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


#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "inpd/agents.hpp"
#include "inpd/stats.hpp"
#include "oracles.hpp"

namespace inpd {
namespace {

using oracle::Big;

const ImpressionModel& default_model() {
  static const ImpressionModel m = builtin_impression_model("default");
  return m;
}

BeliefState point_belief(const Epa& self, const Epa& opponent, std::size_t n = 300) {
  BeliefState s;
  for (std::size_t i = 0; i < n; ++i) s.particles.push_back({self, opponent, 1.0 / static_cast<double>(n)});
  return s;
}

AgentView view_with(Tenths own, std::vector<NeighborSummary> neighbors, int round = 1) {
  AgentView v;
  v.own_last_payoff = own;
  v.neighbor_summaries = std::move(neighbors);
  v.round_index = round;
  return v;
}

TEST(AgentConfig, ShorthandRoundTrips) {
  for (const char* name : {"BACTD0", "BACTD1", "BACTD10", "BACTS0", "BACTS1", "BACTS10", "IM0", "IM50",
                           "IM100", "ALLC", "ALLD", "RANDOM", "TFT", "BACTD@42", "BACTS@7", "IM@0.125"}) {
    EXPECT_EQ(AgentConfig::from_shorthand(name).shorthand(), name);
  }
}

TEST(AgentConfig, ShorthandFields) {
  auto d = AgentConfig::from_shorthand("BACTD1");
  EXPECT_EQ(d.family, AgentFamily::BayesActLite);
  EXPECT_EQ(d.semantics_label, "default");
  EXPECT_EQ(d.planning_budget, 300u);
  auto s = AgentConfig::from_shorthand("BACTS10");
  EXPECT_EQ(s.semantics_label, "study");
  EXPECT_EQ(s.planning_budget, 3000u);
  auto im = AgentConfig::from_shorthand("IM70");
  EXPECT_EQ(im.family, AgentFamily::Imitation);
  EXPECT_DOUBLE_EQ(im.q, 0.7);
}

TEST(AgentConfig, Defaults) {
  AgentConfig c = AgentConfig::from_shorthand("BACTD0");
  EXPECT_EQ(c.particle_count, 300u);
  EXPECT_EQ(c.likelihood_sigma, 1.0);
  EXPECT_EQ(c.drift_rate, 0.05);
  EXPECT_EQ(c.rollout_depth, 3);
}

TEST(AgentConfig, RejectsUnknownShorthand) {
  for (const char* name : {"BACTX0", "BACTD2", "IM101", "IM", "IM-5", "bactd0", "", "IM@1.5"}) {
    EXPECT_THROW(AgentConfig::from_shorthand(name), std::invalid_argument) << name;
  }
}

TEST(AgentConfig, ValidateRanges) {
  AgentConfig c;
  c.q = 1.5;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.particle_count = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.likelihood_sigma = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.drift_rate = -0.1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.semantics_label = "other";
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(InitBelief, UniformWeights) {
  Rng rng(1);
  auto s = init_belief(AgentConfig::from_shorthand("BACTD0"), rng);
  ASSERT_EQ(s.particles.size(), 300u);
  for (const auto& p : s.particles) EXPECT_DOUBLE_EQ(p.weight, 1.0 / 300.0);
}

TEST(InitBelief, CloudMeanBetweenScroogeAndFriend) {
  Rng rng(2);
  auto s = init_belief(AgentConfig::from_shorthand("BACTD0"), rng);
  std::array<double, 3> self{}, opp{};
  for (const auto& p : s.particles) {
    for (std::size_t i = 0; i < 3; ++i) {
      self[i] += p.self[i] / 300.0;
      opp[i] += p.opponent[i] / 300.0;
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const double lo = std::min(identities::kScrooge[i], identities::kFriend[i]) - 1.5;
    const double hi = std::max(identities::kScrooge[i], identities::kFriend[i]) + 1.5;
    EXPECT_GE(self[i], lo);
    EXPECT_LE(self[i], hi);
    EXPECT_GE(opp[i], lo);
    EXPECT_LE(opp[i], hi);
  }
}

TEST(InitBelief, SameSeedSameParticles) {
  Rng a(7), b(7);
  auto config = AgentConfig::from_shorthand("BACTD0");
  auto x = init_belief(config, a);
  auto y = init_belief(config, b);
  ASSERT_EQ(x.particles.size(), y.particles.size());
  for (std::size_t i = 0; i < x.particles.size(); ++i) {
    EXPECT_EQ(x.particles[i].self, y.particles[i].self);
    EXPECT_EQ(x.particles[i].opponent, y.particles[i].opponent);
  }
}

TEST(AggregateOpponent, IdenticalActions) {
  std::vector<Action> a{Action::Cooperate, Action::Cooperate};
  EXPECT_EQ(aggregate_opponent_epa(a, ActionSemantics::standard()), Epa(2.1, 1.5, 0.8));
}

TEST(AggregateOpponent, Midpoint) {
  std::vector<Action> a{Action::Cooperate, Action::Defect};
  auto m = aggregate_opponent_epa(a, ActionSemantics::standard());
  EXPECT_NEAR(m.e(), -0.1, 1e-12);
  EXPECT_NEAR(m.p(), 0.5, 1e-12);
  EXPECT_NEAR(m.a(), 0.0, 1e-12);
}

TEST(AggregateOpponent, SixOfEight) {
  std::vector<Action> a(8, Action::Cooperate);
  a[2] = a[5] = Action::Defect;
  auto m = aggregate_opponent_epa(a, ActionSemantics::standard());
  EXPECT_NEAR(m.e(), 1.0, 1e-12);
  EXPECT_NEAR(m.p(), 1.0, 1e-12);
  EXPECT_NEAR(m.a(), 0.4, 1e-12);
}

TEST(AggregateOpponent, EmptyIsError) {
  EXPECT_THROW(aggregate_opponent_epa({}, ActionSemantics::standard()), std::invalid_argument);
}

TEST(UpdateBelief, EquidistantPredictionsKeepEqualWeights) {
  BeliefState s;
  s.particles = {{identities::kFriend, identities::kScrooge, 0.5},
                 {identities::kScrooge, identities::kFriend, 0.5}};
  Rng rng(3);
  auto config = AgentConfig::from_shorthand("BACTD0");
  // Under the identity model every prediction equals the observation.
  auto out = update_belief(s, Epa(1, 1, 1), ImpressionModel::identity(), config, rng);
  EXPECT_DOUBLE_EQ(out.particles[0].weight, 0.5);
  EXPECT_DOUBLE_EQ(out.particles[1].weight, 0.5);
}

TEST(UpdateBelief, SharpLikelihoodSelectsMatchingParticle) {
  const Epa observed = optimal_behavior(identities::kFriend, identities::kFriend, default_model(),
                                        ActionSemantics::standard().cooperate());
  BeliefState s;
  s.particles = {{identities::kScrooge, identities::kScrooge, 0.5},
                 {identities::kFriend, identities::kFriend, 0.5}};
  auto config = AgentConfig::from_shorthand("BACTD0");
  config.likelihood_sigma = 1e-3;
  config.drift_rate = 0.0;
  Rng rng(4);
  auto out = update_belief(s, observed, default_model(), config, rng);
  // ESS is exactly N/2 here, so no resampling: the mismatched particle keeps zero weight.
  ASSERT_EQ(out.particles.size(), 2u);
  EXPECT_EQ(out.particles[0].weight, 0.0);
  EXPECT_EQ(out.particles[1].weight, 1.0);
  EXPECT_EQ(out.particles[1].self, identities::kFriend);
  EXPECT_EQ(out.degenerate_updates, 0u);
}

TEST(UpdateBelief, WeightsMatchHighPrecisionReweighting) {
  auto config = AgentConfig::from_shorthand("BACTD0");
  config.likelihood_sigma = 6.0;  // keeps the effective sample size above N/2
  Rng rng(5);
  auto prior = init_belief(config, rng);
  const Epa observed(0.4, 0.9, -0.3);
  auto out = update_belief(prior, observed, default_model(), config, rng);
  ASSERT_GE(effective_sample_size(out), 150.0);

  using boost::multiprecision::exp;
  std::vector<Big> w;
  Big total = 0;
  for (const auto& p : prior.particles) {
    auto b = optimal_behavior(p.opponent, p.self, default_model(), observed);
    Big d2 = 0;
    for (std::size_t i = 0; i < 3; ++i) d2 += (Big(observed[i]) - b[i]) * (Big(observed[i]) - b[i]);
    w.push_back(Big(p.weight) * exp(-d2 / (2 * Big(config.likelihood_sigma) * config.likelihood_sigma)));
    total += w.back();
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    EXPECT_NEAR(out.particles[i].weight, static_cast<double>(w[i] / total), 1e-9);
  }
}

TEST(UpdateBelief, UnderflowResetsToUniform) {
  auto config = AgentConfig::from_shorthand("BACTD0");
  config.likelihood_sigma = 1e-300;
  auto s = point_belief(identities::kScrooge, identities::kScrooge, 10);
  Rng rng(6);
  auto out = update_belief(s, Epa(4, 4, 4), default_model(), config, rng);
  EXPECT_EQ(out.degenerate_updates, 1u);
  for (const auto& p : out.particles) EXPECT_DOUBLE_EQ(p.weight, 0.1);
}

TEST(UpdateBelief, ResamplingKeepsCountAndNormalization) {
  auto config = AgentConfig::from_shorthand("BACTD0");
  config.likelihood_sigma = 0.3;
  Rng rng(7);
  auto s = init_belief(config, rng);
  for (int r = 0; r < 5; ++r) {
    s = update_belief(std::move(s), ActionSemantics::standard().defect(), default_model(), config, rng);
    double total = 0.0;
    for (const auto& p : s.particles) total += p.weight;
    EXPECT_EQ(s.particles.size(), 300u);
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

DecisionContext context(const RewardMatrix& m) {
  return {default_model(), ActionSemantics::standard(), m};
}

TEST(PlanAction, BudgetZeroFriendsCooperate) {
  auto m = RewardMatrix::m1();
  Rng rng(8);
  EXPECT_EQ(plan_action(point_belief(identities::kFriend, identities::kFriend), std::nullopt, context(m),
                        AgentConfig::from_shorthand("BACTD0"), rng),
            Action::Cooperate);
}

TEST(PlanAction, BudgetZeroScroogesDefect) {
  auto m = RewardMatrix::m1();
  Rng rng(9);
  EXPECT_EQ(plan_action(point_belief(identities::kScrooge, identities::kScrooge), std::nullopt, context(m),
                        AgentConfig::from_shorthand("BACTD0"), rng),
            Action::Defect);
}

TEST(PlanAction, BudgetZeroIsDeterministicGivenSeed) {
  auto m = RewardMatrix::m1();
  auto config = AgentConfig::from_shorthand("BACTD0");
  Rng init(10);
  auto belief = init_belief(config, init);
  const Epa observed(0.2, 0.5, 0.1);
  for (int seed = 0; seed < 20; ++seed) {
    Rng a(seed), b(seed);
    EXPECT_EQ(plan_action(belief, observed, context(m), config, a),
              plan_action(belief, observed, context(m), config, b));
  }
}

TEST(PlanAction, LongSearchFriendsCooperateUnderSmallTemptation) {
  auto m = RewardMatrix::m3();
  auto config = AgentConfig::from_shorthand("BACTD10");
  auto belief = point_belief(identities::kFriend, identities::kFriend);
  int cooperate = 0;
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(1000 + seed);
    cooperate += plan_action(belief, ActionSemantics::standard().cooperate(), context(m), config, rng) ==
                 Action::Cooperate;
  }
  EXPECT_GE(cooperate, 95);
}

TEST(Imitation, BestScorerIsCopied) {
  Rng rng(11);
  auto v = view_with(5, {{Action::Defect, 8}});
  EXPECT_EQ(imitation_choose(v, Action::Cooperate, 0.0, rng), Action::Defect);
}

TEST(Imitation, RandomNeighborFrequencies) {
  std::vector<NeighborSummary> n{{Action::Cooperate, 1}, {Action::Defect, 9}, {Action::Defect, 3},
                                 {Action::Cooperate, 4}, {Action::Defect, 0}};
  auto v = view_with(100, n);
  Rng rng(12);
  double c = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) c += imitation_choose(v, Action::Cooperate, 1.0, rng) == Action::Cooperate;
  const double expected_c = trials * 0.4, expected_d = trials * 0.6;
  const double chi2 = (c - expected_c) * (c - expected_c) / expected_c +
                      (trials - c - expected_d) * (trials - c - expected_d) / expected_d;
  EXPECT_GT(oracle::chi2_tail(chi2, 1), 0.01);
}

TEST(Imitation, TiesSplitEvenly) {
  auto v = view_with(7, {{Action::Defect, 7}});
  Rng rng(13);
  int c = 0;
  for (int i = 0; i < 10000; ++i) c += imitation_choose(v, Action::Cooperate, 0.0, rng) == Action::Cooperate;
  EXPECT_NEAR(c / 10000.0, 0.5, 0.02);
}

TEST(Baselines, ConstantAgents) {
  auto m = RewardMatrix::m1();
  Agent c(AgentConfig::from_shorthand("ALLC"), Rng(1));
  Agent d(AgentConfig::from_shorthand("ALLD"), Rng(1));
  for (int r = 0; r < 10; ++r) {
    auto v = view_with(0, {{Action::Defect, 0}}, r);
    EXPECT_EQ(c.decide(v, context(m)), Action::Cooperate);
    EXPECT_EQ(d.decide(v, context(m)), Action::Defect);
  }
}

TEST(Baselines, RandomCoinIsFair) {
  auto m = RewardMatrix::m1();
  Agent a(AgentConfig::from_shorthand("RANDOM"), Rng(14));
  int c = 0;
  for (int r = 0; r < 10000; ++r) c += a.decide(view_with(0, {}, r), context(m)) == Action::Cooperate;
  EXPECT_NEAR(c / 10000.0, 0.5, 0.02);
}

TEST(Baselines, TitForTatFollowsStrictMajority) {
  auto m = RewardMatrix::m1();
  Agent a(AgentConfig::from_shorthand("TFT"), Rng(15));
  EXPECT_EQ(a.decide(view_with(0, {{Action::Defect, 0}}, 0), context(m)), Action::Cooperate);
  EXPECT_EQ(a.decide(view_with(0, {{Action::Defect, 0}, {Action::Cooperate, 0}}, 1), context(m)),
            Action::Defect);
  EXPECT_EQ(a.decide(view_with(0, {{Action::Cooperate, 0}, {Action::Cooperate, 0}, {Action::Defect, 0}}, 2),
                     context(m)),
            Action::Cooperate);
}

TEST(Agent, BayesActStartsWithBelief) {
  Agent a(AgentConfig::from_shorthand("BACTD0"), Rng(16));
  EXPECT_EQ(a.belief().particles.size(), 300u);
  Agent b(AgentConfig::from_shorthand("IM50"), Rng(16));
  EXPECT_TRUE(b.belief().particles.empty());
}

}  // namespace
}  // namespace inpd
