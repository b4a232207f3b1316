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


// Randomized invariants, 1000 cases each unless noted.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "inpd/act.hpp"
#include "inpd/agents.hpp"
#include "inpd/engine.hpp"
#include "inpd/network.hpp"
#include "inpd/stats.hpp"
#include "oracles.hpp"

namespace inpd {
namespace {

constexpr int kCases = 1000;

const ImpressionModel& default_model() {
  static const ImpressionModel m = builtin_impression_model("default");
  return m;
}

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

Epa random_epa(Rng& rng, double bound = 4.3) {
  return Epa(uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound));
}

// Multiples of 1/8 in [-2, 2]: sums and squares stay exact in binary.
double dyadic(Rng& rng) { return static_cast<double>(uniform_index(rng, 33)) / 8.0 - 2.0; }

Graph random_graph(Rng& rng) {
  if (bernoulli(rng, 0.5)) {
    const std::size_t n = 1 + uniform_index(rng, 60);
    const std::size_t max_m = n * (n - 1) / 2;
    return erdos_renyi(n, max_m == 0 ? 0 : uniform_index(rng, max_m + 1), rng);
  }
  const int rows = 3 + static_cast<int>(uniform_index(rng, 8));
  const int cols = 3 + static_cast<int>(uniform_index(rng, 8));
  return grid(rows, cols, bernoulli(rng, 0.5) ? Neighborhood::Four : Neighborhood::Eight, bernoulli(rng, 0.5));
}

TEST(Property, GraphsAreSymmetricSimpleAndSorted) {
  Rng rng(101);
  for (int c = 0; c < kCases; ++c) {
    Graph g = random_graph(rng);
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < g.size(); ++v) {
      auto n = g.neighbors(v);
      degree_sum += n.size();
      ASSERT_TRUE(std::is_sorted(n.begin(), n.end()));
      ASSERT_EQ(std::adjacent_find(n.begin(), n.end()), n.end());
      for (NodeId u : n) {
        ASSERT_NE(u, v);
        auto back = g.neighbors(u);
        ASSERT_TRUE(std::binary_search(back.begin(), back.end(), v));
      }
    }
    ASSERT_EQ(degree_sum, 2 * g.edge_count());
  }
}

TEST(Property, WrappedGridsAreRegular) {
  Rng rng(102);
  for (int c = 0; c < kCases; ++c) {
    const int rows = 3 + static_cast<int>(uniform_index(rng, 10));
    const int cols = 3 + static_cast<int>(uniform_index(rng, 10));
    const bool eight = bernoulli(rng, 0.5);
    Graph g = grid(rows, cols, eight ? Neighborhood::Eight : Neighborhood::Four, true);
    auto s = degree_stats(g);
    ASSERT_EQ(s.min, s.max);
    // Small tori fold distinct offsets onto the same neighbor.
    if (rows >= 4 && cols >= 4) ASSERT_EQ(s.min, eight ? 8u : 4u);
  }
}

TEST(Property, ErdosRenyiExactEdgeCount) {
  Rng rng(103);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 2 + uniform_index(rng, 100);
    const std::size_t m = uniform_index(rng, n * (n - 1) / 2 + 1);
    const std::uint64_t seed = rng();
    Rng a(seed), b(seed);
    auto g = erdos_renyi(n, m, a);
    ASSERT_EQ(g.edge_count(), m);
    ASSERT_EQ(g.edges(), erdos_renyi(n, m, b).edges());
  }
}

TEST(Property, BeliefWeightsStayNormalized) {
  Rng rng(104);
  for (int c = 0; c < kCases; ++c) {
    AgentConfig config = AgentConfig::from_shorthand("BACTD0");
    config.particle_count = 2 + uniform_index(rng, 40);
    config.likelihood_sigma = uniform(rng, 0.05, 3.0);
    config.drift_rate = uniform(rng, 0.0, 0.5);
    auto state = init_belief(config, rng);
    state = update_belief(std::move(state), random_epa(rng), default_model(), config, rng);
    double total = 0.0;
    for (const auto& p : state.particles) {
      ASSERT_GE(p.weight, 0.0);
      total += p.weight;
    }
    ASSERT_EQ(state.particles.size(), config.particle_count);
    ASSERT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(Property, PairPayoffsAreGameCells) {
  Rng rng(105);
  const RewardMatrix matrices[] = {RewardMatrix::m1(), RewardMatrix::m2(), RewardMatrix::m3()};
  for (int c = 0; c < kCases; ++c) {
    Graph g = random_graph(rng);
    const auto& m = matrices[uniform_index(rng, 3)];
    std::vector<Action> actions(g.size());
    for (auto& a : actions) a = bernoulli(rng, 0.5) ? Action::Cooperate : Action::Defect;
    auto payoffs = score_round(actions, g, m);
    Tenths edge_total = 0;
    for (auto [u, v] : g.edges()) {
      const Tenths pu = m.cell(actions[u], actions[v]);
      const Tenths pv = m.cell(actions[v], actions[u]);
      const bool legal = (pu == m.r() && pv == m.r()) || (pu == m.s() && pv == m.t()) ||
                         (pu == m.t() && pv == m.s()) || (pu == m.p() && pv == m.p());
      ASSERT_TRUE(legal);
      edge_total += pu + pv;
    }
    ASSERT_EQ(std::accumulate(payoffs.begin(), payoffs.end(), Tenths{0}), edge_total);
  }
}

TEST(Property, NearestActionIsTranslationInvariant) {
  Rng rng(106);
  for (int c = 0; c < kCases; ++c) {
    const Epa coop(dyadic(rng), dyadic(rng), dyadic(rng));
    Epa defect(dyadic(rng), dyadic(rng), dyadic(rng));
    if (defect == coop) defect = Epa(coop.e() + 0.125, coop.p(), coop.a());
    const Epa b(dyadic(rng), dyadic(rng), dyadic(rng));
    const Epa o(dyadic(rng), dyadic(rng), dyadic(rng));
    auto shift = [&](const Epa& x) { return Epa(x.e() + o.e(), x.p() + o.p(), x.a() + o.a()); };
    ActionSemantics base(coop, defect, "a");
    ActionSemantics moved(shift(coop), shift(defect), "b");
    ASSERT_EQ(nearest_action(b, base), nearest_action(shift(b), moved));
  }
}

TEST(Property, GTestColumnPermutationAndScaling) {
  Rng rng(107);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t k = 2 + uniform_index(rng, 5);
    std::vector<double> coop(k), defect(k);
    for (std::size_t j = 0; j < k; ++j) {
      coop[j] = static_cast<double>(uniform_index(rng, 200));
      defect[j] = static_cast<double>(1 + uniform_index(rng, 200));
    }
    if (std::accumulate(coop.begin(), coop.end(), 0.0) == 0.0) coop[0] = 1;
    auto base = g_test(Contingency(coop, defect));
    ASSERT_GE(base.g, 0.0);

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t j = k - 1; j > 0; --j) std::swap(order[j], order[uniform_index(rng, j + 1)]);
    std::vector<double> pc(k), pd(k);
    for (std::size_t j = 0; j < k; ++j) {
      pc[j] = coop[order[j]];
      pd[j] = defect[order[j]];
    }
    auto permuted = g_test(Contingency(pc, pd));
    ASSERT_NEAR(permuted.g, base.g, 1e-9 * std::max(1.0, base.g));

    const double scale = static_cast<double>(2 + uniform_index(rng, 5));
    for (auto& x : pc) x *= scale;
    for (auto& x : pd) x *= scale;
    auto scaled = g_test(Contingency(pc, pd));
    ASSERT_NEAR(scaled.g, scale * base.g, 1e-8 * std::max(1.0, scale * base.g));
    ASSERT_LE(scaled.p, base.p + 1e-12);
  }
}

TEST(Property, DeflectionSymmetries) {
  Rng rng(108);
  for (int c = 0; c < kCases; ++c) {
    FundamentalSentiment f{random_epa(rng), random_epa(rng), random_epa(rng)};
    ASSERT_EQ(deflection(f, form_impression(f, ImpressionModel::identity())), 0.0);
    TransientImpression t;
    for (auto& v : t.values) v = uniform(rng, -6, 6);
    // Swapping actor and object in both arguments permutes the components.
    FundamentalSentiment swapped{f.object, f.behavior, f.actor};
    TransientImpression ts;
    for (std::size_t i = 0; i < 3; ++i) {
      ts.values[i] = t.values[6 + i];
      ts.values[3 + i] = t.values[3 + i];
      ts.values[6 + i] = t.values[i];
    }
    ASSERT_NEAR(deflection(f, t), deflection(swapped, ts), 1e-12);
    ASSERT_GE(deflection(f, t), 0.0);
  }
}

TEST(Property, OptimalBehaviorStaysInBox) {
  Rng rng(109);
  for (int c = 0; c < kCases; ++c) {
    auto b = optimal_behavior(random_epa(rng), random_epa(rng), default_model(), random_epa(rng));
    for (std::size_t i = 0; i < 3; ++i) {
      ASSERT_LE(std::fabs(b[i]), Epa::kBound);
      ASSERT_TRUE(std::isfinite(b[i]));
    }
  }
}

TEST(Property, OptimalBehaviorMatchesGridSearch) {
  Rng rng(110);
  for (int c = 0; c < 100; ++c) {
    const Epa actor = random_epa(rng), object = random_epa(rng);
    auto b = optimal_behavior(actor, object, default_model(), Epa{});
    auto grid = oracle::grid_argmin(default_model(), actor.values(), object.values());
    for (std::size_t i = 0; i < 3; ++i) ASSERT_NEAR(b[i], grid[i], 0.05) << "case " << c;
  }
}

TEST(Property, PearsonAffineInvariance) {
  Rng rng(111);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = 3 + uniform_index(rng, 40);
    std::vector<double> x(n), y(n), xs(n);
    const double a = uniform(rng, 0.1, 10), shift = uniform(rng, -50, 50);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = normal(rng, 0, 1);
      y[i] = normal(rng, 0, 1) + 0.5 * x[i];
      xs[i] = a * x[i] + shift;
    }
    ASSERT_NEAR(pearson(x, y).r, pearson(xs, y).r, 1e-9);
  }
}

TEST(Property, ImitationNeverOriginatesActions) {
  Rng rng(112);
  for (int c = 0; c < kCases; ++c) {
    AgentView v;
    v.round_index = 1;
    v.own_last_payoff = static_cast<Tenths>(uniform_index(rng, 50));
    std::set<Action> seen;
    const Action own = bernoulli(rng, 0.5) ? Action::Cooperate : Action::Defect;
    seen.insert(own);
    const std::size_t degree = uniform_index(rng, 9);
    for (std::size_t i = 0; i < degree; ++i) {
      NeighborSummary s{bernoulli(rng, 0.3) ? Action::Cooperate : Action::Defect,
                        static_cast<Tenths>(uniform_index(rng, 50))};
      seen.insert(s.last_action);
      v.neighbor_summaries.push_back(s);
    }
    ASSERT_TRUE(seen.contains(imitation_choose(v, own, uniform01(rng), rng)));
  }
}

TEST(Property, ChiSquareTwoDegreesClosedForm) {
  for (int i = 0; i <= 1000; ++i) {
    const double x = i * 0.1;
    ASSERT_NEAR(chi2_sf(x, 2), std::exp(-x / 2), 1e-12);
  }
}

}  // namespace
}  // namespace inpd
