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


#include "inpd/act.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "inpd/impression_model.hpp"

namespace inpd {

Epa::Epa(double e, double p, double a) {
  if (!std::isfinite(e) || !std::isfinite(p) || !std::isfinite(a)) {
    throw std::invalid_argument("EPA components must be finite");
  }
  v_ = {std::clamp(e, -kBound, kBound), std::clamp(p, -kBound, kBound),
        std::clamp(a, -kBound, kBound)};
}

double squared_distance(const Epa& x, const Epa& y) {
  double d0 = x[0] - y[0];
  double d1 = x[1] - y[1];
  double d2 = x[2] - y[2];
  return d0 * d0 + d1 * d1 + d2 * d2;
}

std::array<double, 9> FundamentalSentiment::as_vector() const {
  return {actor.e(),  actor.p(),  actor.a(),  behavior.e(), behavior.p(),
          behavior.a(), object.e(), object.p(), object.a()};
}

ActionSemantics::ActionSemantics(Epa cooperate, Epa defect, std::string label)
    : cooperate_(cooperate), defect_(defect), label_(std::move(label)) {
  if (squared_distance(cooperate_, defect_) <= 0.0) {
    throw std::invalid_argument("cooperate and defect profiles must differ");
  }
}

const ActionSemantics& ActionSemantics::standard() {
  static const ActionSemantics s(Epa(2.1, 1.5, 0.8), Epa(-2.3, -0.5, -0.8), "default");
  return s;
}

const ActionSemantics& ActionSemantics::study() {
  static const ActionSemantics s(Epa(1.4, 0.1, 0.2), Epa(-0.7, 0.9, 0.7), "study");
  return s;
}

const ActionSemantics& ActionSemantics::by_label(const std::string& label) {
  if (label == "default") return standard();
  if (label == "study") return study();
  throw std::invalid_argument("unknown action semantics '" + label + "'");
}

TransientImpression form_impression(const FundamentalSentiment& f, const ImpressionModel& model) {
  return TransientImpression{model.apply(f.as_vector())};
}

double deflection(const FundamentalSentiment& f, const TransientImpression& t) {
  auto fv = f.as_vector();
  double sum = 0.0;
  for (std::size_t i = 0; i < fv.size(); ++i) {
    double d = fv[i] - t.values[i];
    sum += d * d;
  }
  return sum;
}

namespace {

constexpr double kFlatTolerance = 1e-9;
constexpr int kGridHalfSteps = 43;  // 0.1 steps across [-4.3, 4.3]

/// deflection(b) = c0 + 2 g.b + b' H b for a model linear in the behavior.
struct Quadratic {
  double c0 = 0.0;
  std::array<double, 3> g{};
  std::array<std::array<double, 3>, 3> h{};

  double operator()(const std::array<double, 3>& b) const {
    double v = c0;
    for (int i = 0; i < 3; ++i) {
      v += 2.0 * g[i] * b[i];
      for (int j = 0; j < 3; ++j) v += b[i] * h[i][j] * b[j];
    }
    return v;
  }

  bool flat() const {
    double bound = 0.0;
    for (int i = 0; i < 3; ++i) {
      bound += 2.0 * Epa::kBound * std::abs(g[i]);
      for (int j = 0; j < 3; ++j) bound += Epa::kBound * Epa::kBound * std::abs(h[i][j]);
    }
    return bound < kFlatTolerance;
  }

  bool singular() const {
    double det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                 h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                 h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    double scale = (h[0][0] + h[1][1] + h[2][2]) / 3.0;
    return !(det > 1e-12 * scale * scale * scale);
  }
};

Quadratic behavior_quadratic(const Epa& actor, const Epa& object, const ImpressionModel& model) {
  BehaviorAffine lin = model.linearize_in_behavior(actor, object);
  const std::array<double, 9> fixed{actor.e(), actor.p(), actor.a(), 0.0, 0.0, 0.0,
                                    object.e(), object.p(), object.a()};
  Quadratic q;
  for (std::size_t i = 0; i < 9; ++i) {
    // residual_i(b) = r0 + sum_j jac[j] * b_j
    double r0 = fixed[i] - lin.offset[i];
    std::array<double, 3> jac{};
    for (int j = 0; j < 3; ++j) {
      jac[j] = (static_cast<int>(i) == 3 + j ? 1.0 : 0.0) - lin.slope[i][j];
    }
    q.c0 += r0 * r0;
    for (int j = 0; j < 3; ++j) {
      q.g[j] += jac[j] * r0;
      for (int k = 0; k < 3; ++k) q.h[j][k] += jac[j] * jac[k];
    }
  }
  return q;
}

// Solves H_FF x_F = rhs_F for the free coordinates by Gaussian elimination.
// Returns false if the reduced system is numerically singular.
bool solve_reduced(const Quadratic& q, const std::array<int, 3>& state, std::array<double, 3>& b) {
  int free_idx[3];
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    if (state[i] == 0) {
      free_idx[n++] = i;
    } else {
      b[i] = state[i] < 0 ? -Epa::kBound : Epa::kBound;
    }
  }
  double a[3][4] = {};
  for (int r = 0; r < n; ++r) {
    int i = free_idx[r];
    double rhs = -q.g[i];
    for (int k = 0; k < 3; ++k) {
      if (state[k] != 0) rhs -= q.h[i][k] * b[k];
    }
    for (int c = 0; c < n; ++c) a[r][c] = q.h[i][free_idx[c]];
    a[r][n] = rhs;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-14) return false;
    if (pivot != col) {
      for (int c = 0; c <= n; ++c) std::swap(a[col][c], a[pivot][c]);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double factor = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  for (int r = 0; r < n; ++r) b[free_idx[r]] = a[r][n] / a[r][r];
  return true;
}

bool inside_box(const std::array<double, 3>& b) {
  for (double x : b) {
    if (x < -Epa::kBound || x > Epa::kBound) return false;
  }
  return true;
}

// Exact minimizer of a strictly convex quadratic over the clamp box: the
// optimum is the unconstrained minimizer of the restriction to one of the 27
// faces, so enumerate them and keep the best feasible candidate.
std::array<double, 3> box_minimum(const Quadratic& q) {
  std::array<double, 3> best{};
  if (solve_reduced(q, {0, 0, 0}, best) && inside_box(best)) return best;
  double best_value = std::numeric_limits<double>::infinity();
  for (int code = 0; code < 27; ++code) {
    std::array<int, 3> state{code % 3 - 1, (code / 3) % 3 - 1, code / 9 - 1};
    if (state == std::array<int, 3>{0, 0, 0}) continue;
    std::array<double, 3> b{};
    if (!solve_reduced(q, state, b) || !inside_box(b)) continue;
    double v = q(b);
    if (v < best_value) {
      best_value = v;
      best = b;
    }
  }
  return best;
}

template <typename Objective>
std::array<double, 3> grid_minimum(Objective&& objective, double& spread) {
  std::array<double, 3> best{};
  double best_value = std::numeric_limits<double>::infinity();
  double worst_value = -std::numeric_limits<double>::infinity();
  for (int i = -kGridHalfSteps; i <= kGridHalfSteps; ++i) {
    for (int j = -kGridHalfSteps; j <= kGridHalfSteps; ++j) {
      for (int k = -kGridHalfSteps; k <= kGridHalfSteps; ++k) {
        std::array<double, 3> b{i / 10.0, j / 10.0, k / 10.0};
        double v = objective(b);
        if (v < best_value) {
          best_value = v;
          best = b;
        }
        worst_value = std::max(worst_value, v);
      }
    }
  }
  spread = worst_value - best_value;
  return best;
}

}  // namespace

Epa optimal_behavior(const Epa& actor, const Epa& object, const ImpressionModel& model,
                     const Epa& prior) {
  if (model.has_behavior_quadratic()) {
    double spread = 0.0;
    auto b = grid_minimum(
        [&](const std::array<double, 3>& x) {
          FundamentalSentiment f{actor, Epa(x), object};
          return deflection(f, form_impression(f, model));
        },
        spread);
    return spread < kFlatTolerance ? prior : Epa(b);
  }
  Quadratic q = behavior_quadratic(actor, object, model);
  if (q.flat()) return prior;
  if (q.singular()) {
    double spread = 0.0;
    return Epa(grid_minimum(q, spread));
  }
  return Epa(box_minimum(q));
}

Action nearest_action(const Epa& b, const ActionSemantics& semantics) {
  return squared_distance(b, semantics.defect()) < squared_distance(b, semantics.cooperate())
             ? Action::Defect
             : Action::Cooperate;
}

}  // namespace inpd
