// Copyright 2026 The pmkit Authors. All rights reserved.
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

#include "pmkit/nw2.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pmkit/envs.hpp"
#include "pmkit/error.hpp"
#include "pmkit/random.hpp"

namespace pmkit {
namespace {

constexpr double kTol = 1e-12;

struct Fixture {
  Game game;
  GameAnalysis analysis;
  explicit Fixture(Game g) : game(std::move(g)), analysis(analyze(game)) {}
};

NW2Config with_gamma(double gamma) {
  NW2Config c;
  c.gamma = gamma;
  return c;
}

TEST(NW2Init, Exhibit4Sets) {
  const Fixture f(fixture("exhibit4"));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  EXPECT_EQ(p.playable(), (std::vector<Action>{0, 1, 2, 3}));
  EXPECT_EQ(p.a_set(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(p.d_set(), (std::vector<std::size_t>{3}));
  ASSERT_EQ(p.steps().size(), 1u);
  EXPECT_EQ(p.steps()[0].d, 3u);
  EXPECT_EQ(p.steps()[0].a, 1u);
  EXPECT_EQ(p.steps()[0].b, 2u);
  EXPECT_EQ(p.steps()[0].alpha, Rational(1, 2));
}

TEST(NW2Init, SpamSets) {
  const Fixture f(fixture("spam", Rational(1, 3)));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  EXPECT_EQ(p.playable(), (std::vector<Action>{0, 1, 2}));
  EXPECT_EQ(p.a_set(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(p.d_set().empty());
  EXPECT_EQ(p.local_neighbors(0), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(p.local_neighbors(2), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(NW2Init, RefusesHardAndHopeless) {
  const Fixture hard(fixture("spam", Rational(3, 5)));
  try {
    NW2Policy p(hard.game, hard.analysis, with_gamma(0.1));
    FAIL() << "expected a refusal";
  } catch (const RefusalError& e) {
    EXPECT_NE(std::string(e.what()).find("not locally observable"), std::string::npos);
    EXPECT_EQ(e.witness(), "(1,2)");
  }
  const Fixture hopeless(fixture("hopeless2x2"));
  EXPECT_THROW(NW2Policy(hopeless.game, hopeless.analysis, with_gamma(0.1)), RefusalError);
}

TEST(NW2Init, TrivialGamePlaysOptimalAction) {
  const Fixture f(fixture("spam", Rational(0)));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  EXPECT_TRUE(p.trivial());
  for (int t = 0; t < 5; ++t) {
    EXPECT_EQ(p.distribution(), (std::vector<double>{0, 0, 1}));
    p.update(2, 0);
  }
}

TEST(NW2Init, ParameterResolution) {
  const Fixture f(fixture("spam", Rational(1, 3)));
  NW2Config c;
  c.horizon = 1000;
  NW2Policy p(f.game, f.analysis, c);
  const double eta = 2.0 * std::sqrt(std::log(3 / 0.05) / 3000.0);
  EXPECT_NEAR(p.v(), 0.5, kTol);
  EXPECT_NEAR(p.eta(), eta, kTol);
  EXPECT_NEAR(p.gamma(), 1.5 * eta, kTol);

  NW2Config only_eta;
  only_eta.eta = 0.01;
  NW2Policy q(f.game, f.analysis, only_eta);
  EXPECT_NEAR(q.gamma(), 0.015, kTol);

  NW2Config none;
  EXPECT_THROW(NW2Policy(f.game, f.analysis, none), PreconditionError);
  NW2Config bad = with_gamma(0.7);
  EXPECT_THROW(NW2Policy(f.game, f.analysis, bad), PreconditionError);
}

TEST(NW2Init, GammaCapAtOneHalf) {
  // flower(5): V = 4, K = 2; a short horizon pushes V K eta past 1/2.
  const Fixture f(fixture("flower", Rational(5)));
  NW2Config c;
  c.horizon = 10;
  NW2Policy p(f.game, f.analysis, c);
  EXPECT_DOUBLE_EQ(p.gamma(), 0.5);
  EXPECT_NEAR(p.eta(), 0.5 / 8.0, kTol);
}

TEST(NW2Q, SpamRoundOne) {
  const Fixture f(fixture("spam", Rational(1, 3)));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  const Eigen::MatrixXd& q = p.q_matrix();
  const double expect[3][3] = {{0.5, 0, 0.5}, {0, 0.5, 0.5}, {1.0 / 3, 1.0 / 3, 1.0 / 3}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(q(r, c), expect[r][c], kTol);
  }
}

TEST(NW2Q, Exhibit4DegenerateRowIsUniformOverA) {
  const Fixture f(fixture("exhibit4"));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  const Eigen::MatrixXd& q = p.q_matrix();
  for (int c = 0; c < 3; ++c) EXPECT_NEAR(q(3, c), 1.0 / 3, kTol);
  EXPECT_EQ(q(3, 3), 0.0);
}

TEST(NW2Q, SoftmaxAfterUpdate) {
  const Fixture f(fixture("spam", Rational(1, 3)));
  NW2Config c;
  c.eta = 0.1;
  NW2Policy p(f.game, f.analysis, c);
  p.set_cumulative(0, 2, 2.0);
  const Eigen::MatrixXd& q = p.q_matrix();
  const double z = 1.0 + std::exp(-0.2);
  EXPECT_NEAR(q(0, 0), 1.0 / z, kTol);
  EXPECT_NEAR(q(0, 0), 0.549834, 1e-6);
  EXPECT_EQ(q(0, 1), 0.0);
  EXPECT_NEAR(q(0, 2), std::exp(-0.2) / z, kTol);
}

TEST(NW2Q, StableForHugeEstimates) {
  const Fixture f(fixture("spam", Rational(1, 3)));
  NW2Config c;
  c.eta = 0.1;
  NW2Policy p(f.game, f.analysis, c);
  p.set_cumulative(0, 2, 1e6);
  p.set_cumulative(0, 0, -1e6);
  const Eigen::MatrixXd& q = p.q_matrix();
  EXPECT_TRUE(std::isfinite(q(0, 0)));
  EXPECT_NEAR(q.row(0).sum(), 1.0, kTol);
}

TEST(Stationary, Examples) {
  Eigen::MatrixXd spam(3, 3);
  spam << 0.5, 0, 0.5, 0, 0.5, 0.5, 1.0 / 3, 1.0 / 3, 1.0 / 3;
  const Eigen::VectorXd x = stationary_distribution(spam);
  EXPECT_NEAR(x(0), 2.0 / 7, kTol);
  EXPECT_NEAR(x(1), 2.0 / 7, kTol);
  EXPECT_NEAR(x(2), 3.0 / 7, kTol);

  Eigen::MatrixXd two(2, 2);
  two << 0.5, 0.5, 0.25, 0.75;
  const Eigen::VectorXd y = stationary_distribution(two);
  EXPECT_NEAR(y(0), 1.0 / 3, kTol);
  EXPECT_NEAR(y(1), 2.0 / 3, kTol);

  StationaryInfo info;
  const Eigen::VectorXd id = stationary_distribution(Eigen::MatrixXd::Identity(4, 4), &info);
  EXPECT_TRUE(info.power_iteration);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(id(i), 0.25, kTol);
}

TEST(Stationary, TwoStateClosedForm) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 200; ++i) {
    const double a = u(gen), b = u(gen);
    Eigen::MatrixXd q(2, 2);
    q << 1 - a, a, b, 1 - b;
    const Eigen::VectorXd x = stationary_distribution(q);
    EXPECT_NEAR(x(0), b / (a + b), 1e-12);
  }
}

// 1 - Q_kk rounds to 1 here; the answer still follows from the off-diagonals.
TEST(Stationary, NearlyDecomposableChain) {
  Eigen::MatrixXd q(2, 2);
  q << 1, 1e-20, 3e-20, 1;
  StationaryInfo info;
  const Eigen::VectorXd x = stationary_distribution(q, &info);
  EXPECT_FALSE(info.power_iteration);
  EXPECT_NEAR(x(0), 0.75, 1e-12);
  EXPECT_NEAR(x(1), 0.25, 1e-12);

  // Three states, one weak link in each direction around a cycle.
  Eigen::MatrixXd c(3, 3);
  c << 1, 1e-30, 0,  //
      0, 1, 2e-30,   //
      4e-30, 0, 1;
  const Eigen::VectorXd y = stationary_distribution(c);
  // Flow balance: x_0 * 1e-30 = x_1 * 2e-30 = x_2 * 4e-30.
  EXPECT_NEAR(y(0), 4.0 / 7, 1e-12);
  EXPECT_NEAR(y(1), 2.0 / 7, 1e-12);
  EXPECT_NEAR(y(2), 1.0 / 7, 1e-12);
}

TEST(Stationary, RandomChainsHaveSmallResidual) {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 6);
    Eigen::MatrixXd q(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) q(r, c) = gen() % 3 == 0 ? 0.0 : u(gen);
      q(r, r) += 1e-3;
      q.row(r) /= q.row(r).sum();
    }
    StationaryInfo info;
    const Eigen::VectorXd x = stationary_distribution(q, &info);
    EXPECT_NEAR(x.sum(), 1.0, 1e-12);
    EXPECT_GE(x.minCoeff(), 0.0);
    EXPECT_LE((q.transpose() * x - x).lpNorm<1>(), 1e-10);
  }
}

TEST(Redistribute, Exhibit4ExactTrace) {
  const Fixture f(fixture("exhibit4"));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  const RationalVector in = {Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(0)};
  std::size_t skipped = 0;
  const RationalVector q = redistribute(in, p.steps(), 4, &skipped);
  EXPECT_EQ(q, (RationalVector{Rational(8, 24), Rational(7, 24), Rational(7, 24), Rational(2, 24)}));
  EXPECT_EQ(skipped, 0u);
  // Loss-vector conservation, exactly.
  for (std::size_t i = 0; i < 3; ++i) {
    Rational lhs, rhs;
    for (std::size_t a = 0; a < 4; ++a) {
      lhs += q[a] * f.game.loss(a, i);
      rhs += in[a] * f.game.loss(a, i);
    }
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Redistribute, EmptyDLeavesInputAlone) {
  const std::vector<double> p = {0.2, 0.3, 0.5};
  EXPECT_EQ(redistribute(p, std::vector<RedistributionStep<double>>{}, 3), p);
}

TEST(Redistribute, ZeroDenominatorIsSkipped) {
  const std::vector<RedistributionStep<double>> steps = {{2, 0, 1, 0.5}};
  std::size_t skipped = 0;
  const std::vector<double> q = redistribute(std::vector<double>{0, 0, 1}, steps, 3, &skipped);
  EXPECT_EQ(skipped, 1u);
  EXPECT_EQ(q, (std::vector<double>{0, 0, 1}));
}

TEST(NW2Distribution, SpamRoundOne) {
  const Fixture f(fixture("spam", Rational(1, 3)));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  const std::vector<double>& d = p.distribution();
  EXPECT_NEAR(d[0], 0.9 * 2 / 7 + 0.1 / 3, kTol);
  EXPECT_NEAR(d[1], 0.9 * 2 / 7 + 0.1 / 3, kTol);
  EXPECT_NEAR(d[2], 0.9 * 3 / 7 + 0.1 / 3, kTol);
  EXPECT_NEAR(d[0], 0.290476, 1e-6);
  EXPECT_NEAR(d[2], 0.419048, 1e-6);
}

TEST(NW2Distribution, Exhibit4RoundOne) {
  // Actions 1 and 2 only meet at a point, so they are not neighbours and the
  // first-round rows over A are those of spam: P~ = (2/7, 2/7, 3/7), not uniform.
  const Fixture f(fixture("exhibit4"));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  const std::vector<double> pt = p.stationary();
  EXPECT_NEAR(pt[0], 2.0 / 7, kTol);
  EXPECT_NEAR(pt[1], 2.0 / 7, kTol);
  EXPECT_NEAR(pt[2], 3.0 / 7, kTol);
  EXPECT_EQ(pt[3], 0.0);

  // Hand trace with pair (2,3), alpha = 1/2: c_a = 3/5, c_b = 2/5,
  // rho = min(5/3, 5/2) / 8, so q_4 = (5/24) (6/35 + 6/35) = 1/14.
  const RationalVector exact = redistribute(
      RationalVector{Rational(2, 7), Rational(2, 7), Rational(3, 7), Rational(0)}, p.steps(), 4);
  EXPECT_EQ(exact[3], Rational(1, 14));
  EXPECT_EQ(exact[1], Rational(2, 7) - Rational(5, 24) * Rational(3, 5) * Rational(2, 7));

  const std::vector<double>& d = p.distribution();
  ASSERT_EQ(d.size(), 6u);
  EXPECT_NEAR(d[3], 0.9 / 14 + 0.025, kTol);
  EXPECT_EQ(d[4], 0.0);
  EXPECT_EQ(d[5], 0.0);
  double total = 0;
  for (double x : d) total += x;
  EXPECT_NEAR(total, 1.0, kTol);

  // With a uniform P~ the same arithmetic gives exactly 0.1.
  const RationalVector uniform = redistribute(
      RationalVector{Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(0)}, p.steps(), 4);
  EXPECT_EQ(Rational(9, 10) * uniform[3] + Rational(1, 40), Rational(1, 10));
}

TEST(NW2Update, SpamRoundOneEstimate) {
  const Fixture f(fixture("spam", Rational(1, 3)));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  // v^{13} estimates l_1 - l_3; the minimal table has v(1,1) = 1/6, v(3,1) = -1/2.
  EXPECT_NEAR(p.estimator_value(0, 2, 0, 0), 1.0 / 6, kTol);
  EXPECT_NEAR(p.estimator_value(0, 2, 2, 0), -0.5, kTol);
  EXPECT_NEAR(p.estimator_value(2, 0, 2, 0), 0.5, kTol);
  const double p3 = 0.9 * 3 / 7 + 0.1 / 3;
  const auto z = p.loss_difference_estimates(2, 0);
  EXPECT_NEAR(z[2][0], (3.0 / 7) * -0.5 / p3, kTol);
  // Action 2 is outside N_13, so the estimate for that pair vanishes.
  EXPECT_EQ(p.loss_difference_estimates(1, 0)[2][0], 0.0);
}

TEST(NW2Update, CumulativeIsEstimateMinusBias) {
  const Fixture f(fixture("spam", Rational(1, 3)));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  const auto z = p.loss_difference_estimates(2, 1);
  const auto beta = p.bias_terms();
  p.distribution();
  p.update(2, 1);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t a = 0; a < 3; ++a) {
      EXPECT_GE(beta[k][a], 0.0);
      EXPECT_NEAR(p.cumulative()[k][a], z[k][a] - beta[k][a], kTol);
    }
  }
  EXPECT_EQ(p.round(), 2u);
}

TEST(NW2Update, DebiasedDropsBeta) {
  const Fixture f(fixture("spam", Rational(1, 3)));
  NW2Config c = with_gamma(0.1);
  c.bias_correction = false;
  NW2Policy p(f.game, f.analysis, c);
  EXPECT_EQ(p.name(), "nw2-debiased");
  const auto z = p.loss_difference_estimates(0, 0);
  p.distribution();
  p.update(0, 0);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(p.cumulative()[k][a], z[k][a]);
  }
}

TEST(NW2Update, RejectsActionOutsidePlayableSet) {
  const Fixture f(fixture("exhibit4"));
  NW2Policy p(f.game, f.analysis, with_gamma(0.1));
  p.distribution();
  EXPECT_THROW(p.update(5, 0), PreconditionError);
}

// -- Per-round properties along random runs ----------------------------------------

// Local estimator of l_a - l_k from the observability report (original indices).
std::optional<EstimatorFunction> oracle_estimator(const GameAnalysis& an, Action a, Action k) {
  const auto* pair = an.observability.find_neighbor(a, k);
  if (!pair || !pair->local_estimator) return std::nullopt;
  return pair->local_estimator->first() == a ? *pair->local_estimator : pair->local_estimator->reversed();
}

void check_round_properties(const Game& game, const GameAnalysis& an, NW2Policy& p, std::mt19937_64& gen) {
  const std::size_t k = p.playable().size();
  const double kd = static_cast<double>(k);
  const double gamma = p.gamma();
  const std::vector<double> pt = p.stationary();
  const std::vector<double> ps = p.sampling();
  const Eigen::MatrixXd q = p.q_matrix();

  // Stationarity and distributions.
  Eigen::VectorXd x(k);
  for (std::size_t i = 0; i < k; ++i) x(i) = pt[i];
  ASSERT_LE((q.transpose() * x - x).lpNorm<1>(), 1e-10);
  double sum = 0;
  for (double v : ps) sum += v;
  ASSERT_NEAR(sum, 1.0, kTol);

  for (std::size_t a : p.a_set()) {
    EXPECT_GE(ps[a], pt[a] / 4 - 1e-12);  // (a)
  }
  for (std::size_t a = 0; a < k; ++a) EXPECT_GE(ps[a], gamma / kd - 1e-12);  // (d)
  std::uniform_real_distribution<double> unit(0, 1);
  for (int s = 0; s < 10; ++s) {  // (b)
    std::vector<double> u(game.num_outcomes());
    for (double& v : u) v = unit(gen);
    double diff = 0;
    for (std::size_t a = 0; a < k; ++a) {
      double la = 0;
      for (std::size_t i = 0; i < u.size(); ++i) la += game.loss_d(p.playable()[a], i) * u[i];
      diff += (ps[a] - pt[a]) * la;
    }
    EXPECT_LE(std::abs(diff), gamma + 1e-12);
  }
  for (std::size_t kk : p.a_set()) {  // (c)
    for (std::size_t a : p.local_neighbors(kk)) {
      if (a == kk) continue;
      for (Action b : an.neighbors.members(p.playable()[kk], p.playable()[a])) {
        const auto it = std::find(p.playable().begin(), p.playable().end(), b);
        ASSERT_NE(it, p.playable().end());
        EXPECT_GE(ps[it - p.playable().begin()], pt[kk] * q(kk, a) / (4 * kd) - 1e-12);
      }
    }
  }
  for (std::size_t d : p.d_set()) {  // (e)
    for (std::size_t kk : p.a_set()) {
      if (game.loss_row(p.playable()[d]) == game.loss_row(p.playable()[kk])) {
        EXPECT_GE(ps[d], pt[kk] / (4 * kd) - 1e-12);
      }
    }
  }

  // Estimates against an independent evaluation, and unbiasedness.
  const auto beta = p.bias_terms();
  for (std::size_t kk : p.a_set()) {
    for (std::size_t a : p.local_neighbors(kk)) {
      if (a == kk) continue;
      const auto est = oracle_estimator(an, p.playable()[a], p.playable()[kk]);
      ASSERT_TRUE(est);
      double b_expect = 0;
      for (Action b : an.neighbors.members(p.playable()[a], p.playable()[kk])) {
        const std::size_t pos = std::find(p.playable().begin(), p.playable().end(), b) - p.playable().begin();
        b_expect += pt[kk] * pt[kk] / ps[pos];
      }
      EXPECT_NEAR(beta[kk][a], p.eta() * p.v() * p.v() * b_expect, 1e-9);
      for (std::size_t i = 0; i < game.num_outcomes(); ++i) {
        double mean = 0;
        for (std::size_t c = 0; c < k; ++c) {
          const Action oc = p.playable()[c];
          const Symbol f = game.feedback(oc, i);
          const auto z = p.loss_difference_estimates(oc, f);
          const double expect = pt[kk] * est->value(oc, f).to_double() / ps[c];
          EXPECT_NEAR(z[kk][a], expect, 1e-9);
          mean += ps[c] * z[kk][a];
        }
        const double truth = pt[kk] * (game.loss_d(p.playable()[a], i) - game.loss_d(p.playable()[kk], i));
        EXPECT_NEAR(mean, truth, 1e-10);
      }
    }
  }
}

void run_with_checks(const Game& game, std::size_t n, std::uint64_t seed) {
  const GameAnalysis an = analyze(game);
  NW2Config c;
  c.horizon = n;
  NW2Policy p(game, an, c);
  std::mt19937_64 gen(seed);
  Sampler outcomes(seed), actions(seed + 1);
  std::vector<double> u(game.num_outcomes(), 1.0 / static_cast<double>(game.num_outcomes()));
  for (std::size_t t = 0; t < n; ++t) {
    check_round_properties(game, an, p, gen);
    if (::testing::Test::HasFailure()) return;
    const Action a = actions.sample(p.distribution());
    const Outcome i = outcomes.sample(u);
    p.update(a, game.feedback(a, i));
  }
  EXPECT_EQ(p.diagnostics().eta_z_violations, 0u);
  EXPECT_EQ(p.diagnostics().rounds, n);
}

TEST(NW2Properties, Spam) { run_with_checks(fixture("spam", Rational(1, 3)), 300, 1); }
TEST(NW2Properties, Exhibit1) { run_with_checks(fixture("exhibit1"), 300, 2); }
TEST(NW2Properties, Exhibit4) { run_with_checks(fixture("exhibit4"), 300, 3); }

TEST(NW2Properties, Exhibit4WithDuplicate) {
  GameData d = fixture("exhibit4").data();
  d.name = "exhibit4+dup";
  d.loss.push_back(d.loss[1]);
  d.feedback.push_back({1, 1, 1});
  const Game g(d);
  const GameAnalysis an = analyze(g);
  NW2Policy p(g, an, with_gamma(0.1));
  // The duplicate of action 2 joins D and is fed from a pair that has 2 in it.
  EXPECT_EQ(p.playable(), (std::vector<Action>{0, 1, 2, 3, 6}));
  EXPECT_EQ(p.d_set(), (std::vector<std::size_t>{3, 4}));
  run_with_checks(g, 200, 4);
}

TEST(NW2Properties, Determinism) {
  const Game g = fixture("exhibit4");
  const GameAnalysis an = analyze(g);
  const Environment env = Environment::iid(std::vector<double>{0.2, 0.5, 0.3});
  NW2Config c;
  c.horizon = 500;
  NW2Policy p1(g, an, c), p2(g, an, c);
  const Trajectory a = run_episode(g, p1, env, 500, 42);
  const Trajectory b = run_episode(g, p2, env, 500, 42);
  ASSERT_EQ(a.rounds.size(), b.rounds.size());
  for (std::size_t t = 0; t < a.rounds.size(); ++t) {
    EXPECT_EQ(a.rounds[t].action, b.rounds[t].action);
    EXPECT_EQ(a.rounds[t].outcome, b.rounds[t].outcome);
  }
  EXPECT_EQ(p1.cumulative(), p2.cumulative());
}

}  // namespace
}  // namespace pmkit
