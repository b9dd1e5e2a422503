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

#ifndef PMKIT_NW2_HPP_
#define PMKIT_NW2_HPP_

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pmkit/analysis.hpp"
#include "pmkit/game.hpp"
#include "pmkit/policy.hpp"
#include "pmkit/rational.hpp"

namespace pmkit {

struct NW2Config {
  // Unset eta/gamma are derived from the horizon:
  //   eta = (1/V) sqrt(log(K/delta) / (n K)),  gamma = V K eta,
  // with gamma capped at 1/2 (eta then follows as gamma / (V K)). Giving
  // only one of them derives the other through gamma = V K eta.
  std::optional<double> eta;
  std::optional<double> gamma;
  double delta = 0.05;
  std::optional<std::size_t> horizon;
  // false drops the beta term, leaving the plain importance-weighted
  // (unbiased) estimates.
  bool bias_correction = true;
};

// One degenerate or duplicate action d fed by the pair (a, b) with
// l_d = alpha l_a + (1 - alpha) l_b. Indices are positions in the
// playable set.
template <class T>
struct RedistributionStep {
  std::size_t d = 0, a = 0, b = 0;
  T alpha{};
};

// Moves mass from (a, b) to d for every step in order. `k` is the size of
// the playable set. A step whose weights are all zero is skipped and
// counted in `skipped`.
template <class T>
std::vector<T> redistribute(const std::vector<T>& p, const std::vector<RedistributionStep<T>>& steps,
                            std::size_t k, std::size_t* skipped = nullptr) {
  std::vector<T> q = p;
  const T zero(0), one(1), two_k(static_cast<long>(2 * k));
  for (const auto& s : steps) {
    const T den = s.alpha * q[s.b] + (one - s.alpha) * q[s.a];
    if (den == zero) {
      if (skipped) ++*skipped;
      continue;
    }
    const T ca = s.alpha * q[s.b] / den;
    const T cb = one - ca;
    const T ma = ca * q[s.a], mb = cb * q[s.b];
    // An empty side contributes +infinity to the minimum.
    std::optional<T> rho;
    if (ma > zero) rho = p[s.a] / ma;
    if (mb > zero) {
      T r = p[s.b] / mb;
      if (!rho || r < *rho) rho = r;
    }
    if (!rho) {
      if (skipped) ++*skipped;
      continue;
    }
    const T r = *rho / two_k;
    q[s.d] = r * ma + r * mb;
    q[s.a] = (one - r * ca) * q[s.a];
    q[s.b] = (one - r * cb) * q[s.b];
  }
  return q;
}

struct StationaryInfo {
  bool power_iteration = false;  // the direct solve was singular or rejected
  std::size_t iterations = 0;
  double residual = 0;  // || x^T Q - x^T ||_1
};

// x >= 0, sum(x) = 1, x^T Q = x^T for a right-stochastic Q. GTH
// elimination first; when the chain has no unique stationary law, the limit of power
// iteration from the uniform start (threshold 1e-12, at most 1e6 steps).
// Throws NumericError when neither route converges.
Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& q, StationaryInfo* info = nullptr);

struct NW2Diagnostics {
  std::size_t rounds = 0;
  std::size_t eta_z_violations = 0;  // rounds/pairs with eta |Z| > 1
  double max_eta_z = 0;
  std::size_t redistribute_skips = 0;
  std::size_t power_iterations = 0;  // rounds that fell back to power iteration
};

class NW2Policy : public Policy {
 public:
  // Throws RefusalError for games that are not locally observable, and
  // PreconditionError when eta/gamma cannot be resolved.
  NW2Policy(const Game& game, const GameAnalysis& analysis, NW2Config config = {});

  std::string name() const override;
  const std::vector<double>& distribution() override;
  void update(Action action, Symbol symbol) override;
  std::size_t round() const override { return t_; }

  bool trivial() const { return trivial_; }
  double eta() const { return eta_; }
  double gamma() const { return gamma_; }
  double v() const { return v_; }

  // Playable actions (original indices). Everything below indexes into it.
  const std::vector<Action>& playable() const { return playable_; }
  const std::vector<std::size_t>& a_set() const { return a_set_; }
  const std::vector<std::size_t>& d_set() const { return d_set_; }
  const std::vector<RedistributionStep<Rational>>& steps() const { return steps_exact_; }
  // N_k ∩ A for k in A (empty for k in D).
  const std::vector<std::size_t>& local_neighbors(std::size_t k) const { return local_[k]; }

  // Current round's quantities; computed on demand.
  const Eigen::MatrixXd& q_matrix();
  const std::vector<double>& stationary();     // P~
  const std::vector<double>& redistributed();  // Redistribute(P~)
  const std::vector<double>& sampling();       // P over the playable set

  // Z^_{tka} as if `action` had been played and `symbol` observed this
  // round (no state change). Indexed [k][a]; zero outside k in A,
  // a in N_k ∩ A.
  std::vector<std::vector<double>> loss_difference_estimates(Action action, Symbol symbol);
  // beta_{tka} for the current round, same layout.
  std::vector<std::vector<double>> bias_terms();
  // v^{ak}(c, f) for playable positions k, a, c.
  double estimator_value(std::size_t a, std::size_t k, std::size_t c, Symbol f) const;

  const std::vector<std::vector<double>>& cumulative() const { return z_sum_; }
  void set_cumulative(std::size_t k, std::size_t a, double value);

  const NW2Diagnostics& diagnostics() const { return diag_; }

 private:
  void ensure_round();
  std::size_t position(Action a) const;

  const Game* game_;
  NW2Config config_;
  bool trivial_ = false;
  Action trivial_action_ = 0;
  double eta_ = 0, gamma_ = 0, v_ = 0;

  std::vector<Action> playable_;
  std::vector<long> position_;  // original index -> playable position or -1
  std::vector<std::size_t> a_set_, d_set_;
  std::vector<bool> in_a_;
  std::vector<std::vector<std::size_t>> local_;
  std::vector<RedistributionStep<Rational>> steps_exact_;
  std::vector<RedistributionStep<double>> steps_;
  // est_[k][a] is v^{ak} laid out as c * F + f; empty where undefined.
  std::vector<std::vector<std::vector<double>>> est_;
  // members_[k][a] = N_ak as playable positions.
  std::vector<std::vector<std::vector<std::size_t>>> members_;

  std::size_t t_ = 1;
  bool fresh_ = false;
  std::vector<std::vector<double>> z_sum_;
  Eigen::MatrixXd q_;
  std::vector<double> p_tilde_, p_bar_, p_, full_;
  NW2Diagnostics diag_;
};

}  // namespace pmkit

#endif  // PMKIT_NW2_HPP_
