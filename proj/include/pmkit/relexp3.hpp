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

#ifndef PMKIT_RELEXP3_HPP_
#define PMKIT_RELEXP3_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pmkit/analysis.hpp"
#include "pmkit/game.hpp"
#include "pmkit/observability.hpp"
#include "pmkit/policy.hpp"

namespace pmkit {

struct RXConfig {
  double epsilon = 0.25;  // in (0, 1/2)
  // Optional replacements for the default schedules
  //   eta_t   = min{1/(4 K V), (1/(2 V_loc)) sqrt(log K / (2 t K_loc))}
  //   alpha_t = min{1/(4 K), t^(-1/2 - epsilon)}
  std::function<double(std::size_t)> eta_schedule;
  std::function<double(std::size_t)> alpha_schedule;
};

struct RXRound {
  std::size_t t = 1;
  double eta = 0, alpha = 0;
  std::vector<double> p_tilde;
  std::size_t anchor = 0;         // B_t
  std::vector<std::size_t> m;     // M_t
  std::vector<std::size_t> s;     // S_t
  std::vector<double> gamma;      // exploration vector
  double gamma_norm = 0;
  std::vector<double> p;          // P_t
};

struct RXDiagnostics {
  std::size_t rounds = 0;
  std::size_t eta_z_violations = 0;  // a in M_t with eta_t |Z_ta| > 1
  double max_eta_z = 0;
};

// Works on the Pareto actions of the game (dominated and degenerate ones
// are dropped); positions below index into retained().
class RelExp3Policy : public Policy {
 public:
  // Throws RefusalError naming a weak-neighbour pair that is not pairwise
  // observable.
  RelExp3Policy(const Game& game, const GameAnalysis& analysis, RXConfig config = {});

  std::string name() const override { return "relexp3"; }
  const std::vector<double>& distribution() override;
  void update(Action action, Symbol symbol) override;
  std::size_t round() const override { return t_; }

  const std::vector<Action>& retained() const { return retained_; }
  std::size_t k_loc() const { return k_loc_; }
  double v() const { return v_; }
  double v_loc() const { return v_loc_; }
  double eta_at(std::size_t t) const;
  double alpha_at(std::size_t t) const;

  // v^{ab}, estimating l_a - l_b, over retained positions a, b.
  const EstimatorFunction& estimator(std::size_t a, std::size_t b) const;
  double v_ab(std::size_t a, std::size_t b) const { return norms_[a][b]; }
  // S^{ab} as retained positions.
  const std::vector<std::size_t>& s_ab(std::size_t a, std::size_t b) const { return s_[a][b]; }

  const RXRound& current();
  // Z^_t as if `action` had been played and `symbol` observed this round.
  std::vector<double> loss_difference_estimates(Action action, Symbol symbol);

  const std::vector<double>& cumulative() const { return l_hat_; }
  void set_cumulative(std::vector<double> l_hat);

  const RXDiagnostics& diagnostics() const { return diag_; }

 private:
  void ensure_round();
  std::size_t position(Action a) const;

  const Game* game_;
  RXConfig config_;
  std::vector<Action> retained_;
  std::vector<long> position_;
  std::size_t k_loc_ = 1;
  double v_ = 0, v_loc_ = 0;
  std::vector<std::vector<EstimatorFunction>> est_;
  std::vector<std::vector<std::vector<double>>> table_;  // [a][b][c * F + f]
  std::vector<std::vector<double>> norms_;
  std::vector<std::vector<std::vector<std::size_t>>> s_;

  std::size_t t_ = 1;
  bool fresh_ = false;
  std::vector<double> l_hat_;
  RXRound round_;
  std::vector<double> full_;
  RXDiagnostics diag_;
};

}  // namespace pmkit

#endif  // PMKIT_RELEXP3_HPP_
