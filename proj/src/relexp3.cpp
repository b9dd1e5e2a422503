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

#include "pmkit/relexp3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pmkit/error.hpp"

namespace pmkit {
namespace {

std::string pair_label(ActionPair p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

}  // namespace

RelExp3Policy::RelExp3Policy(const Game& game, const GameAnalysis& an, RXConfig config)
    : game_(&game), config_(std::move(config)) {
  if (!(config_.epsilon > 0 && config_.epsilon < 0.5)) {
    throw PreconditionError("relexp3: epsilon must lie in (0, 1/2)");
  }
  const ObservabilityReport& rep = an.observability;
  for (const auto& po : rep.weak_pairs) {
    if (!*po.pairwise) {
      const std::string w = pair_label(po.pair);
      throw RefusalError("not point-locally observable: weak neighbour pair " + w +
                             " is not pairwise observable",
                         w);
    }
  }

  retained_ = an.taxonomy.of_kind(ActionKind::kPareto);
  const std::size_t k = retained_.size();
  if (k == 0) throw PreconditionError("relexp3: game has no Pareto action");
  position_.assign(game.num_actions(), -1);
  for (std::size_t i = 0; i < k; ++i) position_[retained_[i]] = static_cast<long>(i);
  k_loc_ = std::max<std::size_t>(an.point_local.k_loc, 1);

  const std::size_t f = game.num_symbols();
  est_.assign(k, std::vector<EstimatorFunction>(k));
  table_.assign(k, std::vector<std::vector<double>>(k, std::vector<double>(k * f, 0.0)));
  norms_.assign(k, std::vector<double>(k, 0.0));
  s_.assign(k, std::vector<std::vector<std::size_t>>(k));
  for (std::size_t a = 0; a < k; ++a) {
    est_[a][a] = EstimatorFunction(retained_[a], retained_[a]);
    s_[a][a] = {a};
    for (std::size_t b = a + 1; b < k; ++b) {
      const Action oa = retained_[a], ob = retained_[b];
      const bool weak = an.neighbors.are_weak_neighbors(oa, ob);
      EstimatorFunction v;
      if (weak) {
        v = pairwise_estimator_bounded(game, oa, ob);
      } else {
        auto found = solve_estimator(game, oa, ob, retained_);
        if (!found) throw NumericError("relexp3: no estimator for pair " + pair_label({oa, ob}));
        v = std::move(*found);
      }
      est_[a][b] = v;
      est_[b][a] = v.reversed();
      const double norm = v.norm().to_double();
      norms_[a][b] = norms_[b][a] = norm;
      v_ = std::max(v_, norm);
      if (weak) v_loc_ = std::max(v_loc_, norm);
      std::vector<std::size_t> s{a, b};
      for (Action c : v.support()) s.push_back(position(c));
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      s_[a][b] = s_[b][a] = s;
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (const auto& [key, x] : est_[a][b].entries()) {
        table_[a][b][position(key.first) * f + key.second] = x.to_double();
      }
    }
  }
  l_hat_.assign(k, 0.0);
  full_.assign(game.num_actions(), 0.0);
}

std::size_t RelExp3Policy::position(Action a) const {
  if (a >= position_.size() || position_[a] < 0) {
    throw PreconditionError("action " + std::to_string(a + 1) + " is not retained by relexp3");
  }
  return static_cast<std::size_t>(position_[a]);
}

const EstimatorFunction& RelExp3Policy::estimator(std::size_t a, std::size_t b) const {
  return est_.at(a).at(b);
}

double RelExp3Policy::eta_at(std::size_t t) const {
  double eta;
  if (config_.eta_schedule) {
    eta = config_.eta_schedule(t);
  } else {
    const double k = static_cast<double>(retained_.size());
    const double inf = std::numeric_limits<double>::infinity();
    const double cap = v_ > 0 ? 1.0 / (4 * k * v_) : inf;
    const double rate =
        v_loc_ > 0 ? std::sqrt(std::log(k) / (2.0 * static_cast<double>(t) * static_cast<double>(k_loc_))) /
                         (2 * v_loc_)
                   : inf;
    eta = std::min(cap, rate);
  }
  return std::isfinite(eta) ? eta : 0.0;
}

double RelExp3Policy::alpha_at(std::size_t t) const {
  if (config_.alpha_schedule) return config_.alpha_schedule(t);
  const double k = static_cast<double>(retained_.size());
  return std::min(1.0 / (4 * k), std::pow(static_cast<double>(t), -0.5 - config_.epsilon));
}

void RelExp3Policy::set_cumulative(std::vector<double> l_hat) {
  if (l_hat.size() != retained_.size()) throw PreconditionError("set_cumulative: size mismatch");
  l_hat_ = std::move(l_hat);
  fresh_ = false;
}

void RelExp3Policy::ensure_round() {
  if (fresh_) return;
  const std::size_t k = retained_.size();
  RXRound& r = round_;
  r = RXRound{};
  r.t = t_;
  r.eta = eta_at(t_);
  r.alpha = alpha_at(t_);

  // Log-domain softmax of -eta L^.
  std::vector<double> logit(k);
  for (std::size_t a = 0; a < k; ++a) logit[a] = -r.eta * l_hat_[a];
  const double shift = *std::max_element(logit.begin(), logit.end());
  double total = 0;
  for (std::size_t a = 0; a < k; ++a) total += std::exp(logit[a] - shift);
  const double log_total = std::log(total);
  r.p_tilde.resize(k);
  std::vector<double> log_p(k);
  for (std::size_t a = 0; a < k; ++a) {
    log_p[a] = logit[a] - shift - log_total;
    r.p_tilde[a] = std::exp(log_p[a]);
  }
  r.anchor = static_cast<std::size_t>(std::max_element(r.p_tilde.begin(), r.p_tilde.end()) -
                                      r.p_tilde.begin());

  // a in M_t  iff  log P~_a + eta V^{aB} / alpha > log(eta / t).
  const double threshold = std::log(r.eta / static_cast<double>(t_));
  std::vector<bool> in_s(k, false);
  double v_max = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const double lhs = log_p[a] + (r.alpha > 0 ? r.eta * norms_[a][r.anchor] / r.alpha : 0.0);
    if (!(lhs > threshold)) continue;
    r.m.push_back(a);
    v_max = std::max(v_max, norms_[a][r.anchor]);
    for (std::size_t c : s_[a][r.anchor]) in_s[c] = true;
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (in_s[a]) r.s.push_back(a);
  }
  r.gamma.assign(k, r.alpha / static_cast<double>(k));
  for (std::size_t a : r.s) r.gamma[a] += r.eta * v_max;
  for (double g : r.gamma) r.gamma_norm += g;
  if (r.gamma_norm > 1) {
    throw PreconditionError("relexp3: exploration mass " + std::to_string(r.gamma_norm) +
                            " exceeds 1 at round " + std::to_string(t_));
  }
  r.p.resize(k);
  for (std::size_t a = 0; a < k; ++a) r.p[a] = (1 - r.gamma_norm) * r.p_tilde[a] + r.gamma[a];
  std::fill(full_.begin(), full_.end(), 0.0);
  for (std::size_t a = 0; a < k; ++a) full_[retained_[a]] = r.p[a];
  fresh_ = true;
}

const RXRound& RelExp3Policy::current() {
  ensure_round();
  return round_;
}

const std::vector<double>& RelExp3Policy::distribution() {
  ensure_round();
  return full_;
}

std::vector<double> RelExp3Policy::loss_difference_estimates(Action action, Symbol symbol) {
  ensure_round();
  const std::size_t k = retained_.size();
  const std::size_t c = position(action);
  const std::size_t f = game_->num_symbols();
  std::vector<double> z(k, 0.0);
  for (std::size_t a = 0; a < k; ++a) {
    z[a] = table_[a][round_.anchor][c * f + symbol] / round_.p[c];
  }
  return z;
}

void RelExp3Policy::update(Action action, Symbol symbol) {
  const std::vector<double> z = loss_difference_estimates(action, symbol);
  for (std::size_t a : round_.m) {
    const double ez = round_.eta * std::abs(z[a]);
    diag_.max_eta_z = std::max(diag_.max_eta_z, ez);
    if (ez > 1 + 1e-9) ++diag_.eta_z_violations;
  }
  for (std::size_t a = 0; a < z.size(); ++a) l_hat_[a] += z[a];
  ++diag_.rounds;
  ++t_;
  fresh_ = false;
}

}  // namespace pmkit
