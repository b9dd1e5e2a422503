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

#include <algorithm>
#include <cmath>

#include "pmkit/error.hpp"

namespace pmkit {

Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& q, StationaryInfo* info) {
  const Eigen::Index n = q.rows();
  if (n == 0 || q.cols() != n) throw PreconditionError("stationary_distribution: Q must be square");
  auto residual = [&](const Eigen::VectorXd& x) {
    return (q.transpose() * x - x).lpNorm<1>();
  };
  StationaryInfo local;
  StationaryInfo& out = info ? *info : local;
  out = {};

  // Grassmann-Taksar-Heyman elimination: subtraction free, so it stays
  // accurate when Q is nearly decomposable and 1 - Q_kk rounds to 0.
  Eigen::MatrixXd p = q;
  bool reducible = false;
  for (Eigen::Index k = n - 1; k > 0 && !reducible; --k) {
    const double s = p.row(k).head(k).sum();
    if (!(s > 0)) {
      reducible = true;
      break;
    }
    p.col(k).head(k) /= s;
    p.topLeftCorner(k, k) += p.col(k).head(k) * p.row(k).head(k);
  }
  if (!reducible) {
    Eigen::VectorXd x(n);
    x(0) = 1;
    for (Eigen::Index k = 1; k < n; ++k) x(k) = x.head(k).dot(p.col(k).head(k));
    x /= x.sum();
    out.residual = residual(x);
    if (out.residual <= 1e-10) return x;
  }

  out.power_iteration = true;
  Eigen::RowVectorXd x = Eigen::RowVectorXd::Constant(n, 1.0 / static_cast<double>(n));
  for (std::size_t it = 1; it <= 1000000; ++it) {
    Eigen::RowVectorXd next = x * q;
    next /= next.sum();
    const double step = (next - x).lpNorm<1>();
    x = next;
    if (step <= 1e-12) {
      out.iterations = it;
      out.residual = residual(x.transpose());
      return x.transpose();
    }
  }
  throw NumericError("stationary distribution: power iteration did not converge in 1e6 steps");
}

namespace {

std::string pair_label(ActionPair p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

}  // namespace

NW2Policy::NW2Policy(const Game& game, const GameAnalysis& an, NW2Config config)
    : game_(&game), config_(config) {
  const GameClass& cls = an.game_class;
  full_.assign(game.num_actions(), 0.0);
  if (cls.verdict == Verdict::kHard || cls.verdict == Verdict::kHopeless) {
    const std::string w = cls.witness ? pair_label(*cls.witness) : "";
    throw RefusalError("not locally observable: neighbour pair " + w, w);
  }
  if (cls.verdict == Verdict::kTrivial) {
    trivial_ = true;
    trivial_action_ = cls.optimal_action.value_or(0);
    full_[trivial_action_] = 1.0;
    return;
  }

  const NeighborStructure& ns = an.neighbors;
  const Taxonomy& tax = an.taxonomy;
  playable_ = ns.playable;
  const std::size_t k = playable_.size();
  position_.assign(game.num_actions(), -1);
  for (std::size_t i = 0; i < k; ++i) position_[playable_[i]] = static_cast<long>(i);
  in_a_.assign(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (std::binary_search(tax.representatives.begin(), tax.representatives.end(), playable_[i])) {
      in_a_[i] = true;
      a_set_.push_back(i);
    } else {
      d_set_.push_back(i);
    }
  }

  local_.assign(k, {});
  for (std::size_t i : a_set_) {
    for (Action b : ns.neighborhood[playable_[i]]) {
      if (position_[b] >= 0 && in_a_[position_[b]]) local_[i].push_back(position_[b]);
    }
  }

  // Each d in D borrows from the lexicographically smallest neighbour pair
  // inside A whose N_ab contains it.
  for (std::size_t d : d_set_) {
    bool found = false;
    for (const auto& pair : ns.neighbor_pairs) {
      const auto& [a, b] = pair;
      if (position_[a] < 0 || position_[b] < 0 || !in_a_[position_[a]] || !in_a_[position_[b]]) continue;
      const ActionSet& mem = ns.members(a, b);
      if (!std::binary_search(mem.begin(), mem.end(), playable_[d])) continue;
      RedistributionStep<Rational> s;
      s.d = d;
      s.a = position_[a];
      s.b = position_[b];
      s.alpha = ns.alpha.at(pair).at(playable_[d]);
      steps_exact_.push_back(s);
      steps_.push_back({s.d, s.a, s.b, s.alpha.to_double()});
      found = true;
      break;
    }
    if (!found) {
      throw NumericError("no neighbour pair in A covers action " + std::to_string(playable_[d] + 1));
    }
  }

  const std::size_t f = game.num_symbols();
  est_.assign(k, std::vector<std::vector<double>>(k));
  members_.assign(k, std::vector<std::vector<std::size_t>>(k));
  for (std::size_t kk : a_set_) {
    for (std::size_t a : local_[kk]) {
      if (a == kk) continue;
      const Action oa = playable_[a], ok = playable_[kk];
      const PairObservability* po = an.observability.find_neighbor(oa, ok);
      if (!po || !po->local_estimator) {
        throw NumericError("missing local estimator for pair " + pair_label(ordered_pair(oa, ok)));
      }
      // Stored estimators estimate l_first - l_second; v^{ak} needs l_a - l_k.
      const EstimatorFunction v = oa < ok ? *po->local_estimator : po->local_estimator->reversed();
      std::vector<double> table(k * f, 0.0);
      for (const auto& [key, x] : v.entries()) table[position(key.first) * f + key.second] = x.to_double();
      est_[kk][a] = std::move(table);
      for (Action c : ns.members(oa, ok)) members_[kk][a].push_back(position(c));
    }
  }

  if (!an.observability.v_max) throw NumericError("estimator norm bound V is undefined");
  v_ = an.observability.v_max->to_double();
  const double kd = static_cast<double>(k);
  if (config_.eta && config_.gamma) {
    eta_ = *config_.eta;
    gamma_ = *config_.gamma;
  } else if (config_.eta) {
    eta_ = *config_.eta;
    gamma_ = std::min(v_ * kd * eta_, 0.5);
  } else if (config_.gamma) {
    gamma_ = *config_.gamma;
    eta_ = gamma_ / (v_ * kd);
  } else {
    if (!config_.horizon || *config_.horizon == 0) {
      throw PreconditionError("nw2: a horizon is needed to derive eta and gamma");
    }
    if (!(config_.delta > 0 && config_.delta < 1)) throw PreconditionError("nw2: delta must lie in (0,1)");
    const double n = static_cast<double>(*config_.horizon);
    eta_ = std::sqrt(std::log(kd / config_.delta) / (n * kd)) / v_;
    gamma_ = v_ * kd * eta_;
    if (gamma_ > 0.5) {
      gamma_ = 0.5;
      eta_ = gamma_ / (v_ * kd);
    }
  }
  if (!(eta_ > 0) || !std::isfinite(eta_)) throw PreconditionError("nw2: eta must be positive");
  if (!(gamma_ > 0 && gamma_ <= 0.5)) throw PreconditionError("nw2: gamma must lie in (0, 1/2]");

  z_sum_.assign(k, std::vector<double>(k, 0.0));
  q_ = Eigen::MatrixXd::Zero(k, k);
}

std::string NW2Policy::name() const {
  return config_.bias_correction ? "nw2" : "nw2-debiased";
}

std::size_t NW2Policy::position(Action a) const {
  if (a >= position_.size() || position_[a] < 0) {
    throw PreconditionError("action " + std::to_string(a + 1) + " is outside the playable set");
  }
  return static_cast<std::size_t>(position_[a]);
}

void NW2Policy::set_cumulative(std::size_t k, std::size_t a, double value) {
  z_sum_.at(k).at(a) = value;
  fresh_ = false;
}

void NW2Policy::ensure_round() {
  if (trivial_ || fresh_) return;
  const std::size_t k = playable_.size();
  q_.setZero();
  for (std::size_t r : a_set_) {
    double shift = -INFINITY;
    for (std::size_t a : local_[r]) shift = std::max(shift, -eta_ * z_sum_[r][a]);
    double total = 0;
    for (std::size_t a : local_[r]) {
      q_(r, a) = std::exp(-eta_ * z_sum_[r][a] - shift);
      total += q_(r, a);
    }
    for (std::size_t a : local_[r]) q_(r, a) /= total;
  }
  for (std::size_t d : d_set_) {
    for (std::size_t a : a_set_) q_(d, a) = 1.0 / static_cast<double>(a_set_.size());
  }

  // Columns of D are zero, so the chain restricted to A carries all mass.
  const std::size_t na = a_set_.size();
  Eigen::MatrixXd qa(na, na);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) qa(i, j) = q_(a_set_[i], a_set_[j]);
  }
  StationaryInfo info;
  const Eigen::VectorXd xa = stationary_distribution(qa, &info);
  if (info.power_iteration) ++diag_.power_iterations;
  p_tilde_.assign(k, 0.0);
  for (std::size_t i = 0; i < na; ++i) p_tilde_[a_set_[i]] = xa(i);

  p_bar_ = redistribute(p_tilde_, steps_, k, &diag_.redistribute_skips);
  p_.resize(k);
  const double floor = gamma_ / static_cast<double>(k);
  for (std::size_t i = 0; i < k; ++i) p_[i] = (1 - gamma_) * p_bar_[i] + floor;
  std::fill(full_.begin(), full_.end(), 0.0);
  for (std::size_t i = 0; i < k; ++i) full_[playable_[i]] = p_[i];
  fresh_ = true;
}

const std::vector<double>& NW2Policy::distribution() {
  ensure_round();
  return full_;
}

const Eigen::MatrixXd& NW2Policy::q_matrix() {
  ensure_round();
  return q_;
}

const std::vector<double>& NW2Policy::stationary() {
  ensure_round();
  return p_tilde_;
}

const std::vector<double>& NW2Policy::redistributed() {
  ensure_round();
  return p_bar_;
}

const std::vector<double>& NW2Policy::sampling() {
  ensure_round();
  return p_;
}

double NW2Policy::estimator_value(std::size_t a, std::size_t k, std::size_t c, Symbol f) const {
  if (a == k) return 0.0;
  const auto& table = est_.at(k).at(a);
  if (table.empty()) throw PreconditionError("no estimator for this pair");
  return table[c * game_->num_symbols() + f];
}

std::vector<std::vector<double>> NW2Policy::loss_difference_estimates(Action action, Symbol symbol) {
  const std::size_t k = playable_.size();
  std::vector<std::vector<double>> z(k, std::vector<double>(k, 0.0));
  if (trivial_) return z;
  ensure_round();
  const std::size_t c = position(action);
  for (std::size_t kk : a_set_) {
    for (std::size_t a : local_[kk]) {
      if (a == kk) continue;
      z[kk][a] = p_tilde_[kk] * est_[kk][a][c * game_->num_symbols() + symbol] / p_[c];
    }
  }
  return z;
}

std::vector<std::vector<double>> NW2Policy::bias_terms() {
  const std::size_t k = playable_.size();
  std::vector<std::vector<double>> beta(k, std::vector<double>(k, 0.0));
  if (trivial_ || !config_.bias_correction) return beta;
  ensure_round();
  const double scale = eta_ * v_ * v_;
  for (std::size_t kk : a_set_) {
    for (std::size_t a : local_[kk]) {
      double s = 0;
      for (std::size_t b : members_[kk][a]) s += p_tilde_[kk] * p_tilde_[kk] / p_[b];
      beta[kk][a] = scale * s;
    }
  }
  return beta;
}

void NW2Policy::update(Action action, Symbol symbol) {
  ++t_;
  if (trivial_) return;
  const auto z = loss_difference_estimates(action, symbol);
  const auto beta = bias_terms();
  for (std::size_t kk : a_set_) {
    for (std::size_t a : local_[kk]) {
      const double ez = eta_ * std::abs(z[kk][a]);
      diag_.max_eta_z = std::max(diag_.max_eta_z, ez);
      if (ez > 1 + 1e-9) ++diag_.eta_z_violations;
      z_sum_[kk][a] += z[kk][a] - beta[kk][a];
    }
  }
  ++diag_.rounds;
  fresh_ = false;
}

}  // namespace pmkit
