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

#include "pmkit/envs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pmkit/error.hpp"
#include "pmkit/linalg.hpp"
#include "pmkit/random.hpp"

namespace pmkit {

// -- Environments --------------------------------------------------------------

Environment Environment::iid(std::vector<double> u) {
  if (u.empty()) throw PreconditionError("iid environment: empty distribution");
  double total = 0;
  for (double x : u) {
    if (!(x >= 0) || !std::isfinite(x)) throw PreconditionError("iid environment: negative or non-finite mass");
    total += x;
  }
  if (std::abs(total - 1) > 1e-12) throw PreconditionError("iid environment: masses do not sum to 1");
  Environment env;
  env.kind_ = Kind::kIid;
  env.u_ = std::move(u);
  return env;
}

Environment Environment::iid(const RationalVector& u) {
  Rational total;
  for (const auto& x : u) {
    if (x.sign() < 0) throw PreconditionError("iid environment: negative mass");
    total += x;
  }
  if (total != Rational(1)) throw PreconditionError("iid environment: masses do not sum to 1");
  Environment env;
  env.kind_ = Kind::kIid;
  env.u_ = to_doubles(u);
  return env;
}

Environment Environment::fixed(std::vector<Outcome> sequence) {
  if (sequence.empty()) throw PreconditionError("fixed environment: empty sequence");
  Environment env;
  env.kind_ = Kind::kFixed;
  env.sequence_ = std::move(sequence);
  return env;
}

std::size_t Environment::num_outcomes() const {
  if (kind_ == Kind::kIid) return u_.size();
  return *std::max_element(sequence_.begin(), sequence_.end()) + 1;
}

std::vector<Outcome> Environment::outcomes(std::size_t n, std::uint64_t seed) const {
  if (kind_ == Kind::kFixed) {
    if (sequence_.size() < n) {
      throw PreconditionError("fixed environment holds " + std::to_string(sequence_.size()) +
                              " outcomes, " + std::to_string(n) + " requested");
    }
    return {sequence_.begin(), sequence_.begin() + static_cast<long>(n)};
  }
  Sampler sampler(seed);
  std::vector<Outcome> out(n);
  for (auto& i : out) i = sampler.sample(u_);
  return out;
}

// -- Episodes ----------------------------------------------------------------------

Trajectory run_episode(const Game& game, Policy& policy, const Environment& env, std::size_t n,
                       std::uint64_t seed, std::uint64_t run) {
  if (n == 0) throw PreconditionError("run_episode: n must be at least 1");
  if (env.num_outcomes() > game.num_outcomes()) {
    throw PreconditionError("environment has more outcomes than the game");
  }
  const std::vector<Outcome> outcomes = env.outcomes(n, derive_seed(seed, run, Stream::kEnvironment));
  Sampler actions(derive_seed(seed, run, Stream::kPolicy));
  Trajectory traj;
  traj.rounds.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    const Action a = actions.sample(policy.distribution());
    const Outcome i = outcomes[t];
    const Symbol f = game.feedback(a, i);
    policy.update(a, f);
    traj.rounds.push_back({a, i, f});
  }
  return traj;
}

RegretReport regret(const Game& game, const Trajectory& traj) {
  const std::size_t k = game.num_actions(), e = game.num_outcomes();
  std::vector<std::vector<long>> played(k, std::vector<long>(e, 0));
  std::vector<long> seen(e, 0);
  for (const Round& r : traj.rounds) {
    ++played[r.action][r.outcome];
    ++seen[r.outcome];
  }
  RegretReport rep;
  for (Action a = 0; a < k; ++a) {
    for (Outcome i = 0; i < e; ++i) {
      if (played[a][i]) rep.learner_loss += Rational(played[a][i]) * game.loss(a, i);
    }
  }
  for (Action a = 0; a < k; ++a) {
    Rational total;
    for (Outcome i = 0; i < e; ++i) {
      if (seen[i]) total += Rational(seen[i]) * game.loss(a, i);
    }
    if (a == 0 || total < rep.best_loss) {
      rep.best_loss = total;
      rep.best_action = a;
    }
  }
  rep.regret = rep.learner_loss - rep.best_loss;
  return rep;
}

void write_trajectory_csv(std::ostream& os, const Game& game, const Trajectory& traj) {
  os << "# pmkit " << PMKIT_VERSION << "\n";
  os << "t,action,outcome,feedback,cum_loss\n";
  Rational cum;
  std::size_t t = 0;
  for (const Round& r : traj.rounds) {
    cum += game.loss(r.action, r.outcome);
    os << ++t << ',' << r.action + 1 << ',' << r.outcome + 1 << ',' << r.feedback + 1 << ','
       << cum.str() << '\n';
  }
  const RegretReport rep = regret(game, traj);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", rep.value());
  os << "# regret=" << rep.regret.str() << " (" << buf << ") best_action=" << rep.best_action + 1
     << "\n";
}

// -- Lower-bound constructions -------------------------------------------------------

RationalVector apply_signal(const Game& game, Action c, const RationalVector& x) {
  RationalVector out(game.num_symbols());
  for (Outcome i = 0; i < game.num_outcomes(); ++i) out[game.feedback(c, i)] += x[i];
  return out;
}

HardPair hard_pair_envs(const Game& game, const NeighborStructure& ns, Action a, Action b,
                        const Rational& delta) {
  if (!ns.are_neighbors(a, b)) throw PreconditionError("hard_pair_envs: actions are not neighbours");
  if (delta.sign() <= 0) throw PreconditionError("hard_pair_envs: delta must be positive");
  const std::size_t e = game.num_outcomes();
  HardPair hp;
  hp.pair = {a, b};
  hp.delta = delta;

  const std::vector<RationalVector> verts = joint_cell(game, {std::min(a, b), std::max(a, b)}).vertices();
  hp.u.assign(e, Rational());
  for (const auto& x : verts) {
    for (std::size_t i = 0; i < e; ++i) hp.u[i] += x[i];
  }
  for (auto& x : hp.u) x /= Rational(static_cast<long>(verts.size()));

  // l_a - l_b = z + w with z in the row space of the stacked signal
  // matrices of N_ab and w in their kernel.
  RationalVector diff(e);
  for (std::size_t i = 0; i < e; ++i) diff[i] = game.loss(a, i) - game.loss(b, i);
  RationalMatrix rows;
  const ActionSet& members = ns.members(a, b);
  for (Action c : members) {
    for (Symbol f = 0; f < game.num_symbols(); ++f) {
      RationalVector row(e);
      for (Outcome i = 0; i < e; ++i) row[i] = game.feedback(c, i) == f ? 1 : 0;
      rows.push_back(std::move(row));
    }
  }
  const RationalVector z = linalg::project_onto_row_space(rows, diff);
  RationalVector w(e);
  for (std::size_t i = 0; i < e; ++i) w[i] = diff[i] - z[i];
  const Rational scale = dot(w, diff);
  if (scale.is_zero()) throw PreconditionError("hard_pair_envs: the pair is locally observable");
  hp.v.resize(e);
  for (std::size_t i = 0; i < e; ++i) hp.v[i] = w[i] / scale;

  hp.u_a.resize(e);
  hp.u_b.resize(e);
  for (std::size_t i = 0; i < e; ++i) {
    hp.u_a[i] = hp.u[i] - delta * hp.v[i];
    hp.u_b[i] = hp.u[i] + delta * hp.v[i];
    const bool support = hp.u[i].sign() > 0;
    for (const Rational* x : {&hp.u_a[i], &hp.u_b[i]}) {
      if (x->sign() < 0 || (support && x->sign() == 0) || (!support && !x->is_zero())) {
        throw PreconditionError("hard_pair_envs: delta " + delta.str() +
                                " moves u_a or u_b off the face of the simplex holding u");
      }
    }
  }

  for (Action c : members) {
    if (apply_signal(game, c, hp.u_a) != apply_signal(game, c, hp.u_b)) {
      throw NumericError("hard_pair_envs: environments are distinguishable by action " +
                         std::to_string(c + 1));
    }
  }

  for (Action c = 0; c < game.num_actions(); ++c) {
    if (std::binary_search(members.begin(), members.end(), c)) continue;
    Rational g;
    for (std::size_t i = 0; i < e; ++i) g += (game.loss(c, i) - game.loss(a, i)) * hp.u[i];
    if (!hp.gap || g < *hp.gap) hp.gap = g;
  }
  return hp;
}

FlowerPair flower_pair_envs(std::size_t num_symbols, const Rational& delta) {
  if (num_symbols < 2) throw PreconditionError("flower_pair_envs: F must be at least 2");
  if (delta.sign() < 0) throw PreconditionError("flower_pair_envs: delta must be nonnegative");
  const std::size_t e = 2 * num_symbols - 2;
  FlowerPair fp;
  fp.num_symbols = num_symbols;
  fp.delta = delta;
  fp.p = Rational(1, 2) - Rational(static_cast<long>(e - 2)) * delta / Rational(2);
  fp.u.assign(e, Rational());
  fp.u_prime.assign(e, Rational());
  for (std::size_t i = 1; i <= e; ++i) {
    const Rational sign = i % 2 == 0 ? Rational(1) : Rational(-1);  // (-1)^i
    Rational ui;
    if (i == 1) {
      ui = fp.p + delta;
    } else if (i == e) {
      ui = fp.p - delta;
    } else {
      ui = delta * (Rational(1) - sign);
    }
    fp.u[i - 1] = ui;
    fp.u_prime[i - 1] = ui + Rational(2) * sign * delta;
  }
  for (std::size_t i = 0; i < e; ++i) {
    if (fp.u[i].sign() < 0 || fp.u_prime[i].sign() < 0) {
      throw PreconditionError("flower_pair_envs: delta " + delta.str() + " is too large");
    }
  }
  return fp;
}

}  // namespace pmkit
