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

#ifndef PMKIT_ENVS_HPP_
#define PMKIT_ENVS_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pmkit/game.hpp"
#include "pmkit/geometry.hpp"
#include "pmkit/policy.hpp"
#include "pmkit/rational.hpp"

namespace pmkit {

// Oblivious adversary: the outcome sequence depends on (n, seed) only.
class Environment {
 public:
  enum class Kind { kIid, kFixed };

  // Throws PreconditionError unless u >= 0 and sum(u) = 1 (within 1e-12).
  static Environment iid(std::vector<double> u);
  // Exact check of sum(u) = 1.
  static Environment iid(const RationalVector& u);
  static Environment fixed(std::vector<Outcome> sequence);

  Kind kind() const { return kind_; }
  std::size_t num_outcomes() const;
  const std::vector<double>& probabilities() const { return u_; }
  const std::vector<Outcome>& sequence() const { return sequence_; }

  // First n outcomes. A fixed sequence shorter than n is an error.
  std::vector<Outcome> outcomes(std::size_t n, std::uint64_t seed) const;

 private:
  Kind kind_ = Kind::kIid;
  std::vector<double> u_;
  std::vector<Outcome> sequence_;
};

struct Round {
  Action action = 0;
  Outcome outcome = 0;
  Symbol feedback = 0;
};

struct Trajectory {
  std::vector<Round> rounds;
};

struct RegretReport {
  Rational learner_loss;
  Rational best_loss;
  Action best_action = 0;  // lowest index among ties
  Rational regret;
  double value() const { return regret.to_double(); }
};

// Plays n rounds. The outcome stream and the action stream are seeded with
// derive_seed(seed, run, Stream::kEnvironment / kPolicy).
Trajectory run_episode(const Game& game, Policy& policy, const Environment& env, std::size_t n,
                       std::uint64_t seed, std::uint64_t run = 0);

// Regret against the best fixed action of the full action set, exact.
RegretReport regret(const Game& game, const Trajectory& trajectory);

// CSV: a "# pmkit <version>" line, header t,action,outcome,feedback,cum_loss,
// one row per round (1-based indices, exact cumulative loss), then a
// summary line "# regret=<p/q> (<decimal>) best_action=<a>".
void write_trajectory_csv(std::ostream& os, const Game& game, const Trajectory& trajectory);

struct HardPair {
  ActionPair pair;        // (a, b) as given, not reordered
  RationalVector u;       // vertex average of C_a ∩ C_b
  RationalVector v;       // S v = 0 over N_ab, <v, l_a - l_b> = 1
  Rational delta;
  RationalVector u_a, u_b;  // u - delta v, u + delta v
  std::optional<Rational> gap;  // min over c outside N_ab of <l_c - l_a, u>
};

// Throws PreconditionError when (a, b) are not neighbours, when the pair is
// locally observable, or when delta pushes u_a or u_b off the face of the
// simplex that contains u.
HardPair hard_pair_envs(const Game& game, const NeighborStructure& ns, Action a, Action b,
                        const Rational& delta);

struct FlowerPair {
  std::size_t num_symbols = 0;
  Rational delta, p;
  RationalVector u, u_prime;
};

// The two environments for flower(F); p = 1/2 - (E - 2) delta / 2 makes u a
// distribution. Throws PreconditionError for F < 2, delta < 0, or a
// negative coordinate.
FlowerPair flower_pair_envs(std::size_t num_symbols, const Rational& delta);

// S_c x for the signal matrix of action c.
RationalVector apply_signal(const Game& game, Action c, const RationalVector& x);

}  // namespace pmkit

#endif  // PMKIT_ENVS_HPP_
