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

#ifndef PMKIT_OBSERVABILITY_HPP_
#define PMKIT_OBSERVABILITY_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pmkit/game.hpp"
#include "pmkit/geometry.hpp"
#include "pmkit/rational.hpp"

namespace pmkit {

// (S_c)_{f,i} = 1 iff playing c against outcome i shows symbol f.
struct SignalMatrix {
  Action action = 0;
  std::vector<std::vector<int>> matrix;  // F rows, E columns
};

SignalMatrix signal_matrix(const Game& game, Action c);

// v : [K] x [F] -> Q estimating l_a - l_b:
//   sum_c v(c, Phi(c, i)) = l_a(i) - l_b(i)  for every outcome i.
class EstimatorFunction {
 public:
  EstimatorFunction() = default;
  EstimatorFunction(Action a, Action b) : a_(a), b_(b) {}

  Action first() const { return a_; }
  Action second() const { return b_; }

  Rational value(Action c, Symbol f) const;
  void set(Action c, Symbol f, Rational v);

  // Nonzero entries only, keyed by (action, symbol).
  const std::map<std::pair<Action, Symbol>, Rational>& entries() const { return values_; }

  Rational norm() const;       // sup norm
  ActionSet support() const;   // actions with a nonzero value
  // Exact re-substitution of the defining identity over every outcome.
  bool satisfies_identity(const Game& game) const;
  // The estimator of l_b - l_a.
  EstimatorFunction reversed() const;

 private:
  Action a_ = 0, b_ = 0;
  std::map<std::pair<Action, Symbol>, Rational> values_;
};

// Minimum sup-norm estimator supported on `support` (ties broken by minimum
// l1 norm), or nullopt when l_a - l_b is not in the row space of the
// stacked signal matrices of `support`. a == b gives the zero function.
std::optional<EstimatorFunction> solve_estimator(const Game& game, Action a, Action b,
                                                 ActionSet support);

// Pairwise estimator built by propagation over the bipartite symbol graph
// and per-component centring; its sup norm is at most 1 + F. Throws
// PreconditionError when (a, b) is not pairwise observable.
EstimatorFunction pairwise_estimator_bounded(const Game& game, Action a, Action b);

struct PairObservability {
  ActionPair pair;
  std::optional<bool> global, local, pairwise;  // unset = not evaluated
  std::optional<EstimatorFunction> global_estimator, local_estimator, pairwise_estimator;
};

struct ObservabilityReport {
  std::vector<PairObservability> neighbor_pairs;  // global, local and pairwise
  std::vector<PairObservability> weak_pairs;      // pairwise only

  bool globally_observable = true;
  bool locally_observable = true;
  bool point_locally_observable = true;

  // Max sup norm of the retained neighbour estimators (local if every
  // neighbour pair is locally observable, else global); unset when some
  // neighbour pair has no estimator at all.
  std::optional<Rational> v_max;
  // Max sup norm over weak-neighbour pairwise estimators; unset unless the
  // game is point-locally observable.
  std::optional<Rational> v_loc;

  const PairObservability* find_neighbor(Action a, Action b) const;
  const PairObservability* find_weak(Action a, Action b) const;
};

ObservabilityReport observability_report(const Game& game, const NeighborStructure& ns);

}  // namespace pmkit

#endif  // PMKIT_OBSERVABILITY_HPP_
