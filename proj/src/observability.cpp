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

#include "pmkit/observability.hpp"

#include <algorithm>
#include <deque>

#include "pmkit/error.hpp"
#include "pmkit/lp.hpp"

namespace pmkit {

SignalMatrix signal_matrix(const Game& game, Action c) {
  SignalMatrix s;
  s.action = c;
  s.matrix.assign(game.num_symbols(), std::vector<int>(game.num_outcomes(), 0));
  for (Outcome i = 0; i < game.num_outcomes(); ++i) s.matrix[game.feedback(c, i)][i] = 1;
  return s;
}

// -- EstimatorFunction ---------------------------------------------------------

Rational EstimatorFunction::value(Action c, Symbol f) const {
  auto it = values_.find({c, f});
  return it == values_.end() ? Rational() : it->second;
}

void EstimatorFunction::set(Action c, Symbol f, Rational v) {
  if (v.is_zero()) {
    values_.erase({c, f});
  } else {
    values_[{c, f}] = std::move(v);
  }
}

Rational EstimatorFunction::norm() const {
  Rational m;
  for (const auto& [key, v] : values_) m = std::max(m, v.abs());
  return m;
}

ActionSet EstimatorFunction::support() const {
  ActionSet s;
  for (const auto& [key, v] : values_) s.push_back(key.first);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool EstimatorFunction::satisfies_identity(const Game& game) const {
  for (Outcome i = 0; i < game.num_outcomes(); ++i) {
    Rational sum;
    for (Action c = 0; c < game.num_actions(); ++c) sum += value(c, game.feedback(c, i));
    if (sum != game.loss(a_, i) - game.loss(b_, i)) return false;
  }
  return true;
}

EstimatorFunction EstimatorFunction::reversed() const {
  EstimatorFunction r(b_, a_);
  for (const auto& [key, v] : values_) r.values_[key] = -v;
  return r;
}

// -- Synthesis -------------------------------------------------------------------

std::optional<EstimatorFunction> solve_estimator(const Game& game, Action a, Action b,
                                                 ActionSet support) {
  EstimatorFunction out(a, b);
  if (a == b) return out;
  // var_index below relies on sorted, duplicate-free variables.
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const std::size_t e = game.num_outcomes();

  // One variable per (c, f) realised by some outcome in c's feedback row.
  std::vector<std::pair<Action, Symbol>> vars;
  for (Action c : support) {
    std::vector<Symbol> seen;
    for (Outcome i = 0; i < e; ++i) seen.push_back(game.feedback(c, i));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (Symbol f : seen) vars.emplace_back(c, f);
  }
  const std::size_t nv = vars.size();
  auto var_index = [&](Action c, Symbol f) {
    return static_cast<std::size_t>(
        std::lower_bound(vars.begin(), vars.end(), std::make_pair(c, f)) - vars.begin());
  };

  // Layout: v (free) | t | s (|v| bounds for the second stage).
  const std::size_t t_col = nv;
  lp::Problem prob;
  prob.num_vars = 2 * nv + 1;
  prob.free.assign(prob.num_vars, false);
  for (std::size_t j = 0; j < nv; ++j) prob.free[j] = true;
  for (Outcome i = 0; i < e; ++i) {
    RationalVector row(prob.num_vars);
    for (Action c : support) row[var_index(c, game.feedback(c, i))] += 1;
    prob.add(std::move(row), lp::Relation::kEqual, game.loss(a, i) - game.loss(b, i));
  }
  for (std::size_t j = 0; j < nv; ++j) {
    RationalVector up(prob.num_vars), down(prob.num_vars);
    up[j] = 1;
    up[t_col] = -1;
    down[j] = -1;
    down[t_col] = -1;
    prob.add(std::move(up), lp::Relation::kLessEqual, Rational());
    prob.add(std::move(down), lp::Relation::kLessEqual, Rational());
  }
  prob.objective.assign(prob.num_vars, Rational());
  prob.objective[t_col] = 1;
  const lp::Result first = lp::solve(prob);
  if (first.status != lp::Status::kOptimal) return std::nullopt;

  // Second stage: pin t to its optimum, minimise sum |v|.
  RationalVector pin(prob.num_vars);
  pin[t_col] = 1;
  prob.add(std::move(pin), lp::Relation::kEqual, first.value);
  for (std::size_t j = 0; j < nv; ++j) {
    RationalVector up(prob.num_vars), down(prob.num_vars);
    up[j] = 1;
    up[nv + 1 + j] = -1;
    down[j] = -1;
    down[nv + 1 + j] = -1;
    prob.add(std::move(up), lp::Relation::kLessEqual, Rational());
    prob.add(std::move(down), lp::Relation::kLessEqual, Rational());
  }
  prob.objective.assign(prob.num_vars, Rational());
  for (std::size_t j = 0; j < nv; ++j) prob.objective[nv + 1 + j] = 1;
  const lp::Result second = lp::solve(prob);
  if (second.status != lp::Status::kOptimal) {
    throw NumericError("estimator LP: second stage failed after a feasible first stage");
  }
  for (std::size_t j = 0; j < nv; ++j) out.set(vars[j].first, vars[j].second, second.x[j]);
  return out;
}

EstimatorFunction pairwise_estimator_bounded(const Game& game, Action a, Action b) {
  EstimatorFunction out(a, b);
  if (a == b) return out;
  const std::size_t f = game.num_symbols();
  const std::size_t e = game.num_outcomes();

  // Bipartite graph on {a, b} x [F]; vertex id: side * F + symbol.
  struct Edge {
    std::size_t to;
    Outcome outcome;
  };
  std::vector<std::vector<Edge>> adj(2 * f);
  std::vector<Rational> delta(e);
  for (Outcome i = 0; i < e; ++i) {
    const std::size_t u = game.feedback(a, i), w = f + game.feedback(b, i);
    adj[u].push_back({w, i});
    adj[w].push_back({u, i});
    delta[i] = game.loss(a, i) - game.loss(b, i);
  }

  std::vector<std::optional<Rational>> val(2 * f);
  std::vector<int> component(2 * f, -1);
  int ncomp = 0;
  for (std::size_t root = 0; root < f; ++root) {
    if (adj[root].empty() || component[root] >= 0) continue;
    val[root] = Rational();
    component[root] = ncomp;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const Edge& edge : adj[u]) {
        const Rational want = delta[edge.outcome] - *val[u];
        if (!val[edge.to]) {
          val[edge.to] = want;
          component[edge.to] = ncomp;
          queue.push_back(edge.to);
        } else if (*val[edge.to] != want) {
          throw PreconditionError("actions " + std::to_string(a + 1) + " and " +
                                  std::to_string(b + 1) + " are not pairwise observable");
        }
      }
    }
    ++ncomp;
  }

  // Centre a-side values of each component; compensate on the b side.
  for (int comp = 0; comp < ncomp; ++comp) {
    std::optional<Rational> lo, hi;
    for (std::size_t s = 0; s < f; ++s) {
      if (component[s] != comp) continue;
      if (!lo || *val[s] < *lo) lo = *val[s];
      if (!hi || *val[s] > *hi) hi = *val[s];
    }
    const Rational shift = -(*lo + *hi) / Rational(2);
    for (std::size_t v = 0; v < 2 * f; ++v) {
      if (component[v] != comp) continue;
      *val[v] += v < f ? shift : -shift;
    }
  }
  for (std::size_t s = 0; s < f; ++s) {
    if (val[s]) out.set(a, s, *val[s]);
    if (val[f + s]) out.set(b, s, *val[f + s]);
  }
  return out;
}

// -- Report ------------------------------------------------------------------------

const PairObservability* ObservabilityReport::find_neighbor(Action a, Action b) const {
  const ActionPair p = ordered_pair(a, b);
  for (const auto& x : neighbor_pairs) {
    if (x.pair == p) return &x;
  }
  return nullptr;
}

const PairObservability* ObservabilityReport::find_weak(Action a, Action b) const {
  const ActionPair p = ordered_pair(a, b);
  for (const auto& x : weak_pairs) {
    if (x.pair == p) return &x;
  }
  return nullptr;
}

ObservabilityReport observability_report(const Game& game, const NeighborStructure& ns) {
  ObservabilityReport rep;
  ActionSet all(game.num_actions());
  for (Action c = 0; c < all.size(); ++c) all[c] = c;

  std::optional<Rational> v_local, v_global;
  for (const auto& [a, b] : ns.neighbor_pairs) {
    PairObservability po;
    po.pair = {a, b};
    po.global_estimator = solve_estimator(game, a, b, all);
    po.local_estimator = solve_estimator(game, a, b, ns.members(a, b));
    po.pairwise_estimator = solve_estimator(game, a, b, {a, b});
    po.global = po.global_estimator.has_value();
    po.local = po.local_estimator.has_value();
    po.pairwise = po.pairwise_estimator.has_value();
    rep.globally_observable &= *po.global;
    rep.locally_observable &= *po.local;
    if (po.local_estimator) v_local = std::max(v_local.value_or(Rational()), po.local_estimator->norm());
    if (po.global_estimator) v_global = std::max(v_global.value_or(Rational()), po.global_estimator->norm());
    rep.neighbor_pairs.push_back(std::move(po));
  }
  if (rep.locally_observable) {
    rep.v_max = v_local.value_or(Rational());
  } else if (rep.globally_observable) {
    rep.v_max = v_global;
  }

  Rational v_loc;
  for (const auto& [a, b] : ns.weak_pairs) {
    PairObservability po;
    po.pair = {a, b};
    po.pairwise_estimator = solve_estimator(game, a, b, {a, b});
    po.pairwise = po.pairwise_estimator.has_value();
    rep.point_locally_observable &= *po.pairwise;
    if (po.pairwise_estimator) v_loc = std::max(v_loc, po.pairwise_estimator->norm());
    rep.weak_pairs.push_back(std::move(po));
  }
  if (rep.point_locally_observable) rep.v_loc = v_loc;
  return rep;
}

}  // namespace pmkit
