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

#include "pmkit/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pmkit/error.hpp"
#include "pmkit/linalg.hpp"
#include "pmkit/lp.hpp"

namespace pmkit {
namespace {

lp::Problem simplex_problem(const Polytope& p) {
  const std::size_t e = p.ambient_dim();
  lp::Problem prob;
  prob.num_vars = e;
  prob.add(RationalVector(e, Rational(1)), lp::Relation::kEqual, Rational(1));
  for (const auto& [row, rhs] : p.rows()) prob.add(row, lp::Relation::kLessEqual, rhs);
  return prob;
}

RationalVector difference(const RationalVector& a, const RationalVector& b) {
  RationalVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

}  // namespace

// -- Polytope -----------------------------------------------------------------

Polytope Polytope::intersect(const Polytope& other) const {
  Polytope out = *this;
  for (const auto& r : other.rows_) out.rows_.push_back(r);
  return out;
}

std::optional<RationalVector> Polytope::feasible_point() const {
  lp::Result r = lp::solve(simplex_problem(*this));
  if (r.status != lp::Status::kOptimal) return std::nullopt;
  return std::move(r.x);
}

std::optional<std::pair<Rational, RationalVector>> Polytope::maximize(
    const RationalVector& direction) const {
  lp::Problem prob = simplex_problem(*this);
  prob.objective = direction;
  prob.sense = lp::Sense::kMaximize;
  lp::Result r = lp::solve(prob);
  // The simplex is bounded, so the only failure mode is infeasibility.
  if (r.status != lp::Status::kOptimal) return std::nullopt;
  return std::make_pair(std::move(r.value), std::move(r.x));
}

int Polytope::dimension(std::vector<RationalVector>* points) const {
  auto p0 = feasible_point();
  if (!p0) {
    if (points) points->clear();
    return -1;
  }
  std::vector<RationalVector> pts{*p0};
  for (;;) {
    // Directions orthogonal to the current hull and to the all-ones vector
    // (the polytope lives in the hyperplane sum(u) = 1).
    RationalMatrix span{RationalVector(dim_, Rational(1))};
    for (std::size_t i = 1; i < pts.size(); ++i) span.push_back(difference(pts[i], pts[0]));
    const RationalMatrix complement = linalg::null_space(span, dim_);
    bool grown = false;
    for (const RationalVector& w : complement) {
      const Rational base = dot(w, pts[0]);
      RationalVector neg(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
      for (const RationalVector* dir : std::initializer_list<const RationalVector*>{&w, &neg}) {
        auto best = maximize(*dir);
        const Rational ref = dir == &w ? base : -base;
        if (best && best->first > ref) {
          pts.push_back(std::move(best->second));
          grown = true;
          break;
        }
      }
      if (grown) break;
    }
    if (!grown) break;
  }
  if (points) *points = pts;
  return static_cast<int>(pts.size()) - 1;
}

std::vector<RationalVector> Polytope::vertices() const {
  const std::size_t e = dim_;
  // Inequalities: extra rows, then -u_i <= 0.
  std::vector<std::pair<RationalVector, Rational>> ineq = rows_;
  for (std::size_t i = 0; i < e; ++i) {
    RationalVector r(e);
    r[i] = -1;
    ineq.push_back({std::move(r), Rational()});
  }
  const std::size_t n = ineq.size();
  const std::size_t need = e - 1;  // plus the sum(u) = 1 equation
  if (need > n) return {};

  // Combination budget.
  double combos = 1;
  for (std::size_t i = 0; i < need; ++i) combos = combos * double(n - i) / double(i + 1);
  if (combos > 2e6) throw PreconditionError("vertex enumeration too large");

  std::set<RationalVector> found;
  std::vector<std::size_t> idx(need);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == need) {
      RationalMatrix m{RationalVector(e, Rational(1))};
      RationalVector b{Rational(1)};
      for (std::size_t k : idx) {
        m.push_back(ineq[k].first);
        b.push_back(ineq[k].second);
      }
      if (auto x = linalg::solve_unique(m, b, e); x && contains(*x)) found.insert(*x);
      return;
    }
    for (std::size_t k = start; k < n; ++k) {
      idx[depth] = k;
      rec(depth + 1, k + 1);
    }
  };
  rec(0, 0);
  return {found.begin(), found.end()};
}

bool Polytope::contains(const RationalVector& u) const {
  if (u.size() != dim_) return false;
  Rational sum;
  for (const auto& x : u) {
    if (x.sign() < 0) return false;
    sum += x;
  }
  if (sum != Rational(1)) return false;
  for (const auto& [row, rhs] : rows_) {
    if (dot(row, u) > rhs) return false;
  }
  return true;
}

// -- Cells --------------------------------------------------------------------

Polytope cell(const Game& game, Action a) {
  Polytope p(game.num_outcomes());
  for (Action b = 0; b < game.num_actions(); ++b) {
    if (b == a || game.loss_row(a) == game.loss_row(b)) continue;
    p.add_le(difference(game.loss_row(a), game.loss_row(b)));
  }
  return p;
}

int cell_dimension(const Game& game, Action a) { return cell(game, a).dimension(); }

Polytope joint_cell(const Game& game, const ActionSet& set) {
  Polytope p(game.num_outcomes());
  for (Action a : set) p = p.intersect(cell(game, a));
  return p;
}

const char* to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::kDominated: return "dominated";
    case ActionKind::kDegenerate: return "degenerate";
    case ActionKind::kPareto: return "pareto";
  }
  return "?";
}

ActionSet Taxonomy::of_kind(ActionKind k) const {
  ActionSet out;
  for (Action a = 0; a < kind.size(); ++a) {
    if (kind[a] == k) out.push_back(a);
  }
  return out;
}

Taxonomy action_taxonomy(const Game& game) {
  const std::size_t k = game.num_actions();
  const int full = static_cast<int>(game.num_outcomes()) - 1;
  Taxonomy tax;
  tax.kind.resize(k);
  tax.dimension.resize(k);

  std::vector<bool> assigned(k, false);
  for (Action a = 0; a < k; ++a) {
    if (assigned[a]) continue;
    ActionSet cls{a};
    for (Action b = a + 1; b < k; ++b) {
      if (!assigned[b] && game.loss_row(a) == game.loss_row(b)) {
        cls.push_back(b);
        assigned[b] = true;
      }
    }
    assigned[a] = true;
    // Duplicates share one cell.
    const int dim = cell_dimension(game, a);
    const ActionKind kind = dim < 0 ? ActionKind::kDominated
                            : dim == full ? ActionKind::kPareto
                                          : ActionKind::kDegenerate;
    for (Action c : cls) {
      tax.kind[c] = kind;
      tax.dimension[c] = dim;
    }
    if (kind == ActionKind::kPareto) tax.representatives.push_back(a);
    tax.duplicate_classes.push_back(std::move(cls));
  }
  return tax;
}

// -- Neighbours ---------------------------------------------------------------

bool NeighborStructure::are_neighbors(Action a, Action b) const {
  return std::binary_search(neighbor_pairs.begin(), neighbor_pairs.end(), ordered_pair(a, b));
}

bool NeighborStructure::are_weak_neighbors(Action a, Action b) const {
  return std::binary_search(weak_pairs.begin(), weak_pairs.end(), ordered_pair(a, b));
}

const ActionSet& NeighborStructure::members(Action a, Action b) const {
  static const ActionSet kEmpty;
  if (a == b) return kEmpty;
  auto it = pair_members.find(ordered_pair(a, b));
  return it == pair_members.end() ? kEmpty : it->second;
}

Rational convex_coefficient(const Game& game, Action d, Action a, Action b) {
  const RationalVector& la = game.loss_row(a);
  const RationalVector& lb = game.loss_row(b);
  const RationalVector& ld = game.loss_row(d);
  if (la == lb) throw PreconditionError("convex_coefficient: l_a equals l_b");
  std::optional<Rational> alpha;
  for (std::size_t i = 0; i < la.size(); ++i) {
    const Rational span = la[i] - lb[i];
    if (span.is_zero()) continue;
    alpha = (ld[i] - lb[i]) / span;
    break;
  }
  const Rational one(1);
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (*alpha * la[i] + (one - *alpha) * lb[i] != ld[i]) {
      throw PreconditionError("convex_coefficient: l_d is not on the line through l_a, l_b");
    }
  }
  if (alpha->sign() < 0 || *alpha > one) {
    throw PreconditionError("convex_coefficient: alpha = " + alpha->str() + " outside [0,1]");
  }
  return *alpha;
}

NeighborStructure neighbor_structure(const Game& game, const Taxonomy& tax) {
  const std::size_t k = game.num_actions();
  const int e = static_cast<int>(game.num_outcomes());
  NeighborStructure ns;
  ns.neighborhood.resize(k);

  const ActionSet pareto = tax.of_kind(ActionKind::kPareto);
  std::vector<Polytope> cells;
  cells.reserve(k);
  for (Action a = 0; a < k; ++a) cells.push_back(cell(game, a));

  for (std::size_t x = 0; x < pareto.size(); ++x) {
    for (std::size_t y = x + 1; y < pareto.size(); ++y) {
      const Action a = pareto[x], b = pareto[y];
      const Polytope meet = cells[a].intersect(cells[b]);
      const int dim = meet.dimension();
      ns.intersection_dimension[{a, b}] = dim;
      if (dim < 0) continue;
      ns.weak_pairs.push_back({a, b});
      if (dim != e - 2) continue;
      ns.neighbor_pairs.push_back({a, b});

      ActionSet members;
      for (Action c = 0; c < k; ++c) {
        if (c == a || c == b) {
          members.push_back(c);
          continue;
        }
        if (tax.kind[c] == ActionKind::kDominated) continue;
        // C_a ∩ C_b ⊆ C_c  iff  <l_c - l_a, u> <= 0 on C_a ∩ C_b.
        const auto best = meet.maximize([&] {
          RationalVector d(game.num_outcomes());
          for (std::size_t i = 0; i < d.size(); ++i) d[i] = game.loss(c, i) - game.loss(a, i);
          return d;
        }());
        if (best && best->first.sign() <= 0) members.push_back(c);
      }
      auto& alphas = ns.alpha[{a, b}];
      for (Action d : members) alphas[d] = convex_coefficient(game, d, a, b);
      for (Action d : members) ns.playable.push_back(d);
      ns.pair_members[{a, b}] = std::move(members);
    }
  }

  for (Action a : pareto) {
    ns.neighborhood[a].push_back(a);
  }
  for (const auto& [a, b] : ns.neighbor_pairs) {
    ns.neighborhood[a].push_back(b);
    ns.neighborhood[b].push_back(a);
  }
  for (auto& n : ns.neighborhood) std::sort(n.begin(), n.end());

  std::sort(ns.playable.begin(), ns.playable.end());
  ns.playable.erase(std::unique(ns.playable.begin(), ns.playable.end()), ns.playable.end());
  for (Action d : ns.playable) {
    if (!std::binary_search(tax.representatives.begin(), tax.representatives.end(), d)) {
      ns.degenerate_playable.push_back(d);
    }
  }
  return ns;
}

// -- Point-local games ---------------------------------------------------------

namespace {

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, ActionSet r, ActionSet p,
                   ActionSet x, std::vector<ActionSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of P ∪ X with most neighbours in P.
  Action pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const ActionSet* s : {&p, &x}) {
    for (Action u : *s) {
      std::size_t cnt = 0;
      for (Action v : p) cnt += adj[u][v];
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  }
  const ActionSet candidates = [&] {
    ActionSet c;
    for (Action v : p) {
      if (!adj[pivot][v]) c.push_back(v);
    }
    return c;
  }();
  for (Action v : candidates) {
    ActionSet r2 = r, p2, x2;
    r2.push_back(v);
    std::sort(r2.begin(), r2.end());
    for (Action w : p) {
      if (adj[v][w]) p2.push_back(w);
    }
    for (Action w : x) {
      if (adj[v][w]) x2.push_back(w);
    }
    bron_kerbosch(adj, std::move(r2), std::move(p2), std::move(x2), out);
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
    std::sort(x.begin(), x.end());
  }
}

bool is_subset(const ActionSet& a, const ActionSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

PointLocalStructure point_local_cliques(const Game& game, const NeighborStructure& ns,
                                        std::optional<ActionSet> actions) {
  ActionSet verts;
  if (actions) {
    verts = *actions;
  } else {
    for (Action a = 0; a < ns.neighborhood.size(); ++a) {
      if (!ns.neighborhood[a].empty()) verts.push_back(a);
    }
  }
  std::sort(verts.begin(), verts.end());
  PointLocalStructure out;
  if (verts.empty()) return out;

  const std::size_t k = game.num_actions();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (const auto& [a, b] : ns.weak_pairs) {
    if (std::binary_search(verts.begin(), verts.end(), a) &&
        std::binary_search(verts.begin(), verts.end(), b)) {
      adj[a][b] = adj[b][a] = true;
    }
  }
  std::vector<ActionSet> maximal;
  bron_kerbosch(adj, {}, verts, {}, maximal);

  std::set<ActionSet> accepted;
  for (const ActionSet& clique : maximal) {
    if (!joint_cell(game, clique).empty()) {
      accepted.insert(clique);
      continue;
    }
    out.discrepancies.push_back(clique);
    // Shrink until the joint intersection is nonempty; keep maximal ones.
    std::set<ActionSet> frontier{clique};
    while (!frontier.empty()) {
      std::set<ActionSet> next;
      for (const ActionSet& s : frontier) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          ActionSet sub = s;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          if (sub.empty()) continue;
          if (!joint_cell(game, sub).empty()) {
            accepted.insert(sub);
          } else {
            next.insert(sub);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  for (const ActionSet& s : accepted) {
    bool dominated = false;
    for (const ActionSet& t : accepted) {
      if (t != s && is_subset(s, t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.cliques.push_back(s);
  }
  std::sort(out.discrepancies.begin(), out.discrepancies.end());
  for (const auto& c : out.cliques) out.k_loc = std::max(out.k_loc, c.size());
  return out;
}

}  // namespace pmkit
