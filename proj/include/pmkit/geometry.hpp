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

#ifndef PMKIT_GEOMETRY_HPP_
#define PMKIT_GEOMETRY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pmkit/game.hpp"
#include "pmkit/rational.hpp"

namespace pmkit {

using ActionPair = std::pair<Action, Action>;  // always first < second
using ActionSet = std::vector<Action>;         // sorted, unique

inline ActionPair ordered_pair(Action a, Action b) {
  return a < b ? ActionPair{a, b} : ActionPair{b, a};
}

// A polytope inside the outcome simplex {u >= 0, sum(u) = 1}, described by
// extra rows <row, u> <= rhs.
class Polytope {
 public:
  explicit Polytope(std::size_t num_outcomes) : dim_(num_outcomes) {}

  void add_le(RationalVector row, Rational rhs = Rational()) {
    rows_.push_back({std::move(row), std::move(rhs)});
  }
  Polytope intersect(const Polytope& other) const;

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<std::pair<RationalVector, Rational>>& rows() const { return rows_; }

  std::optional<RationalVector> feasible_point() const;
  bool empty() const { return !feasible_point().has_value(); }

  // max <direction, u> over the polytope with a maximiser; nullopt if empty.
  std::optional<std::pair<Rational, RationalVector>> maximize(
      const RationalVector& direction) const;

  // Dimension of the affine hull, -1 when empty. If `points` is given it
  // receives dimension + 1 affinely independent members of the polytope.
  int dimension(std::vector<RationalVector>* points = nullptr) const;

  // All vertices, by enumeration of tight constraint sets. Small polytopes
  // only; throws PreconditionError above a fixed combination budget.
  std::vector<RationalVector> vertices() const;

  bool contains(const RationalVector& u) const;

 private:
  std::size_t dim_;
  std::vector<std::pair<RationalVector, Rational>> rows_;
};

// {u in simplex : <l_a - l_b, u> <= 0 for all b}.
Polytope cell(const Game& game, Action a);

int cell_dimension(const Game& game, Action a);

enum class ActionKind { kDominated, kDegenerate, kPareto };

const char* to_string(ActionKind kind);

struct Taxonomy {
  std::vector<ActionKind> kind;
  std::vector<int> dimension;
  // Partition of [K] by equal loss rows, each class sorted, classes ordered
  // by their lowest member.
  std::vector<ActionSet> duplicate_classes;
  // Lowest-index representative of every Pareto duplicate class.
  ActionSet representatives;

  ActionSet of_kind(ActionKind k) const;
  bool is_pareto(Action a) const { return kind[a] == ActionKind::kPareto; }
};

Taxonomy action_taxonomy(const Game& game);

struct NeighborStructure {
  std::vector<ActionPair> neighbor_pairs;  // sorted
  std::vector<ActionPair> weak_pairs;      // sorted, includes neighbor pairs
  std::map<ActionPair, int> intersection_dimension;  // over Pareto pairs
  // N_ab for each neighbor pair: every action whose cell contains C_a ∩ C_b.
  std::map<ActionPair, ActionSet> pair_members;
  // alpha[(a,b)][d] with l_d = alpha l_a + (1 - alpha) l_b, for d in N_ab.
  std::map<ActionPair, std::map<Action, Rational>> alpha;
  // N_a = {a} plus neighbours of a; empty for non-Pareto actions.
  std::vector<ActionSet> neighborhood;
  // Union of N_ab over neighbour pairs, and its part outside the
  // representative set.
  ActionSet playable;
  ActionSet degenerate_playable;

  bool are_neighbors(Action a, Action b) const;
  bool are_weak_neighbors(Action a, Action b) const;
  // N_ab, empty for a == b or non-neighbours.
  const ActionSet& members(Action a, Action b) const;
};

NeighborStructure neighbor_structure(const Game& game, const Taxonomy& tax);

// Unique alpha in [0,1] with l_d = alpha l_a + (1 - alpha) l_b. Throws
// PreconditionError if no such alpha exists.
Rational convex_coefficient(const Game& game, Action d, Action a, Action b);

struct PointLocalStructure {
  std::vector<ActionSet> cliques;  // maximal, sorted lexicographically
  std::size_t k_loc = 0;
  // Maximal cliques of the weak-neighbour graph whose cells share no
  // common point; they were split into maximal jointly-intersecting subsets.
  std::vector<ActionSet> discrepancies;
};

// Point-local games over `actions` (defaults to the Pareto actions).
PointLocalStructure point_local_cliques(const Game& game,
                                        const NeighborStructure& ns,
                                        std::optional<ActionSet> actions = {});

// Intersection of the cells of every action in `set`.
Polytope joint_cell(const Game& game, const ActionSet& set);

}  // namespace pmkit

#endif  // PMKIT_GEOMETRY_HPP_
