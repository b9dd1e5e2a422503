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

#include "pmkit/lp.hpp"

#include <optional>

#include "pmkit/error.hpp"

namespace pmkit::lp {
namespace {

// Dense tableau. Row i < m holds the constraint, column `rhs_col` its right
// hand side. The last row holds reduced costs (minimisation form) and, in
// `rhs_col`, minus the current objective value.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), t_(rows + 1, RationalVector(cols + 1)), basis_(rows) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][n_]; }
  Rational& cost(std::size_t j) { return t_[m_][j]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }

  // Sets the cost row to c - c_B^T T for the current basis.
  void price(const RationalVector& c) {
    for (std::size_t j = 0; j <= n_; ++j) t_[m_][j] = j < n_ ? c[j] : Rational();
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (!t_[i][j].is_zero()) t_[m_][j] -= cb * t_[i][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& x : t_[r]) {
      if (!x.is_zero()) x /= p;
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_[i][c].is_zero()) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= n_; ++j) {
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
      }
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

  // Bland's rule minimisation over columns [0, allowed).
  Status run(std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (cost(j).sign() < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return Status::kOptimal;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][*enter].sign() <= 0) continue;
        Rational ratio = t_[i][n_] / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return Status::kUnbounded;
      pivot(*leave, *enter);
    }
  }

 private:
  std::size_t m_, n_;
  std::vector<RationalVector> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Result solve(const Problem& problem) {
  const std::size_t nv = problem.num_vars;
  if (!problem.free.empty() && problem.free.size() != nv) {
    throw PreconditionError("lp: free-flag vector has wrong length");
  }
  // Structural columns: one per variable, a second (negative part) per free one.
  std::vector<std::size_t> pos_col(nv), neg_col(nv, SIZE_MAX);
  std::size_t n_struct = 0;
  for (std::size_t j = 0; j < nv; ++j) pos_col[j] = n_struct++;
  for (std::size_t j = 0; j < nv; ++j) {
    if (!problem.free.empty() && problem.free[j]) neg_col[j] = n_struct++;
  }

  const std::size_t m = problem.constraints.size();
  std::size_t n_slack = 0, n_art = 0;
  std::vector<Relation> rel(m);
  std::vector<bool> flip(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    if (c.coeffs.size() != nv) throw PreconditionError("lp: constraint has wrong width");
    flip[i] = c.rhs.sign() < 0;
    rel[i] = c.relation;
    if (flip[i] && rel[i] != Relation::kEqual) {
      rel[i] = rel[i] == Relation::kLessEqual ? Relation::kGreaterEqual : Relation::kLessEqual;
    }
    if (rel[i] != Relation::kEqual) ++n_slack;
    if (rel[i] != Relation::kLessEqual) ++n_art;
  }

  const std::size_t slack0 = n_struct, art0 = n_struct + n_slack;
  const std::size_t ncols = art0 + n_art;
  Tableau tab(m, ncols);
  std::size_t next_slack = slack0, next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    for (std::size_t j = 0; j < nv; ++j) {
      Rational v = flip[i] ? -c.coeffs[j] : c.coeffs[j];
      if (neg_col[j] != SIZE_MAX) tab.at(i, neg_col[j]) = -v;
      tab.at(i, pos_col[j]) = std::move(v);
    }
    tab.rhs(i) = flip[i] ? -c.rhs : c.rhs;
    if (rel[i] == Relation::kLessEqual) {
      tab.at(i, next_slack) = 1;
      tab.basis()[i] = next_slack++;
    } else {
      if (rel[i] == Relation::kGreaterEqual) tab.at(i, next_slack++) = -1;
      tab.at(i, next_art) = 1;
      tab.basis()[i] = next_art++;
    }
  }

  Result result;
  // Phase 1: minimise the sum of artificials.
  if (n_art > 0) {
    RationalVector c1(ncols);
    for (std::size_t j = art0; j < ncols; ++j) c1[j] = 1;
    tab.price(c1);
    tab.run(ncols);
    if (tab.cost(ncols).sign() != 0) {  // -objective != 0
      result.status = Status::kInfeasible;
      return result;
    }
    // Drive zero-valued artificials out of the basis.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis()[i] < art0) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < art0; ++j) {
        if (!tab.at(i, j).is_zero()) {
          col = j;
          break;
        }
      }
      if (col) {
        tab.pivot(i, *col);
        ++i;
      } else {
        tab.drop_row(i);  // redundant equality
      }
    }
  }

  // Phase 2 on structural + slack columns only.
  RationalVector c2(ncols);
  const bool maximize = problem.sense == Sense::kMaximize;
  for (std::size_t j = 0; j < nv && !problem.objective.empty(); ++j) {
    const Rational cj = maximize ? -problem.objective[j] : problem.objective[j];
    c2[pos_col[j]] = cj;
    if (neg_col[j] != SIZE_MAX) c2[neg_col[j]] = -cj;
  }
  tab.price(c2);
  if (tab.run(art0) == Status::kUnbounded) {
    result.status = Status::kUnbounded;
    return result;
  }

  RationalVector col_value(ncols);
  for (std::size_t i = 0; i < tab.rows(); ++i) col_value[tab.basis()[i]] = tab.rhs(i);
  result.x.resize(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    result.x[j] = col_value[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) result.x[j] -= col_value[neg_col[j]];
  }
  result.status = Status::kOptimal;
  if (!problem.objective.empty()) result.value = dot(problem.objective, result.x);
  return result;
}

}  // namespace pmkit::lp
