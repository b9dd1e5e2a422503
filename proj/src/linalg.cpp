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

#include "pmkit/linalg.hpp"

#include "pmkit/error.hpp"

namespace pmkit::linalg {

Rref rref(RationalMatrix m, std::size_t cols) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m, std::size_t cols) {
  return rref(m, cols).pivots.size();
}

RationalMatrix null_space(const RationalMatrix& m, std::size_t cols) {
  const Rref r = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_unique(const RationalMatrix& m,
                                           const RationalVector& b,
                                           std::size_t cols) {
  if (m.size() != b.size()) throw PreconditionError("solve_unique: size mismatch");
  RationalMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Rref r = rref(std::move(aug), cols + 1);
  if (!r.pivots.empty() && r.pivots.back() == cols) return std::nullopt;  // inconsistent
  if (r.pivots.size() != cols) return std::nullopt;                       // not unique
  RationalVector x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[r.pivots[i]] = r.matrix[i][cols];
  return x;
}

RationalVector project_onto_row_space(const RationalMatrix& rows,
                                      const RationalVector& v) {
  const std::size_t n = v.size();
  // Orthonormal-free route: keep an independent subset B of the rows, then
  // solve (B B^T) y = B v and return B^T y.
  const Rref r = rref(rows, n);
  const RationalMatrix& basis = r.matrix;  // same row space, independent rows
  const std::size_t k = basis.size();
  if (k == 0) return RationalVector(n);
  RationalMatrix gram(k, RationalVector(k));
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  const auto y = solve_unique(gram, rhs, k);
  if (!y) throw NumericError("project_onto_row_space: singular Gram matrix");
  RationalVector out(n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[j] += (*y)[i] * basis[i][j];
  }
  return out;
}

}  // namespace pmkit::linalg
