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

#ifndef PMKIT_LINALG_HPP_
#define PMKIT_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "pmkit/rational.hpp"

// Exact dense linear algebra over the rationals (small matrices only).
namespace pmkit::linalg {

struct Rref {
  RationalMatrix matrix;              // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

// Reduced row echelon form of `m`, whose rows all have length `cols`.
Rref rref(RationalMatrix m, std::size_t cols);

std::size_t rank(const RationalMatrix& m, std::size_t cols);

// Basis of {x : m x = 0}, one vector per free column.
RationalMatrix null_space(const RationalMatrix& m, std::size_t cols);

// Unique solution of m x = b, or nullopt if the system is inconsistent or
// underdetermined.
std::optional<RationalVector> solve_unique(const RationalMatrix& m,
                                           const RationalVector& b,
                                           std::size_t cols);

// Orthogonal projection of `v` onto the row space of `rows`.
RationalVector project_onto_row_space(const RationalMatrix& rows,
                                      const RationalVector& v);

}  // namespace pmkit::linalg

#endif  // PMKIT_LINALG_HPP_
