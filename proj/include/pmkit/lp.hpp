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

#ifndef PMKIT_LP_HPP_
#define PMKIT_LP_HPP_

#include <cstddef>
#include <vector>

#include "pmkit/rational.hpp"

namespace pmkit::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMinimize, kMaximize };
enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Constraint {
  RationalVector coeffs;  // one entry per variable
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// Linear program over exact rationals. Variables are nonnegative unless
// flagged free.
struct Problem {
  std::size_t num_vars = 0;
  std::vector<bool> free;  // empty means "all nonnegative"
  std::vector<Constraint> constraints;
  RationalVector objective;  // empty means "feasibility only"
  Sense sense = Sense::kMinimize;

  void add(RationalVector coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

struct Result {
  Status status = Status::kInfeasible;
  Rational value;
  RationalVector x;
};

// Two-phase dense tableau simplex with Bland's anti-cycling rule. Exact,
// hence deterministic: the returned vertex is a function of the input only.
Result solve(const Problem& problem);

}  // namespace pmkit::lp

#endif  // PMKIT_LP_HPP_
