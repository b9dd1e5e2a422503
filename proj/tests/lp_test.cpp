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

#include <gtest/gtest.h>

#include <random>

namespace pmkit::lp {
namespace {

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

TEST(Lp, TextbookMaximisation) {
  // max 3x + 5y  s.t. x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6).
  Problem p;
  p.num_vars = 2;
  p.sense = Sense::kMaximize;
  p.objective = rv({3, 5});
  p.add(rv({1, 0}), Relation::kLessEqual, 4);
  p.add(rv({0, 2}), Relation::kLessEqual, 12);
  p.add(rv({3, 2}), Relation::kLessEqual, 18);
  const Result r = solve(p);
  ASSERT_EQ(r.status, Status::kOptimal);
  EXPECT_EQ(r.value, Rational(36));
  EXPECT_EQ(r.x, rv({2, 6}));
}

TEST(Lp, EqualityAndGreaterEqual) {
  // min x + y  s.t. x + 2y = 3, x >= 1/2.
  Problem p;
  p.num_vars = 2;
  p.objective = rv({1, 1});
  p.add(rv({1, 2}), Relation::kEqual, 3);
  p.add(rv({1, 0}), Relation::kGreaterEqual, Rational(1, 2));
  const Result r = solve(p);
  ASSERT_EQ(r.status, Status::kOptimal);
  EXPECT_EQ(r.value, Rational(7, 4));
  EXPECT_EQ(r.x[0], Rational(1, 2));
  EXPECT_EQ(r.x[1], Rational(5, 4));
}

TEST(Lp, Infeasible) {
  Problem p;
  p.num_vars = 1;
  p.add(rv({1}), Relation::kLessEqual, 1);
  p.add(rv({1}), Relation::kGreaterEqual, 2);
  EXPECT_EQ(solve(p).status, Status::kInfeasible);
}

TEST(Lp, Unbounded) {
  Problem p;
  p.num_vars = 2;
  p.sense = Sense::kMaximize;
  p.objective = rv({1, 0});
  p.add(rv({1, -1}), Relation::kLessEqual, 1);
  EXPECT_EQ(solve(p).status, Status::kUnbounded);
}

TEST(Lp, FreeVariables) {
  // min x with x free and x >= -5/2.
  Problem p;
  p.num_vars = 1;
  p.free = {true};
  p.objective = rv({1});
  p.add(rv({1}), Relation::kGreaterEqual, Rational(-5, 2));
  const Result r = solve(p);
  ASSERT_EQ(r.status, Status::kOptimal);
  EXPECT_EQ(r.x[0], Rational(-5, 2));
}

TEST(Lp, FeasibilityOnly) {
  Problem p;
  p.num_vars = 3;
  p.add(rv({1, 1, 1}), Relation::kEqual, 1);
  p.add(rv({1, -1, 0}), Relation::kEqual, 0);
  const Result r = solve(p);
  ASSERT_EQ(r.status, Status::kOptimal);
  EXPECT_EQ(r.x[0] + r.x[1] + r.x[2], Rational(1));
  EXPECT_EQ(r.x[0], r.x[1]);
}

TEST(Lp, DegenerateCyclingExample) {
  // Beale's example, on which the largest-coefficient rule cycles.
  Problem p;
  p.num_vars = 4;
  p.objective = {Rational(-3, 4), Rational(150), Rational(-1, 50), Rational(6)};
  p.add({Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)}, Relation::kLessEqual, 0);
  p.add({Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)}, Relation::kLessEqual, 0);
  p.add({Rational(0), Rational(0), Rational(1), Rational(0)}, Relation::kLessEqual, 1);
  const Result r = solve(p);
  ASSERT_EQ(r.status, Status::kOptimal);
  EXPECT_EQ(r.value, Rational(-1, 20));
}

// Two-variable programs against brute-force enumeration of constraint-pair
// intersections.
TEST(Lp, RandomTwoVariableProgramsMatchVertexEnumeration) {
  std::mt19937_64 gen(99);
  auto coef = [&] { return Rational(static_cast<long>(gen() % 11) - 5, 1 + static_cast<long>(gen() % 4)); };
  for (int trial = 0; trial < 300; ++trial) {
    Problem p;
    p.num_vars = 2;
    p.sense = Sense::kMaximize;
    p.objective = {coef(), coef()};
    // Box keeps everything bounded.
    p.add(rv({1, 0}), Relation::kLessEqual, 10);
    p.add(rv({0, 1}), Relation::kLessEqual, 10);
    for (int c = 0; c < 3; ++c) p.add({coef(), coef()}, Relation::kLessEqual, Rational(static_cast<long>(gen() % 8)));

    // Lines: all constraints plus x = 0 and y = 0.
    std::vector<std::pair<RationalVector, Rational>> lines;
    for (const auto& c : p.constraints) lines.push_back({c.coeffs, c.rhs});
    lines.push_back({rv({1, 0}), 0});
    lines.push_back({rv({0, 1}), 0});
    std::optional<Rational> best;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const auto& [a, r1] = lines[i];
        const auto& [b, r2] = lines[j];
        const Rational det = a[0] * b[1] - a[1] * b[0];
        if (det.is_zero()) continue;
        const Rational x = (r1 * b[1] - a[1] * r2) / det;
        const Rational y = (a[0] * r2 - r1 * b[0]) / det;
        bool ok = x.sign() >= 0 && y.sign() >= 0;
        for (const auto& c : p.constraints) ok = ok && c.coeffs[0] * x + c.coeffs[1] * y <= c.rhs;
        if (!ok) continue;
        const Rational v = p.objective[0] * x + p.objective[1] * y;
        if (!best || v > *best) best = v;
      }
    }
    const Result r = solve(p);
    ASSERT_EQ(r.status, best ? Status::kOptimal : Status::kInfeasible) << trial;
    if (best) {
      EXPECT_EQ(r.value, *best) << trial;
      EXPECT_EQ(p.objective[0] * r.x[0] + p.objective[1] * r.x[1], r.value);
    }
  }
}

}  // namespace
}  // namespace pmkit::lp
