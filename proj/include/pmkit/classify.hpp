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

#ifndef PMKIT_CLASSIFY_HPP_
#define PMKIT_CLASSIFY_HPP_

#include <optional>
#include <string>

#include "pmkit/game.hpp"
#include "pmkit/geometry.hpp"
#include "pmkit/observability.hpp"

namespace pmkit {

enum class Verdict { kTrivial, kEasy, kHard, kHopeless };

const char* to_string(Verdict v);

struct GameClass {
  Verdict verdict = Verdict::kTrivial;
  // trivial: an action that is optimal everywhere (lowest-index Pareto action).
  std::optional<Action> optimal_action;
  // hard: a neighbour pair that is globally but not locally observable.
  // hopeless: a neighbour pair with no estimator at all.
  std::optional<ActionPair> witness;
  // easy: every neighbour pair, with its local estimator, lives in the
  // observability report this verdict was computed from.
};

GameClass classify(const Game& game, const Taxonomy& tax, const NeighborStructure& ns,
                   const ObservabilityReport& report);
GameClass classify(const Game& game);

}  // namespace pmkit

#endif  // PMKIT_CLASSIFY_HPP_
