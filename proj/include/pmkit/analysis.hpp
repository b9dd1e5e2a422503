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

#ifndef PMKIT_ANALYSIS_HPP_
#define PMKIT_ANALYSIS_HPP_

#include <string>

#include "pmkit/classify.hpp"
#include "pmkit/game.hpp"
#include "pmkit/geometry.hpp"
#include "pmkit/observability.hpp"

namespace pmkit {

// Everything the policies and the CLI need to know about a game, computed
// once with exact arithmetic.
struct GameAnalysis {
  Taxonomy taxonomy;
  NeighborStructure neighbors;
  PointLocalStructure point_local;
  ObservabilityReport observability;
  GameClass game_class;
};

GameAnalysis analyze(const Game& game);

// JSON documents, 1-based indices, rationals as "p/q" strings.
std::string analysis_to_json(const Game& game, const GameAnalysis& analysis, int indent = 2);
std::string class_to_json(const Game& game, const GameClass& cls, int indent = 2);

}  // namespace pmkit

#endif  // PMKIT_ANALYSIS_HPP_
