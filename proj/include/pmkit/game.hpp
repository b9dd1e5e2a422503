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

#ifndef PMKIT_GAME_HPP_
#define PMKIT_GAME_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmkit/rational.hpp"

namespace pmkit {

// Index conventions: inside the library actions, outcomes and feedback
// symbols are 0-based. Documents, CSV files and CLI output are 1-based.
using Action = std::size_t;
using Outcome = std::size_t;
using Symbol = std::size_t;

// Unvalidated game content, as read from a document or assembled by hand.
// May be ragged or otherwise inconsistent; see validate().
struct GameData {
  std::string name;
  std::optional<std::size_t> num_symbols;  // explicit "F" field
  RationalMatrix loss;                      // K rows of E entries
  std::vector<std::vector<long>> feedback;  // K rows of E symbols, 1-based
};

struct ValidationIssue {
  std::string location;  // e.g. "loss[2][1]"
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

ValidationReport validate(const GameData& data);

// A finite partial-monitoring game: loss matrix over exact rationals in
// [0,1] and a feedback matrix over F symbols. Immutable once built.
class Game {
 public:
  // Throws ValidationError carrying the first issue if `data` is invalid.
  explicit Game(GameData data);

  const std::string& name() const { return name_; }
  std::size_t num_actions() const { return loss_.size(); }
  std::size_t num_outcomes() const { return loss_.empty() ? 0 : loss_[0].size(); }
  std::size_t num_symbols() const { return num_symbols_; }

  const RationalMatrix& loss() const { return loss_; }
  const RationalVector& loss_row(Action a) const { return loss_[a]; }
  const Rational& loss(Action a, Outcome i) const { return loss_[a][i]; }
  // 0-based symbol observed when playing `a` against outcome `i`.
  Symbol feedback(Action a, Outcome i) const { return feedback_[a][i]; }
  const std::vector<std::vector<Symbol>>& feedback() const { return feedback_; }

  // Loss rows as doubles, cached for the online loop.
  double loss_d(Action a, Outcome i) const { return loss_d_[a][i]; }

  GameData data() const;

  friend bool operator==(const Game& a, const Game& b) {
    return a.name_ == b.name_ && a.num_symbols_ == b.num_symbols_ &&
           a.loss_ == b.loss_ && a.feedback_ == b.feedback_;
  }

 private:
  std::string name_;
  std::size_t num_symbols_ = 0;
  RationalMatrix loss_;
  std::vector<std::vector<Symbol>> feedback_;
  std::vector<std::vector<double>> loss_d_;
};

// JSON game document. See docs/game_format.md.
GameData parse_game_data(std::string_view text);
Game parse_game(std::string_view text);
Game load_game(const std::string& path);
std::string serialize_game(const Game& game);

// Named fixtures: spam(c), hopeless2x2, exhibit1, exhibit2(c) (alias of
// spam), exhibit3, exhibit4, flower(F). Throws PreconditionError for an
// unknown name or an out-of-range parameter.
Game fixture(std::string_view name, std::optional<Rational> param = {});

// "spam", "spam:1/3", "spam(1/3)", "flower:5" ...
Game fixture_from_ref(std::string_view ref);

std::vector<std::string> fixture_names();

// Permutes actions: row a of the result is row order[a] of `game`.
Game permute_actions(const Game& game, const std::vector<Action>& order);

}  // namespace pmkit

#endif  // PMKIT_GAME_HPP_
