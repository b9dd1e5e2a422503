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

#include "pmkit/classify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pmkit/analysis.hpp"
#include <nlohmann/json.hpp>

namespace pmkit {
namespace {

Verdict verdict(const Game& g) { return classify(g).verdict; }

TEST(Classify, SpamFamily) {
  const GameClass trivial = classify(fixture("spam", Rational(0)));
  EXPECT_EQ(trivial.verdict, Verdict::kTrivial);
  EXPECT_EQ(trivial.optimal_action, std::optional<Action>(2));
  for (const Rational& c : {Rational(1, 10), Rational(1, 3), Rational(1, 2)}) {
    EXPECT_EQ(verdict(fixture("spam", c)), Verdict::kEasy) << c;
  }
  for (const Rational& c : {Rational(3, 5), Rational(9, 10)}) {
    const GameClass cls = classify(fixture("spam", c));
    EXPECT_EQ(cls.verdict, Verdict::kHard) << c;
    EXPECT_EQ(cls.witness, std::optional<ActionPair>(ActionPair{0, 1}));
  }
}

TEST(Classify, Hopeless) {
  const GameClass cls = classify(fixture("hopeless2x2"));
  EXPECT_EQ(cls.verdict, Verdict::kHopeless);
  EXPECT_EQ(cls.witness, std::optional<ActionPair>(ActionPair{0, 1}));
}

TEST(Classify, Exhibits) {
  EXPECT_EQ(verdict(fixture("exhibit1")), Verdict::kEasy);
  EXPECT_EQ(verdict(fixture("exhibit3")), Verdict::kEasy);
  const Game ex4 = fixture("exhibit4");
  const GameAnalysis an = analyze(ex4);
  EXPECT_EQ(an.game_class.verdict, Verdict::kEasy);
  EXPECT_EQ(an.neighbors.playable, (ActionSet{0, 1, 2, 3}));
}

TEST(Classify, FlowerIsEasy) {
  for (long f : {2, 3, 5, 8}) EXPECT_EQ(verdict(fixture("flower", Rational(f))), Verdict::kEasy) << f;
}

TEST(Classify, VerdictNames) {
  EXPECT_STREQ(to_string(Verdict::kTrivial), "trivial");
  EXPECT_STREQ(to_string(Verdict::kEasy), "easy");
  EXPECT_STREQ(to_string(Verdict::kHard), "hard");
  EXPECT_STREQ(to_string(Verdict::kHopeless), "hopeless");
}

TEST(Classify, SingleActionIsTrivial) {
  GameData d;
  d.loss = {{Rational(1, 2), 1}};
  d.feedback = {{1, 1}};
  const GameClass cls = classify(Game(d));
  EXPECT_EQ(cls.verdict, Verdict::kTrivial);
  EXPECT_EQ(cls.optimal_action, std::optional<Action>(0));
}

TEST(Classify, EvidenceMatchesReport) {
  const Game g = fixture("spam", Rational(3, 5));
  const GameAnalysis an = analyze(g);
  const auto* p = an.observability.find_neighbor(an.game_class.witness->first, an.game_class.witness->second);
  ASSERT_NE(p, nullptr);
  EXPECT_TRUE(*p->global);
  EXPECT_FALSE(*p->local);
}

TEST(ClassJson, Fields) {
  const Game g = fixture("spam", Rational(3, 5));
  const auto j = nlohmann::json::parse(class_to_json(g, classify(g)));
  EXPECT_EQ(j["class"]["verdict"], "hard");
  EXPECT_EQ(j["class"]["witness"], nlohmann::json::array({1, 2}));
}

TEST(AnalysisJson, RationalsAsStrings) {
  const Game g = fixture("exhibit4");
  const auto j = nlohmann::json::parse(analysis_to_json(g, analyze(g)));
  EXPECT_EQ(j["K"], 6);
  const std::string dump = j.dump();
  EXPECT_NE(dump.find("\"1/2\""), std::string::npos);
}

// -- Invariance ----------------------------------------------------------------------

Game random_game(std::mt19937_64& gen) {
  const std::size_t k = 2 + gen() % 3, e = 2 + gen() % 2, f = 1 + gen() % 3;
  GameData d;
  d.num_symbols = f;
  for (std::size_t a = 0; a < k; ++a) {
    RationalVector row;
    std::vector<long> fb;
    for (std::size_t i = 0; i < e; ++i) {
      row.push_back(Rational(static_cast<long>(gen() % 5), 4));
      fb.push_back(1 + static_cast<long>(gen() % f));
    }
    d.loss.push_back(row);
    d.feedback.push_back(fb);
  }
  return Game(d);
}

std::vector<Game> corpus() {
  std::vector<Game> games = {fixture("spam", Rational(0)), fixture("spam", Rational(1, 3)),
                             fixture("spam", Rational(3, 5)), fixture("hopeless2x2"),
                             fixture("exhibit3"),             fixture("exhibit4")};
  std::mt19937_64 gen(77);
  for (int i = 0; i < 150; ++i) games.push_back(random_game(gen));
  return games;
}

TEST(ClassifyInvariance, ActionPermutation) {
  std::mt19937_64 gen(3);
  std::size_t seen[4] = {0, 0, 0, 0};
  for (const Game& g : corpus()) {
    const GameClass base = classify(g);
    ++seen[static_cast<int>(base.verdict)];
    std::vector<Action> order(g.num_actions());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), gen);
    const Game p = permute_actions(g, order);
    const GameClass cls = classify(p);
    EXPECT_EQ(cls.verdict, base.verdict) << serialize_game(g);
    // Evidence maps back to an equivalent action or pair.
    if (cls.optimal_action) {
      EXPECT_EQ(p.loss_row(*cls.optimal_action), g.loss_row(*base.optimal_action));
    }
    if (cls.witness) {
      const GameAnalysis an = analyze(g);
      const Action a = order[cls.witness->first], b = order[cls.witness->second];
      const auto* pair = an.observability.find_neighbor(a, b);
      ASSERT_NE(pair, nullptr);
      if (cls.verdict == Verdict::kHard) EXPECT_FALSE(*pair->local);
      if (cls.verdict == Verdict::kHopeless) EXPECT_FALSE(*pair->global);
    }
  }
  // The corpus exercises every verdict.
  for (std::size_t n : seen) EXPECT_GT(n, 0u);
}

TEST(ClassifyInvariance, PerRowSymbolRelabelling) {
  std::mt19937_64 gen(4);
  for (const Game& g : corpus()) {
    GameData d = g.data();
    const std::size_t f = g.num_symbols();
    for (auto& row : d.feedback) {
      std::vector<long> perm(f);
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), gen);
      for (auto& s : row) s = perm[s - 1];
    }
    EXPECT_EQ(verdict(Game(d)), verdict(g)) << serialize_game(g);
  }
}

}  // namespace
}  // namespace pmkit
