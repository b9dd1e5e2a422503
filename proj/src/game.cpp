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

#include "pmkit/game.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include "pmkit/error.hpp"

namespace pmkit {
namespace {

using nlohmann::json;

std::string loc(std::string_view matrix, std::size_t r, std::size_t c) {
  std::ostringstream os;
  os << matrix << "[" << r + 1 << "][" << c + 1 << "]";
  return os.str();
}

std::string loc(std::string_view matrix, std::size_t r) {
  std::ostringstream os;
  os << matrix << "[" << r + 1 << "]";
  return os.str();
}

Rational loss_entry(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) {
    // Shortest round-trip decimal text of the parsed number, read exactly.
    return Rational::parse(j.dump());
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": loss entry must be a number or a \"p/q\" string");
}

const Rational kZero(0);
const Rational kOne(1);

}  // namespace

ValidationReport validate(const GameData& data) {
  ValidationReport report;
  auto issue = [&](std::string where, std::string what) {
    report.issues.push_back({std::move(where), std::move(what)});
  };

  const std::size_t k = data.loss.size();
  if (k == 0) issue("loss", "game needs at least one action");
  if (data.feedback.size() != k) {
    issue("feedback", "dimension mismatch: " + std::to_string(k) +
                          " loss rows but " +
                          std::to_string(data.feedback.size()) +
                          " feedback rows");
  }
  const std::size_t e = k ? data.loss[0].size() : 0;
  if (k && e == 0) issue("loss[1]", "game needs at least one outcome");
  for (std::size_t a = 0; a < k; ++a) {
    if (data.loss[a].size() != e) issue(loc("loss", a), "row length mismatch");
    for (std::size_t i = 0; i < data.loss[a].size(); ++i) {
      const Rational& x = data.loss[a][i];
      if (x < kZero || x > kOne) {
        issue(loc("loss", a, i), "loss entry outside [0,1]");
      }
    }
  }
  long max_symbol = 0;
  for (std::size_t a = 0; a < data.feedback.size(); ++a) {
    if (data.feedback[a].size() != e) {
      issue(loc("feedback", a), "row length mismatch");
    }
    for (std::size_t i = 0; i < data.feedback[a].size(); ++i) {
      const long f = data.feedback[a][i];
      max_symbol = std::max(max_symbol, f);
      if (f < 1) {
        issue(loc("feedback", a, i), "feedback symbol < 1");
      } else if (data.num_symbols &&
                 static_cast<std::size_t>(f) > *data.num_symbols) {
        issue(loc("feedback", a, i), "symbol out of range");
      }
    }
  }
  if (data.num_symbols && *data.num_symbols == 0) {
    issue("F", "symbol count must be positive");
  }
  report.ok = report.issues.empty();
  return report;
}

Game::Game(GameData data) {
  const ValidationReport report = validate(data);
  if (!report.ok) {
    const auto& first = report.issues.front();
    throw ValidationError(first.message + " (" + first.location + ")");
  }
  name_ = std::move(data.name);
  loss_ = std::move(data.loss);
  long max_symbol = 1;
  feedback_.resize(data.feedback.size());
  for (std::size_t a = 0; a < data.feedback.size(); ++a) {
    for (long f : data.feedback[a]) {
      max_symbol = std::max(max_symbol, f);
      feedback_[a].push_back(static_cast<Symbol>(f - 1));
    }
  }
  num_symbols_ = data.num_symbols.value_or(static_cast<std::size_t>(max_symbol));
  loss_d_.reserve(loss_.size());
  for (const auto& row : loss_) loss_d_.push_back(to_doubles(row));
}

GameData Game::data() const {
  GameData d;
  d.name = name_;
  d.num_symbols = num_symbols_;
  d.loss = loss_;
  for (const auto& row : feedback_) {
    std::vector<long> r;
    for (Symbol f : row) r.push_back(static_cast<long>(f) + 1);
    d.feedback.push_back(std::move(r));
  }
  return d;
}

GameData parse_game_data(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("malformed document: expected an object");

  GameData data;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("\"name\" must be a string");
    data.name = it->get<std::string>();
  }
  if (auto it = doc.find("F"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<long>() < 0) {
      throw ParseError("\"F\" must be a non-negative integer");
    }
    data.num_symbols = it->get<std::size_t>();
  }
  auto matrix = [&](const char* key) -> const json& {
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing \"") + key + "\"");
    if (!it->is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of arrays");
    for (const auto& row : *it) {
      if (!row.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of arrays");
    }
    return *it;
  };
  const json& loss = matrix("loss");
  const json& feedback = matrix("feedback");
  for (std::size_t a = 0; a < loss.size(); ++a) {
    RationalVector row;
    for (std::size_t i = 0; i < loss[a].size(); ++i) {
      row.push_back(loss_entry(loss[a][i], loc("loss", a, i)));
    }
    data.loss.push_back(std::move(row));
  }
  for (std::size_t a = 0; a < feedback.size(); ++a) {
    std::vector<long> row;
    for (std::size_t i = 0; i < feedback[a].size(); ++i) {
      const json& f = feedback[a][i];
      if (!f.is_number_integer()) {
        throw ParseError(loc("feedback", a, i) + ": feedback symbol must be an integer");
      }
      row.push_back(f.get<long>());
    }
    data.feedback.push_back(std::move(row));
  }
  return data;
}

Game parse_game(std::string_view text) { return Game(parse_game_data(text)); }

Game load_game(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open game file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

std::string serialize_game(const Game& game) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << json(game.name()).dump() << ",\n";
  os << "  \"F\": " << game.num_symbols() << ",\n";
  os << "  \"loss\": [\n";
  for (Action a = 0; a < game.num_actions(); ++a) {
    os << "    [";
    for (Outcome i = 0; i < game.num_outcomes(); ++i) {
      os << (i ? ", " : "") << '"' << game.loss(a, i).str() << '"';
    }
    os << "]" << (a + 1 < game.num_actions() ? "," : "") << "\n";
  }
  os << "  ],\n";
  os << "  \"feedback\": [\n";
  for (Action a = 0; a < game.num_actions(); ++a) {
    os << "    [";
    for (Outcome i = 0; i < game.num_outcomes(); ++i) {
      os << (i ? ", " : "") << game.feedback(a, i) + 1;
    }
    os << "]" << (a + 1 < game.num_actions() ? "," : "") << "\n";
  }
  os << "  ]\n";
  os << "}\n";
  return os.str();
}

// -- Fixtures ----------------------------------------------------------------

namespace {

RationalMatrix rmat(std::initializer_list<std::initializer_list<const char*>> rows) {
  RationalMatrix m;
  for (const auto& row : rows) {
    RationalVector r;
    for (const char* x : row) r.push_back(Rational::parse(x));
    m.push_back(std::move(r));
  }
  return m;
}

Game spam(const Rational& c, std::string name) {
  if (c < kZero || c > kOne) {
    throw PreconditionError("spam parameter c must lie in [0,1], got " + c.str());
  }
  GameData d;
  d.name = std::move(name);
  d.num_symbols = 2;
  d.loss = {{0, 1}, {1, 0}, {c, c}};
  d.feedback = {{1, 1}, {1, 1}, {1, 2}};
  return Game(std::move(d));
}

Game flower(const Rational& param) {
  if (param.denominator_str() != "1" || param < Rational(2) || param > Rational(1000)) {
    throw PreconditionError("flower requires an integer F in [2, 1000], got " + param.str());
  }
  const long f = std::stol(param.numerator_str());
  const long e = 2 * f - 2;
  GameData d;
  d.name = "flower(" + std::to_string(f) + ")";
  d.num_symbols = static_cast<std::size_t>(f);
  RationalVector l1, l2;
  std::vector<long> phi1, phi2;
  for (long i = 1; i <= e; ++i) {
    l1.push_back(i % 2 == 1 ? 1 : 0);
    l2.push_back(i % 2 == 1 ? 0 : 1);
    // Row 1: 1, 2, 2, 3, 3, ..., F-1, F-1, F.   Row 2: 1, 1, 2, 2, ..., F-1, F-1.
    phi1.push_back(i / 2 + 1);
    phi2.push_back((i + 1) / 2);
  }
  d.loss = {l1, l2};
  d.feedback = {phi1, phi2};
  return Game(std::move(d));
}

}  // namespace

Game fixture(std::string_view name, std::optional<Rational> param) {
  if (name == "spam" || name == "exhibit2") {
    const Rational c = param.value_or(Rational(1, 3));
    return spam(c, std::string(name) + "(" + c.str() + ")");
  }
  if (param && name != "flower") {
    throw PreconditionError("fixture '" + std::string(name) + "' takes no parameter");
  }
  if (name == "hopeless2x2") {
    GameData d;
    d.name = "hopeless2x2";
    d.loss = {{0, 1}, {1, 0}};
    d.feedback = {{1, 1}, {1, 1}};
    return Game(std::move(d));
  }
  if (name == "exhibit1") {
    GameData d;
    d.name = "exhibit1";
    d.loss = rmat({{"1", "1/2", "1/2", "0"}, {"1/2", "1", "0", "1/2"}});
    d.feedback = {{1, 2, 1, 2}, {1, 2, 1, 2}};
    return Game(std::move(d));
  }
  if (name == "exhibit3") {
    GameData d;
    d.name = "exhibit3";
    d.loss = rmat({{"0", "1", "1"}, {"1", "0", "1"}, {"1/2", "1/2", "1/2"}});
    d.feedback = {{1, 1, 1}, {1, 1, 1}, {1, 2, 3}};
    return Game(std::move(d));
  }
  if (name == "exhibit4") {
    GameData d;
    d.name = "exhibit4";
    d.loss = rmat({{"0", "1", "1"},
                   {"1", "0", "1"},
                   {"1/2", "1/2", "1/2"},
                   {"3/4", "1/4", "3/4"},
                   {"1", "1/2", "1/2"},
                   {"1", "1/4", "3/4"}});
    // The sixth feedback row is uninformative, like rows 4 and 5.
    d.feedback = {{1, 1, 1}, {1, 1, 1}, {1, 2, 3}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
    return Game(std::move(d));
  }
  if (name == "flower") return flower(param.value_or(Rational(3)));
  throw PreconditionError("unknown fixture '" + std::string(name) + "'");
}

Game fixture_from_ref(std::string_view ref) {
  std::string_view name = ref;
  std::optional<Rational> param;
  if (auto p = ref.find_first_of(":("); p != std::string_view::npos) {
    name = ref.substr(0, p);
    std::string_view rest = ref.substr(p + 1);
    if (ref[p] == '(') {
      if (rest.empty() || rest.back() != ')') {
        throw ParseError("malformed fixture reference '" + std::string(ref) + "'");
      }
      rest.remove_suffix(1);
    }
    param = Rational::parse(rest);
  }
  return fixture(name, param);
}

std::vector<std::string> fixture_names() {
  return {"spam", "hopeless2x2", "exhibit1", "exhibit2", "exhibit3", "exhibit4", "flower"};
}

Game permute_actions(const Game& game, const std::vector<Action>& order) {
  GameData src = game.data();
  GameData d;
  d.name = src.name;
  d.num_symbols = src.num_symbols;
  for (Action a : order) {
    d.loss.push_back(src.loss.at(a));
    d.feedback.push_back(src.feedback.at(a));
  }
  return Game(std::move(d));
}

}  // namespace pmkit
