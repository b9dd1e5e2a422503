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

// pmkit: classify and analyze partial-monitoring games, run NW2 / RelExp3
// episodes and regret sweeps.
//
//   pmkit classify --game games/spam.json
//   pmkit analyze  --game fixture:exhibit4
//   pmkit run      --game fixture:spam:1/3 --policy nw2 --env iid:u=0.3,0.7 --n 4096 --seed 7
//   pmkit sweep    --game fixture:spam:1/3 --policy relexp3 --env iid:u=0.3,0.7 \
//                  --ns 1024,4096,16384 --seeds 20 --out results/spam

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmkit/analysis.hpp"
#include "pmkit/envs.hpp"
#include "pmkit/error.hpp"
#include "pmkit/game.hpp"
#include "pmkit/sweep.hpp"

namespace {

using namespace pmkit;

enum ExitCode {
  kOk = 0,
  kUsage = 2,
  kParse = 3,
  kValidation = 4,
  kRefusal = 5,
  kNumeric = 6,
  kIo = 7,
  kTrivial = 10,
  kEasy = 11,
  kHard = 12,
  kHopeless = 13,
};

class IoError : public Error {
 public:
  using Error::Error;
};

Game load(const std::string& ref) {
  constexpr std::string_view kPrefix = "fixture:";
  if (ref.rfind(kPrefix, 0) == 0) return fixture_from_ref(std::string_view(ref).substr(kPrefix.size()));
  std::ifstream probe(ref);
  if (!probe) throw IoError("cannot open game file '" + ref + "'");
  return load_game(ref);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::size_t parse_index(const std::string& s, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'");
  }
  if (pos != s.size() || v < 1) throw ParseError(std::string("bad ") + what + " '" + s + "'");
  return static_cast<std::size_t>(v - 1);
}

// iid:u=0.3,0.7 | seq:FILE | hard:a,b,delta[,a|b] | flower:F,delta,u|u'
Environment parse_env(const std::string& spec, const Game& game, const GameAnalysis& an) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("environment '" + spec + "' lacks a kind");
  const std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);

  if (kind == "iid") {
    if (rest.rfind("u=", 0) == 0) rest = rest.substr(2);
    RationalVector u;
    for (const auto& x : split(rest, ',')) u.push_back(Rational::parse(x));
    if (u.size() != game.num_outcomes()) {
      throw ParseError("iid environment has " + std::to_string(u.size()) + " entries, game has " +
                       std::to_string(game.num_outcomes()) + " outcomes");
    }
    return Environment::iid(u);
  }
  if (kind == "seq") {
    std::ifstream in(rest);
    if (!in) throw IoError("cannot open outcome sequence '" + rest + "'");
    std::vector<Outcome> seq;
    std::string tok;
    while (in >> tok) {
      for (const auto& piece : split(tok, ',')) {
        if (piece.empty()) continue;
        const std::size_t i = parse_index(piece, "outcome");
        if (i >= game.num_outcomes()) throw ParseError("outcome " + piece + " out of range");
        seq.push_back(i);
      }
    }
    return Environment::fixed(std::move(seq));
  }
  if (kind == "hard") {
    const auto parts = split(rest, ',');
    if (parts.size() != 3 && parts.size() != 4) throw ParseError("hard environment needs a,b,delta[,side]");
    const Action a = parse_index(parts[0], "action"), b = parse_index(parts[1], "action");
    if (a >= game.num_actions() || b >= game.num_actions()) throw ParseError("hard: action out of range");
    const HardPair hp = hard_pair_envs(game, an.neighbors, a, b, Rational::parse(parts[2]));
    const std::string side = parts.size() == 4 ? parts[3] : "a";
    if (side == "a") return Environment::iid(hp.u_a);
    if (side == "b") return Environment::iid(hp.u_b);
    throw ParseError("hard: side must be a or b");
  }
  if (kind == "flower") {
    const auto parts = split(rest, ',');
    if (parts.size() != 3) throw ParseError("flower environment needs F,delta,side");
    const std::size_t f = parse_index(parts[0], "F") + 1;
    const FlowerPair fp = flower_pair_envs(f, Rational::parse(parts[1]));
    if (fp.u.size() != game.num_outcomes()) throw ParseError("flower: F does not match the game");
    if (parts[2] == "u" || parts[2] == "0") return Environment::iid(fp.u);
    if (parts[2] == "u'" || parts[2] == "1") return Environment::iid(fp.u_prime);
    throw ParseError("flower: side must be u or u'");
  }
  throw ParseError("unknown environment kind '" + kind + "'");
}

std::vector<std::size_t> parse_horizons(const std::string& list) {
  std::vector<std::size_t> out;
  for (const auto& s : split(list, ',')) out.push_back(parse_index(s, "horizon") + 1);
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

struct Options {
  std::string game, policy = "nw2", env, ns, out;
  std::size_t n = 0, seeds = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::optional<double> eta, gamma, delta, eps;
};

PolicyOptions policy_options(const Options& o) {
  PolicyOptions p;
  p.eta = o.eta;
  p.gamma = o.gamma;
  p.delta = o.delta;
  p.epsilon = o.eps;
  return p;
}

int cmd_classify(const Options& o) {
  const Game game = load(o.game);
  const GameClass cls = classify(game);
  emit(o.out, class_to_json(game, cls) + "\n");
  switch (cls.verdict) {
    case Verdict::kTrivial: return kTrivial;
    case Verdict::kEasy: return kEasy;
    case Verdict::kHard: return kHard;
    case Verdict::kHopeless: return kHopeless;
  }
  return kOk;
}

int cmd_analyze(const Options& o) {
  const Game game = load(o.game);
  emit(o.out, analysis_to_json(game, analyze(game)) + "\n");
  return kOk;
}

int cmd_run(const Options& o) {
  const Game game = load(o.game);
  const GameAnalysis an = analyze(game);
  const Environment env = parse_env(o.env, game, an);
  auto policy = make_policy(parse_policy_kind(o.policy), game, an, policy_options(o), o.n);
  const Trajectory traj = run_episode(game, *policy, env, o.n, o.seed);
  std::ostringstream csv;
  write_trajectory_csv(csv, game, traj);
  emit(o.out, csv.str());
  const RegretReport rep = regret(game, traj);
  std::cerr << "regret " << rep.regret.str() << " (" << rep.value() << "), best action "
            << rep.best_action + 1 << "\n";
  return kOk;
}

int cmd_sweep(const Options& o) {
  const Game game = load(o.game);
  const GameAnalysis an = analyze(game);
  const Environment env = parse_env(o.env, game, an);
  SweepSpec spec;
  spec.policy = parse_policy_kind(o.policy);
  spec.options = policy_options(o);
  spec.horizons = parse_horizons(o.ns);
  spec.seeds = o.seeds;
  spec.base_seed = o.seed;
  spec.threads = o.threads;
  const SweepResult result = run_sweep(game, an, env, spec);

  std::ostringstream cells, summary;
  write_sweep_csv(cells, result);
  write_summary_csv(summary, result);
  const std::string report = sweep_report_json(game, spec, result) + "\n";
  if (!o.out.empty()) {
    write_file(o.out + ".csv", cells.str());
    write_file(o.out + "_summary.csv", summary.str());
    write_file(o.out + "_report.json", report);
  }
  std::cout << report;
  if (result.error) std::rethrow_exception(result.error);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-monitoring game analysis and regret benchmarks"};
  app.require_subcommand(1);
  Options o;

  auto game_opt = [&](CLI::App* sub) {
    sub->add_option("--game", o.game, "game file, or fixture:NAME[:PARAM]")->required();
    sub->add_option("--out", o.out, "output path (stdout when omitted)");
  };
  auto policy_opts = [&](CLI::App* sub) {
    sub->add_option("--policy", o.policy, "nw2 | nw2-debiased | relexp3");
    sub->add_option("--env", o.env, "iid:u=P1,P2,... | seq:FILE | hard:a,b,delta[,a|b] | flower:F,delta,u|u'")
        ->required();
    sub->add_option("--eta", o.eta, "learning rate override");
    sub->add_option("--gamma", o.gamma, "nw2 exploration override");
    sub->add_option("--delta", o.delta, "nw2 confidence parameter");
    sub->add_option("--eps", o.eps, "relexp3 exponent parameter");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "print the game's class; exit code 10-13");
  game_opt(classify_cmd);
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "export cells, neighbours and estimators as JSON");
  game_opt(analyze_cmd);
  CLI::App* run_cmd = app.add_subcommand("run", "play one episode and write the trajectory CSV");
  game_opt(run_cmd);
  policy_opts(run_cmd);
  run_cmd->add_option("--n", o.n, "horizon")->required()->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", o.seed, "seed");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "seeds x horizons grid with a log-log slope fit");
  game_opt(sweep_cmd);
  policy_opts(sweep_cmd);
  sweep_cmd->add_option("--ns", o.ns, "comma-separated horizons")->required();
  sweep_cmd->add_option("--seeds", o.seeds, "runs per horizon")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", o.seed, "base seed");
  sweep_cmd->add_option("--threads", o.threads, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*analyze_cmd) return cmd_analyze(o);
    if (*run_cmd) return cmd_run(o);
    if (*sweep_cmd) return cmd_sweep(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "invalid game: " << e.what() << "\n";
    return kValidation;
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefusal;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
