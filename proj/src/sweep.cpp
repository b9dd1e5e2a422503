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

#include "pmkit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>
#include "pmkit/error.hpp"
#include "pmkit/nw2.hpp"
#include "pmkit/relexp3.hpp"

namespace pmkit {

const char* to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kNW2: return "nw2";
    case PolicyKind::kNW2Debiased: return "nw2-debiased";
    case PolicyKind::kRelExp3: return "relexp3";
  }
  return "?";
}

PolicyKind parse_policy_kind(std::string_view text) {
  if (text == "nw2") return PolicyKind::kNW2;
  if (text == "nw2-debiased") return PolicyKind::kNW2Debiased;
  if (text == "relexp3") return PolicyKind::kRelExp3;
  throw ParseError("unknown policy '" + std::string(text) + "'");
}

std::unique_ptr<Policy> make_policy(PolicyKind kind, const Game& game, const GameAnalysis& analysis,
                                    const PolicyOptions& options, std::size_t horizon) {
  if (kind == PolicyKind::kRelExp3) {
    if (options.gamma || options.delta) throw PreconditionError("relexp3 takes no gamma or delta");
    RXConfig config;
    if (options.epsilon) config.epsilon = *options.epsilon;
    if (options.eta) {
      const double eta = *options.eta;
      config.eta_schedule = [eta](std::size_t) { return eta; };
    }
    return std::make_unique<RelExp3Policy>(game, analysis, std::move(config));
  }
  if (options.epsilon) throw PreconditionError("nw2 takes no epsilon");
  NW2Config config;
  config.eta = options.eta;
  config.gamma = options.gamma;
  if (options.delta) config.delta = *options.delta;
  config.horizon = horizon;
  config.bias_correction = kind == PolicyKind::kNW2;
  return std::make_unique<NW2Policy>(game, analysis, config);
}

SlopeFit fit_loglog_slope(const std::vector<double>& n, const std::vector<double>& mean) {
  if (n.size() != mean.size()) throw PreconditionError("fit_loglog_slope: size mismatch");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (mean[i] > 0 && n[i] > 0) {
      x.push_back(std::log(n[i]));
      y.push_back(std::log(mean[i]));
    }
  }
  SlopeFit fit;
  fit.points = x.size();
  if (x.empty()) return fit;
  const double m = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const bool flat = std::all_of(y.begin(), y.end(), [&](double v) { return v == y.front(); });
  fit.slope = (sxx > 0 && !flat) ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    fit.residual += r * r;
  }
  return fit;
}

SweepResult run_sweep(const Game& game, const GameAnalysis& analysis, const Environment& env,
                      const SweepSpec& spec) {
  if (spec.horizons.empty()) throw PreconditionError("sweep: no horizons");
  for (std::size_t i = 1; i < spec.horizons.size(); ++i) {
    if (spec.horizons[i] <= spec.horizons[i - 1]) {
      throw PreconditionError("sweep: horizons must be strictly increasing");
    }
  }
  if (spec.horizons.front() == 0) throw PreconditionError("sweep: horizons must be positive");
  if (spec.seeds == 0) throw PreconditionError("sweep: seeds must be at least 1");
  // Surface refusals before any work is scheduled.
  make_policy(spec.policy, game, analysis, spec.options, spec.horizons.front());

  SweepResult result;
  for (std::size_t n : spec.horizons) {
    for (std::size_t s = 0; s < spec.seeds; ++s) result.cells.push_back({n, s, 0.0, false});
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      if (failed.load()) return;
      const std::size_t idx = next.fetch_add(1);
      if (idx >= result.cells.size()) return;
      SweepCell& cell = result.cells[idx];
      try {
        auto policy = make_policy(spec.policy, game, analysis, spec.options, cell.n);
        const Trajectory traj = run_episode(game, *policy, env, cell.n, spec.base_seed, cell.seed);
        cell.regret = regret(game, traj).value();
        cell.done = true;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, result.cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  result.error = first_error;

  std::vector<double> ns, means;
  for (std::size_t n : spec.horizons) {
    std::vector<double> r;
    for (const auto& c : result.cells) {
      if (c.n == n && c.done) r.push_back(c.regret);
    }
    if (r.empty()) continue;
    SweepSummary s;
    s.n = n;
    for (double x : r) s.mean += x;
    s.mean /= static_cast<double>(r.size());
    if (r.size() > 1) {
      double ss = 0;
      for (double x : r) ss += (x - s.mean) * (x - s.mean);
      s.stddev = std::sqrt(ss / static_cast<double>(r.size() - 1));
    }
    result.summary.push_back(s);
    ns.push_back(static_cast<double>(n));
    means.push_back(s.mean);
  }
  result.fit = fit_loglog_slope(ns, means);
  return result;
}

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "# pmkit " << PMKIT_VERSION << "\n";
  os << "n,seed,regret\n";
  for (const auto& c : result.cells) {
    if (c.done) os << c.n << ',' << c.seed << ',' << num(c.regret) << '\n';
  }
}

void write_summary_csv(std::ostream& os, const SweepResult& result) {
  os << "# pmkit " << PMKIT_VERSION << "\n";
  os << "n,mean_regret,std_regret\n";
  for (const auto& s : result.summary) os << s.n << ',' << num(s.mean) << ',' << num(s.stddev) << '\n';
}

std::string sweep_report_json(const Game& game, const SweepSpec& spec, const SweepResult& result) {
  nlohmann::ordered_json j;
  j["game"] = game.name();
  j["policy"] = to_string(spec.policy);
  j["horizons"] = spec.horizons;
  j["seeds"] = spec.seeds;
  j["base_seed"] = spec.base_seed;
  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  for (const auto& s : result.summary) {
    summary.push_back({{"n", s.n}, {"mean_regret", s.mean}, {"std_regret", s.stddev}});
  }
  j["summary"] = summary;
  j["fitted_slope"] = result.fit.slope;
  j["fit_intercept"] = result.fit.intercept;
  j["fit_residual"] = result.fit.residual;
  j["fit_points"] = result.fit.points;
  j["complete"] = !result.error;
  return j.dump(2);
}

}  // namespace pmkit
