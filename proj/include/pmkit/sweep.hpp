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

#ifndef PMKIT_SWEEP_HPP_
#define PMKIT_SWEEP_HPP_

#include <cstdint>
#include <exception>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pmkit/analysis.hpp"
#include "pmkit/envs.hpp"
#include "pmkit/game.hpp"
#include "pmkit/policy.hpp"

namespace pmkit {

enum class PolicyKind { kNW2, kNW2Debiased, kRelExp3 };

const char* to_string(PolicyKind kind);
// "nw2", "nw2-debiased" or "relexp3"; ParseError otherwise.
PolicyKind parse_policy_kind(std::string_view text);

struct PolicyOptions {
  std::optional<double> eta;    // nw2: fixed eta; relexp3: constant eta_t
  std::optional<double> gamma;  // nw2 only
  std::optional<double> delta;  // nw2 only
  std::optional<double> epsilon;  // relexp3 only
};

std::unique_ptr<Policy> make_policy(PolicyKind kind, const Game& game, const GameAnalysis& analysis,
                                    const PolicyOptions& options, std::size_t horizon);

struct SweepSpec {
  PolicyKind policy = PolicyKind::kNW2;
  PolicyOptions options;
  std::vector<std::size_t> horizons;  // strictly increasing
  std::size_t seeds = 1;
  std::uint64_t base_seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepCell {
  std::size_t n = 0;
  std::size_t seed = 0;  // run index fed to derive_seed
  double regret = 0;
  bool done = false;
};

struct SweepSummary {
  std::size_t n = 0;
  double mean = 0;
  double stddev = 0;  // sample standard deviation, 0 for one seed
};

// Least squares of log(mean) on log(n) over the horizons with positive
// mean regret. Fewer than two such points, or identical means, give slope 0.
struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // sum of squared residuals
  std::size_t points = 0;
};

SlopeFit fit_loglog_slope(const std::vector<double>& n, const std::vector<double>& mean);

struct SweepResult {
  std::vector<SweepCell> cells;  // ordered by (n, seed)
  std::vector<SweepSummary> summary;
  SlopeFit fit;
  // First failure; cells that finished before it keep done = true.
  std::exception_ptr error;
};

// Horizon n, run s uses run_episode(..., base_seed, s); the same run index
// therefore sees the same outcome stream at every horizon.
SweepResult run_sweep(const Game& game, const GameAnalysis& analysis, const Environment& env,
                      const SweepSpec& spec);

void write_sweep_csv(std::ostream& os, const SweepResult& result);          // n,seed,regret
void write_summary_csv(std::ostream& os, const SweepResult& result);        // n,mean_regret,std_regret
std::string sweep_report_json(const Game& game, const SweepSpec& spec, const SweepResult& result);

}  // namespace pmkit

#endif  // PMKIT_SWEEP_HPP_
