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

namespace pmkit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrivial: return "trivial";
    case Verdict::kEasy: return "easy";
    case Verdict::kHard: return "hard";
    case Verdict::kHopeless: return "hopeless";
  }
  return "?";
}

GameClass classify(const Game&, const Taxonomy& tax, const NeighborStructure& ns,
                   const ObservabilityReport& report) {
  GameClass out;
  if (ns.neighbor_pairs.empty()) {
    out.verdict = Verdict::kTrivial;
    const ActionSet pareto = tax.of_kind(ActionKind::kPareto);
    if (!pareto.empty()) out.optimal_action = pareto.front();
    return out;
  }
  if (report.locally_observable) {
    out.verdict = Verdict::kEasy;
    return out;
  }
  if (report.globally_observable) {
    out.verdict = Verdict::kHard;
    for (const auto& po : report.neighbor_pairs) {
      if (!*po.local) {
        out.witness = po.pair;
        break;
      }
    }
    return out;
  }
  out.verdict = Verdict::kHopeless;
  for (const auto& po : report.neighbor_pairs) {
    if (!*po.global) {
      out.witness = po.pair;
      break;
    }
  }
  return out;
}

GameClass classify(const Game& game) {
  const Taxonomy tax = action_taxonomy(game);
  const NeighborStructure ns = neighbor_structure(game, tax);
  return classify(game, tax, ns, observability_report(game, ns));
}

}  // namespace pmkit
