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

#include "pmkit/analysis.hpp"

#include <nlohmann/json.hpp>

namespace pmkit {
namespace {

using json = nlohmann::ordered_json;

json one_based(const ActionSet& s) {
  json out = json::array();
  for (Action a : s) out.push_back(a + 1);
  return out;
}

json one_based(const ActionPair& p) { return json::array({p.first + 1, p.second + 1}); }

json pairs_json(const std::vector<ActionPair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back(one_based(p));
  return out;
}

json estimator_json(const EstimatorFunction& v) {
  json values = json::array();
  for (const auto& [key, x] : v.entries()) {
    values.push_back({{"action", key.first + 1}, {"symbol", key.second + 1}, {"value", x.str()}});
  }
  return {{"norm", v.norm().str()}, {"support", one_based(v.support())}, {"values", values}};
}

json pair_json(const PairObservability& po) {
  json j;
  j["pair"] = one_based(po.pair);
  json est = json::object();
  auto flag = [&](const char* key, const std::optional<bool>& f,
                  const std::optional<EstimatorFunction>& v) {
    if (!f) return;
    j[key] = *f;
    if (v) est[key] = estimator_json(*v);
  };
  flag("global", po.global, po.global_estimator);
  flag("local", po.local, po.local_estimator);
  flag("pairwise", po.pairwise, po.pairwise_estimator);
  j["estimators"] = est;
  return j;
}

json class_json(const GameClass& cls) {
  json j;
  j["verdict"] = to_string(cls.verdict);
  if (cls.optimal_action) j["optimal_action"] = *cls.optimal_action + 1;
  if (cls.witness) j["witness"] = one_based(*cls.witness);
  return j;
}

json header(const Game& game) {
  json j;
  j["game"] = game.name();
  j["K"] = game.num_actions();
  j["E"] = game.num_outcomes();
  j["F"] = game.num_symbols();
  return j;
}

}  // namespace

GameAnalysis analyze(const Game& game) {
  GameAnalysis out;
  out.taxonomy = action_taxonomy(game);
  out.neighbors = neighbor_structure(game, out.taxonomy);
  out.point_local = point_local_cliques(game, out.neighbors);
  out.observability = observability_report(game, out.neighbors);
  out.game_class = classify(game, out.taxonomy, out.neighbors, out.observability);
  return out;
}

std::string class_to_json(const Game& game, const GameClass& cls, int indent) {
  json j = header(game);
  j["class"] = class_json(cls);
  return j.dump(indent);
}

std::string analysis_to_json(const Game& game, const GameAnalysis& an, int indent) {
  json j = header(game);
  j["class"] = class_json(an.game_class);

  const Taxonomy& tax = an.taxonomy;
  json actions = json::array();
  for (Action a = 0; a < game.num_actions(); ++a) {
    actions.push_back({{"action", a + 1},
                       {"kind", to_string(tax.kind[a])},
                       {"cell_dimension", tax.dimension[a]}});
  }
  j["actions"] = actions;
  json dup = json::array();
  for (const auto& c : tax.duplicate_classes) dup.push_back(one_based(c));
  j["duplicate_classes"] = dup;
  j["representatives"] = one_based(tax.representatives);

  const NeighborStructure& ns = an.neighbors;
  j["neighbor_pairs"] = pairs_json(ns.neighbor_pairs);
  j["weak_pairs"] = pairs_json(ns.weak_pairs);
  json members = json::array();
  for (const auto& [pair, set] : ns.pair_members) {
    json alpha = json::object();
    for (const auto& [d, x] : ns.alpha.at(pair)) alpha[std::to_string(d + 1)] = x.str();
    members.push_back({{"pair", one_based(pair)}, {"members", one_based(set)}, {"alpha", alpha}});
  }
  j["pair_members"] = members;
  j["playable"] = one_based(ns.playable);
  j["degenerate_playable"] = one_based(ns.degenerate_playable);

  json cliques = json::array(), disc = json::array();
  for (const auto& c : an.point_local.cliques) cliques.push_back(one_based(c));
  for (const auto& c : an.point_local.discrepancies) disc.push_back(one_based(c));
  j["point_local"] = {{"cliques", cliques}, {"k_loc", an.point_local.k_loc}, {"discrepancies", disc}};

  const ObservabilityReport& rep = an.observability;
  json obs;
  obs["globally_observable"] = rep.globally_observable;
  obs["locally_observable"] = rep.locally_observable;
  obs["point_locally_observable"] = rep.point_locally_observable;
  obs["V"] = rep.v_max ? json(rep.v_max->str()) : json(nullptr);
  obs["V_loc"] = rep.v_loc ? json(rep.v_loc->str()) : json(nullptr);
  json np = json::array(), wp = json::array();
  for (const auto& po : rep.neighbor_pairs) np.push_back(pair_json(po));
  for (const auto& po : rep.weak_pairs) wp.push_back(pair_json(po));
  obs["neighbor_pairs"] = np;
  obs["weak_pairs"] = wp;
  j["observability"] = obs;
  return j.dump(indent);
}

}  // namespace pmkit
