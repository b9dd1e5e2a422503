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

// Python bindings. Games, environments and sweeps cross the boundary as
// plain values; analysis results go out as the same JSON the CLI prints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pmkit/analysis.hpp"
#include "pmkit/envs.hpp"
#include "pmkit/error.hpp"
#include "pmkit/game.hpp"
#include "pmkit/sweep.hpp"

namespace py = pybind11;
using namespace pmkit;

namespace {

// Probability vectors arrive as exact strings ("3/10", "0.3") or floats.
Environment make_env(const std::vector<py::object>& u) {
  bool exact = true;
  for (const auto& x : u) exact = exact && py::isinstance<py::str>(x);
  if (exact) {
    RationalVector r;
    for (const auto& x : u) r.push_back(Rational::parse(x.cast<std::string>()));
    return Environment::iid(r);
  }
  std::vector<double> d;
  for (const auto& x : u) {
    d.push_back(py::isinstance<py::str>(x) ? Rational::parse(x.cast<std::string>()).to_double()
                                           : x.cast<double>());
  }
  return Environment::iid(std::move(d));
}

PolicyOptions make_options(std::optional<double> eta, std::optional<double> gamma,
                           std::optional<double> delta, std::optional<double> epsilon) {
  PolicyOptions o;
  o.eta = eta;
  o.gamma = gamma;
  o.delta = delta;
  o.epsilon = epsilon;
  return o;
}

py::dict run_episode_py(const Game& game, const std::string& policy, const std::vector<py::object>& u,
                        std::size_t n, std::uint64_t seed, std::optional<double> eta,
                        std::optional<double> gamma, std::optional<double> delta,
                        std::optional<double> epsilon) {
  const GameAnalysis an = analyze(game);
  const Environment env = make_env(u);
  auto p = make_policy(parse_policy_kind(policy), game, an, make_options(eta, gamma, delta, epsilon), n);
  Trajectory traj;
  {
    py::gil_scoped_release release;
    traj = run_episode(game, *p, env, n, seed);
  }
  std::vector<std::size_t> actions, outcomes, feedback;
  for (const Round& r : traj.rounds) {
    actions.push_back(r.action + 1);
    outcomes.push_back(r.outcome + 1);
    feedback.push_back(r.feedback + 1);
  }
  const RegretReport rep = regret(game, traj);
  std::ostringstream csv;
  write_trajectory_csv(csv, game, traj);
  py::dict out;
  out["actions"] = actions;
  out["outcomes"] = outcomes;
  out["feedback"] = feedback;
  out["regret"] = rep.value();
  out["regret_exact"] = rep.regret.str();
  out["best_action"] = rep.best_action + 1;
  out["csv"] = csv.str();
  return out;
}

std::string sweep_py(const Game& game, const std::string& policy, const std::vector<py::object>& u,
                     const std::vector<std::size_t>& horizons, std::size_t seeds, std::uint64_t base_seed,
                     unsigned threads, std::optional<double> eta, std::optional<double> gamma,
                     std::optional<double> delta, std::optional<double> epsilon) {
  const GameAnalysis an = analyze(game);
  const Environment env = make_env(u);
  SweepSpec spec;
  spec.policy = parse_policy_kind(policy);
  spec.options = make_options(eta, gamma, delta, epsilon);
  spec.horizons = horizons;
  spec.seeds = seeds;
  spec.base_seed = base_seed;
  spec.threads = threads;
  SweepResult result;
  {
    py::gil_scoped_release release;
    result = run_sweep(game, an, env, spec);
  }
  if (result.error) std::rethrow_exception(result.error);
  return sweep_report_json(game, spec, result);
}

}  // namespace

PYBIND11_MODULE(_pmkit, m) {
  m.doc() = "partial-monitoring games: classification, NW2 and RelExp3";
  m.attr("__version__") = PMKIT_VERSION;

  auto base = py::register_exception<Error>(m, "PmkitError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  // Refusals carry the witness pair, so they get a translator of their own.
  py::register_exception<RefusalError>(m, "RefusalError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const RefusalError& e) {
      py::object type = py::module_::import("pmkit._pmkit").attr("RefusalError");
      py::object exc = type(e.what());
      exc.attr("witness") = e.witness();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<Game>(m, "Game")
      .def_property_readonly("name", &Game::name)
      .def_property_readonly("num_actions", &Game::num_actions)
      .def_property_readonly("num_outcomes", &Game::num_outcomes)
      .def_property_readonly("num_symbols", &Game::num_symbols)
      .def("loss", [](const Game& g, std::size_t a, std::size_t i) { return g.loss(a, i).str(); },
           py::arg("action"), py::arg("outcome"), "exact loss as \"p/q\" (0-based indices)")
      .def("feedback", [](const Game& g, std::size_t a, std::size_t i) { return g.feedback(a, i); },
           py::arg("action"), py::arg("outcome"), "0-based symbol index")
      .def("to_json", &serialize_game)
      .def("__eq__", [](const Game& a, const Game& b) { return a == b; })
      .def("__repr__", [](const Game& g) {
        return "<pmkit.Game '" + g.name() + "' K=" + std::to_string(g.num_actions()) +
               " E=" + std::to_string(g.num_outcomes()) + " F=" + std::to_string(g.num_symbols()) + ">";
      });

  m.def("parse_game", [](const std::string& text) { return parse_game(text); }, py::arg("text"));
  m.def("load_game", &load_game, py::arg("path"));
  m.def(
      "fixture",
      [](const std::string& name, std::optional<std::string> param) {
        std::optional<Rational> p;
        if (param) p = Rational::parse(*param);
        return fixture(name, p);
      },
      py::arg("name"), py::arg("param") = py::none());
  m.def("fixture_names", &fixture_names);

  m.def("classify_json", [](const Game& g) { return class_to_json(g, classify(g)); }, py::arg("game"));
  m.def("analyze_json", [](const Game& g) { return analysis_to_json(g, analyze(g)); }, py::arg("game"));

  m.def("run_episode", &run_episode_py, py::arg("game"), py::arg("policy"), py::arg("u"), py::arg("n"),
        py::arg("seed") = 0, py::kw_only(), py::arg("eta") = py::none(), py::arg("gamma") = py::none(),
        py::arg("delta") = py::none(), py::arg("epsilon") = py::none());
  m.def("sweep_json", &sweep_py, py::arg("game"), py::arg("policy"), py::arg("u"), py::arg("horizons"),
        py::arg("seeds") = 1, py::arg("base_seed") = 0, py::arg("threads") = 0, py::kw_only(),
        py::arg("eta") = py::none(), py::arg("gamma") = py::none(), py::arg("delta") = py::none(),
        py::arg("epsilon") = py::none());
}
