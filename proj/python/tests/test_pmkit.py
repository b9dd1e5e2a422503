# Copyright 2026 The pmkit Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the python module."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

import pmkit

GAMES = Path(__file__).resolve().parents[2] / "games"


def test_fixture_and_document_agree():
    g = pmkit.fixture("spam", "1/3")
    assert (g.num_actions, g.num_outcomes, g.num_symbols) == (3, 2, 2)
    assert g.loss(2, 0) == "1/3"
    assert pmkit.load_game(str(GAMES / "spam.json")) == g
    assert pmkit.parse_game(g.to_json()) == g
    assert "flower" in pmkit.fixture_names()


def test_verdicts():
    want = {"0": "trivial", "1/3": "easy", "1/2": "easy", "3/5": "hard"}
    for x, verdict in want.items():
        assert pmkit.classify(pmkit.fixture("spam", x))["class"]["verdict"] == verdict
    hopeless = pmkit.classify(pmkit.fixture("hopeless2x2"))["class"]
    assert hopeless["verdict"] == "hopeless"
    assert hopeless["witness"] == [1, 2]


def test_analysis_is_json():
    a = pmkit.analyze(pmkit.fixture("exhibit4"))
    assert a["playable"] == [1, 2, 3, 4]
    assert a["neighbor_pairs"] == [[1, 3], [2, 3]]
    json.dumps(a)


def test_errors():
    with pytest.raises(pmkit.ParseError):
        pmkit.parse_game('{"loss": [[0, 1]')
    with pytest.raises(pmkit.ValidationError):
        pmkit.parse_game('{"F": 1, "loss": [[0, 1]], "feedback": [[1, 2]]}')
    with pytest.raises(pmkit.RefusalError) as info:
        pmkit.run_episode(pmkit.fixture("exhibit3"), "relexp3", ["1/3"] * 3, 10)
    assert info.value.witness == "(1,2)"
    assert isinstance(info.value, pmkit.PmkitError)
    with pytest.raises(pmkit.PreconditionError):
        pmkit.run_episode(pmkit.fixture("spam", "1/3"), "relexp3", [0.5, 0.5], 10, gamma=0.1)


def test_episode_is_deterministic_and_regret_exact():
    g = pmkit.fixture("spam", "1/3")
    a = pmkit.run_episode(g, "nw2", ["3/10", "7/10"], 300, seed=4)
    b = pmkit.run_episode(g, "nw2", [0.3, 0.7], 300, seed=4)
    assert a["actions"] == b["actions"] and a["outcomes"] == b["outcomes"]
    assert a["csv"].splitlines()[1:] == b["csv"].splitlines()[1:]
    # regret recomputed from the trajectory
    losses = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)], [Fraction(1, 3)] * 2]
    learner = sum(losses[x - 1][i - 1] for x, i in zip(a["actions"], a["outcomes"]))
    totals = [sum(row[i - 1] for i in a["outcomes"]) for row in losses]
    best = min(totals)
    assert Fraction(a["regret_exact"]) == learner - best
    assert a["best_action"] == totals.index(best) + 1


def test_sweep_report():
    r = pmkit.sweep(pmkit.fixture("spam", "1/3"), "relexp3", ["3/10", "7/10"], [64, 256], seeds=3,
                    threads=2)
    assert r["complete"] and r["fit_points"] == 2
    assert [s["n"] for s in r["summary"]] == [64, 256]
