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

"""Partial-monitoring games: classification, NW2 and RelExp3 episodes."""

import json

from ._pmkit import (
    Game,
    NumericError,
    ParseError,
    PmkitError,
    PreconditionError,
    RefusalError,
    ValidationError,
    __version__,
    fixture,
    fixture_names,
    load_game,
    parse_game,
    run_episode,
)
from . import _pmkit


def classify(game):
    """Class verdict, witness pair and evidence, as a dict."""
    return json.loads(_pmkit.classify_json(game))


def analyze(game):
    """Cells, neighbours, observability and estimators, as a dict."""
    return json.loads(_pmkit.analyze_json(game))


def sweep(game, policy, u, horizons, seeds=1, base_seed=0, threads=0, **options):
    """Mean regret per horizon and the log-log slope fit, as a dict."""
    return json.loads(
        _pmkit.sweep_json(game, policy, u, list(horizons), seeds, base_seed, threads, **options))


__all__ = [
    "Game", "NumericError", "ParseError", "PmkitError", "PreconditionError", "RefusalError",
    "ValidationError", "__version__", "analyze", "classify", "fixture", "fixture_names",
    "load_game", "parse_game", "run_episode", "sweep",
]
