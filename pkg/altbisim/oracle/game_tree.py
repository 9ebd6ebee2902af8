# Copyright 2024 The altbisim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Bounded three-valued evaluation by explicit game-tree recursion, leaves only and without memo tables."""

from altbisim.errors import InputError
from altbisim.logic.formula import Atom, Diamond, Not, And, Coalition, Lift, PathNot, PathAnd, Next, Until
from altbisim.status import TRUE, FALSE, UNKNOWN
from altbisim.utils.util import within

import itertools

# truth order FALSE < UNKNOWN < TRUE; Kleene's connectives are min, max and reversal
_ORDER = [FALSE, UNKNOWN, TRUE]


def _rank(v):
    return _ORDER.index(v)


def _not(v):
    return _ORDER[2 - _rank(v)]


def _and(*vs):
    return _ORDER[min(_rank(v) for v in vs)]


def _or(*vs):
    return _ORDER[max(_rank(v) for v in vs)]


def _selections(system, q, agents):
    if not agents:
        return [frozenset(system.states)]
    result = []
    for picks in itertools.product(*[system.choices[(q, i)] for i in sorted(agents)]):
        inter = frozenset(system.states)
        for pick in picks:
            inter &= pick
        result.append(inter)
    return result


def bounded_game(system, obs, q, formula, k):
    """Verdict of a state formula at q with every coalition game cut off after k states."""
    if k < 1:
        raise InputError("horizon must be at least 1, got %s" % k)

    def state(f, s):
        if isinstance(f, Atom):
            return TRUE if system.obsmap[s] == f.name else FALSE
        if isinstance(f, Diamond):
            return TRUE if within(obs.distance(f.name, system.obsmap[s]), f.eps) else FALSE
        if isinstance(f, Not):
            return _not(state(f.sub, s))
        if isinstance(f, And):
            return _and(state(f.left, s), state(f.right, s))
        if isinstance(f, Coalition):
            if any(all(v == TRUE for v in leaves) for leaves in strategies(f, (s,))):
                return TRUE
            if all(any(v == FALSE for v in leaves) for leaves in strategies(f, (s,))):
                return FALSE
            return UNKNOWN
        raise InputError("not a state formula: %s" % (f,))

    def strategies(f, history):
        """For every tree strategy of the coalition, the path values of all its full-length outcomes."""
        if len(history) == k:
            yield [path(f.path, history, 0)]
            return
        s = history[-1]
        opponents = set(system.agents) - set(f.agents)
        for chosen in _selections(system, s, f.agents):
            branches = []
            for countered in _selections(system, s, opponents):
                (succ,) = tuple(chosen & countered)
                branches.append(list(strategies(f, history + (succ,))))
            for combination in itertools.product(*branches):
                yield [v for leaves in combination for v in leaves]

    def path(f, history, i):
        if i >= len(history):
            return UNKNOWN
        if isinstance(f, Lift):
            return state(f.state, history[i])
        if isinstance(f, PathNot):
            return _not(path(f.sub, history, i))
        if isinstance(f, PathAnd):
            return _and(path(f.left, history, i), path(f.right, history, i))
        if isinstance(f, Next):
            return path(f.sub, history, i + 1)
        if isinstance(f, Until):
            return _or(path(f.right, history, i), _and(path(f.left, history, i), path(f, history, i + 1)))
        raise InputError("not a path formula: %s" % (f,))

    system.check_state(q)
    return state(formula, q)
