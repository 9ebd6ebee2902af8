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

"""Distinguishing formula pairs for refuted state pairs.

A refuted pair (q1, q2) yields (phi, gamma) in H with one state satisfying phi and the other falsifying gamma.
Observation refutations give the atomic pair (p, <eps> p). A pair refuted at round r is built from pairs refuted
before r, under one coalition operator, so its modal depth never exceeds r.
"""

from altbisim.bisim.approx import approx_bisim
from altbisim.bisim.result import OBS_DISTANCE, FORTH
from altbisim.errors import InputError, InternalError
from altbisim.logic.formula import Atom, Diamond, Not, Coalition, Lift, PathNot, Next, conjoin, disjoin, \
    modal_depth
from altbisim.relations.partner import decide_H
from altbisim.status import BISIMILAR

import logging

logger = logging.getLogger(__name__)

# left state satisfies ``left``; right state falsifies ``right``
FORWARD = "forward"
# right state satisfies ``left``; left state falsifies ``right``
BACKWARD = "backward"


class Distinction(object):
    def __init__(self, pair, left, right, direction, round):
        self.pair = pair
        self.left = left
        self.right = right
        self.direction = direction
        self.round = round

    @property
    def depth(self):
        return max(modal_depth(self.left), modal_depth(self.right))

    def satisfying_state(self):
        """(side, state) expected to satisfy ``left``; side 0 is the first system."""
        return (0, self.pair[0]) if self.direction == FORWARD else (1, self.pair[1])

    def falsifying_state(self):
        return (1, self.pair[1]) if self.direction == FORWARD else (0, self.pair[0])

    def __repr__(self):
        return "Distinction(%s, %s, %s, %s)" % (self.pair, self.left, self.right, self.direction)

    def to_json(self):
        return {
            "pair": list(self.pair),
            "phi": str(self.left),
            "gamma": str(self.right),
            "direction": self.direction,
            "round": self.round,
            "depth": self.depth
        }


def _unique(items):
    result = []
    for item in items:
        if item not in result:
            result.append(item)
    return result


def _flip(oriented):
    phi, gamma = oriented
    return Not(gamma), Not(phi)


class _Builder(object):
    def __init__(self, first, second, result):
        self.first = first
        self.second = second
        self.result = result
        self.agents = result.agents
        self.eps = result.epsilon
        self.opponents = first.complement(self.agents)
        self._memo = {}

    def oriented(self, q1, q2, direction):
        """(phi, gamma) for a refuted pair, oriented as ``direction`` asks."""
        key = (q1, q2, direction)
        if key not in self._memo:
            phi, gamma, native = self._build(q1, q2)
            self._memo[key] = (phi, gamma) if native == direction else _flip((phi, gamma))
        return self._memo[key]

    def _build(self, q1, q2):
        refutation = self.result.refutations[(q1, q2)]
        if refutation.reason == OBS_DISTANCE:
            p = self.first.obsmap[q1]
            return Atom(p), Diamond(self.eps, p), FORWARD

        if refutation.reason == FORTH:
            # q2 can always be driven to a successor unrelated to every successor of the witness at q1
            chosen = refutation.witness
            satisfied, falsified = [], []
            for candidate, breaker in refutation.responses:
                s2 = self.second.meet(q2, candidate, breaker)
                subs = _unique(self.oriented(self.first.meet(q1, chosen, reply), s2, BACKWARD)
                               for reply in self.first.hbar(q1, self.opponents))
                satisfied.append(conjoin(phi for phi, _ in subs))
                falsified.append(conjoin(gamma for _, gamma in subs))
            direction = BACKWARD
        else:
            chosen = refutation.witness
            satisfied, falsified = [], []
            for candidate, breaker in refutation.responses:
                s1 = self.first.meet(q1, candidate, breaker)
                subs = _unique(self.oriented(s1, self.second.meet(q2, chosen, reply), FORWARD)
                               for reply in self.second.hbar(q2, self.opponents))
                satisfied.append(conjoin(phi for phi, _ in subs))
                falsified.append(conjoin(gamma for _, gamma in subs))
            direction = FORWARD

        return self._cannot_avoid(_unique(satisfied)), self._cannot_avoid(_unique(falsified)), direction

    def _cannot_avoid(self, disjuncts):
        return Not(Coalition(self.agents, PathNot(Next(Lift(disjoin(disjuncts))))))


def _result_for(first, second, agents, eps, result):
    if result is None:
        return approx_bisim(first, second, agents, eps)
    if result.agents != frozenset(agents):
        raise InputError("bisimulation result was computed for agents %s, not %s"
                         % (sorted(result.agents), sorted(agents)))
    return result


def _distinction(builder, q1, q2):
    refutation = builder.result.refutations[(q1, q2)]
    direction = BACKWARD if refutation.reason == FORTH else FORWARD
    phi, gamma = builder.oriented(q1, q2, direction)
    if not decide_H(phi, gamma, builder.agents, builder.eps):
        raise InternalError("distinguishing pair for (%s, %s) is not H-related: %s / %s" % (q1, q2, phi, gamma))
    distinction = Distinction((q1, q2), phi, gamma, direction, refutation.round)
    logger.debug("distinguished (%s, %s) at round %d with depth %d", q1, q2, refutation.round, distinction.depth)
    return distinction


def distinguish(first, second, agents, eps, q1, q2, result=None):
    """A Distinction for (q1, q2), or BISIMILAR when the pair is related."""
    first.check_state(q1)
    second.check_state(q2)
    result = _result_for(first, second, agents, eps, result)
    if result.related(q1, q2):
        return BISIMILAR
    return _distinction(_Builder(first, second, result), q1, q2)


def distinguish_all(first, second, agents, eps, result=None):
    """Distinctions for every unrelated pair, in declaration order."""
    result = _result_for(first, second, agents, eps, result)
    builder = _Builder(first, second, result)
    return [_distinction(builder, q1, q2) for q1 in first.states for q2 in second.states
            if not result.related(q1, q2)]
