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

from altbisim.model.strategy import CtrlStrategy
from altbisim.model.validate import require_valid
from altbisim.status import REALIZABLE, UNREALIZABLE
from altbisim.synthesis.residual import Progression, TRUE_RESIDUAL, require_positive

import logging

logger = logging.getLogger(__name__)


class SynthResult(object):
    """Outcome of synthesis from one initial state.

    The strategy's memory is the residual obligation: it plays ``table[(residual, state)]`` and progresses the
    residual through each observed successor. ``horizon`` bounds the number of steps to fulfilment.
    """

    def __init__(self, state, formula, realizable, strategy, horizon, nodes):
        self.state = state
        self.formula = formula
        self.realizable = realizable
        self.strategy = strategy
        self.horizon = horizon
        self.nodes = nodes

    @property
    def verdict(self):
        return REALIZABLE if self.realizable else UNREALIZABLE

    def to_json(self):
        data = {
            "state": self.state,
            "spec": str(self.formula),
            "verdict": self.verdict,
            "realizable": self.realizable,
            "horizon": self.horizon
        }
        if self.realizable:
            data["nodes"] = [[q, str(m), sorted(actions)] for q, m, actions in self.nodes]
        return data


class _Arena(object):
    """Product of a labeled system with residual obligations."""

    def __init__(self, system, progression):
        self.system = system
        self.progression = progression
        self.nodes = []
        self.moves = {}

    def explore(self, initial):
        frontier = [initial]
        seen = {initial}
        while frontier:
            node = frontier.pop(0)
            self.nodes.append(node)
            q, residual = node
            if residual.is_true or residual.is_false:
                continue
            moves = {}
            for a in self.system.controls:
                targets = set()
                for b in self.system.disturbances:
                    for succ in self.system.post(q, a, b):
                        targets.add((succ, self.progression.residual(residual, succ)))
                moves[a] = frozenset(targets)
                for target in sorted(targets, key=lambda n: (self.system.index[n[0]], str(n[1]))):
                    if target not in seen:
                        seen.add(target)
                        frontier.append(target)
            self.moves[node] = moves

    def attractor(self):
        """Rank and winning controls of every node from which fulfilment can be forced."""
        rank = {}
        winning = {}
        for node in self.nodes:
            if node[1].is_true:
                rank[node] = 0
        level = 0
        while True:
            level += 1
            added = {}
            for node in self.nodes:
                if node in rank or node not in self.moves:
                    continue
                actions = [a for a in self.system.controls
                           if self.moves[node][a] and all(t in rank for t in self.moves[node][a])]
                if actions:
                    added[node] = actions
            if not added:
                return rank, winning
            for node, actions in added.items():
                rank[node] = level
                winning[node] = frozenset(actions)


def synthesize(system, q0, formula, obs=None):
    """Control strategy forcing every outcome from q0 to satisfy a negation-free formula, if one exists."""
    require_positive(formula)
    require_valid(system)
    system.check_state(q0)
    progression = Progression(system, obs)
    initial = (q0, progression.formula(formula, q0))

    arena = _Arena(system, progression)
    arena.explore(initial)
    rank, winning = arena.attractor()
    logger.debug("synthesis from %s explored %d node(s), %d winning", q0, len(arena.nodes), len(rank))

    if initial not in rank:
        return SynthResult(q0, formula, False, None, None, [])

    table = {}
    update = {}
    nodes = []
    for node in arena.nodes:
        if node not in winning:
            continue
        q, residual = node
        table[(residual, q)] = winning[node]
        nodes.append((q, residual, winning[node]))
        for a in winning[node]:
            for succ, after in arena.moves[node][a]:
                update[(residual, succ)] = after
    for q in system.states:
        table[(TRUE_RESIDUAL, q)] = frozenset(system.controls)
    nodes.extend((q, TRUE_RESIDUAL, frozenset(system.controls)) for q in system.states)

    strategy = CtrlStrategy(table, update, initial_memory=initial[1])
    return SynthResult(q0, formula, True, strategy, rank[initial], nodes)
