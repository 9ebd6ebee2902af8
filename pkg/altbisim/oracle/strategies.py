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

"""Realizability by exhaustive search over positional strategies on (state, obligation) nodes.

Obligations are kept in conjunctive normal form: a set of clauses, each a set of formulas of which one must
hold from the next position on. The empty set is fulfilled; a set holding the empty clause is dead.
"""

from altbisim.errors import InputError, OracleCapError
from altbisim.logic.positive import PositiveLtl, LtlTrue, LtlAtom, LtlDiamond, LtlOr, LtlAnd, LtlNext, LtlUntil
from altbisim.model.validate import require_valid
from altbisim.utils.util import within

MAX_STRATEGIES = 10 ** 6

_DONE = frozenset()
_DEAD = frozenset([frozenset()])


def _normal(clauses):
    clauses = {c for c in clauses if not any(isinstance(f, LtlTrue) for f in c)}
    if frozenset() in clauses:
        return _DEAD
    return frozenset(c for c in clauses if not any(other < c for other in clauses))


def _conj(x, y):
    return _normal(x | y)


def _disj(x, y):
    return _normal({a | b for a in x for b in y})


class _Game(object):
    def __init__(self, system, obs):
        self.system = system
        self.obs = obs

    def step(self, f, q):
        """Obligation left after f is read at q."""
        seen = self.system.obsmap[q]
        if isinstance(f, LtlTrue):
            return _DONE
        if isinstance(f, LtlAtom):
            return _DONE if seen == f.name else _DEAD
        if isinstance(f, LtlDiamond):
            return _DONE if within(self.obs.distance(f.name, seen), f.eps) else _DEAD
        if isinstance(f, LtlOr):
            return _disj(self.step(f.left, q), self.step(f.right, q))
        if isinstance(f, LtlAnd):
            return _conj(self.step(f.left, q), self.step(f.right, q))
        if isinstance(f, LtlNext):
            return _normal({frozenset([f.sub])})
        if isinstance(f, LtlUntil):
            later = _conj(self.step(f.left, q), _normal({frozenset([f])}))
            return _disj(self.step(f.right, q), later)
        raise InputError("not a negation-free formula: %s" % (f,))

    def advance(self, obligation, q):
        result = _DONE
        for clause in obligation:
            options = _DEAD
            for f in clause:
                options = _disj(options, self.step(f, q))
            result = _conj(result, options)
        return result

    def successors(self, node, action):
        q, obligation = node
        return {(s, self.advance(obligation, s))
                for b in self.system.disturbances for s in self.system.post(q, action, b)}


def enum_strategies(system, q, formula, obs=None, cap=MAX_STRATEGIES):
    """True iff some strategy forces every outcome from q to satisfy ``formula``."""
    if not isinstance(formula, PositiveLtl):
        raise InputError("not a negation-free formula: %s" % (formula,))
    require_valid(system)
    system.check_state(q)
    game = _Game(system, obs if obs is not None else system.obs)
    start = (q, game.step(formula, q))
    explored = [0]

    def reachable(assignment):
        """Nodes reachable under a partial assignment, in discovery order."""
        order, seen, stack = [], {start}, [start]
        while stack:
            node = stack.pop()
            order.append(node)
            if node[1] in (_DONE, _DEAD) or node not in assignment:
                continue
            for succ in sorted(game.successors(node, assignment[node]), key=repr):
                if succ not in seen:
                    seen.add(succ)
                    stack.append(succ)
        return order

    def winning(assignment, nodes):
        # no dead node and no cycle among unfulfilled ones
        if any(node[1] == _DEAD for node in nodes):
            return False
        state = {}

        def cyclic(node):
            if node[1] == _DONE:
                return False
            if state.get(node) == "open":
                return True
            if state.get(node) == "closed":
                return False
            state[node] = "open"
            if any(cyclic(s) for s in game.successors(node, assignment[node])):
                return True
            state[node] = "closed"
            return False

        return not cyclic(start)

    def search(assignment):
        nodes = reachable(assignment)
        if any(node[1] == _DEAD for node in nodes):
            explored[0] += 1
            return False
        open_nodes = [node for node in nodes if node[1] != _DONE and node not in assignment]
        if not open_nodes:
            explored[0] += 1
            if explored[0] > cap:
                raise OracleCapError("strategy enumeration exceeded %d strategies" % cap)
            return winning(assignment, nodes)
        node = open_nodes[0]
        for action in system.controls:
            assignment[node] = action
            if search(assignment):
                return True
            del assignment[node]
        return False

    return search({})
