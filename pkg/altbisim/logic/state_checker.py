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

"""Exact model checking of the coalition fragment decided by fixpoints.

A coalition is checked exactly when its path formula reduces to one of: a state formula, ``X f``, ``f U g`` or
``f R g`` with state-formula operands, under any number of path negations (!X f = X !f and
!(f U g) = !f R !g). Everything else raises UnsupportedExactError and is left to ``eval_bounded``.
"""

from altbisim.errors import InputError, UnsupportedExactError
from altbisim.logic.formula import Atom, Diamond, Not, And, Coalition, Lift, PathNot, PathAnd, Next, Until
from altbisim.model.strategy import AgStrategy

import logging

logger = logging.getLogger(__name__)

NOW = "now"
NEXT = "next"
UNTIL = "until"
RELEASE = "release"


def negate(formula):
    return formula.sub if isinstance(formula, Not) else Not(formula)


def as_state_formula(path):
    """The state formula a boolean combination of lifted state formulas denotes, or None."""
    if isinstance(path, Lift):
        return path.state
    if isinstance(path, PathNot):
        sub = as_state_formula(path.sub)
        return None if sub is None else negate(sub)
    if isinstance(path, PathAnd):
        left, right = as_state_formula(path.left), as_state_formula(path.right)
        if left is None or right is None:
            return None
        return And(left, right)
    return None


def core_objective(path):
    """Classify a coalition's path formula as (kind, operands), or None outside the exact fragment."""
    state = as_state_formula(path)
    if state is not None:
        return NOW, (state,)

    negated = False
    while isinstance(path, PathNot):
        negated = not negated
        path = path.sub

    if isinstance(path, Next):
        sub = as_state_formula(path.sub)
        if sub is None:
            return None
        return NEXT, (negate(sub) if negated else sub,)
    if isinstance(path, Until):
        left, right = as_state_formula(path.left), as_state_formula(path.right)
        if left is None or right is None:
            return None
        if negated:
            return RELEASE, (negate(left), negate(right))
        return UNTIL, (left, right)
    return None


def is_core(formula):
    if isinstance(formula, (Atom, Diamond)):
        return True
    if isinstance(formula, Not):
        return is_core(formula.sub)
    if isinstance(formula, And):
        return is_core(formula.left) and is_core(formula.right)
    if isinstance(formula, Coalition):
        objective = core_objective(formula.path)
        return objective is not None and all(is_core(f) for f in objective[1])
    return False


class StateChecker(object):
    """Satisfaction sets of state formulas over one AgentAts; memo tables live as long as the checker.

    Every ``<eps> p`` a checker meets must use one epsilon: ``eps`` when given, else the first one seen.
    """

    def __init__(self, system, obs, eps=None):
        self.system = system
        self.obs = obs
        self.eps = eps
        self._sat = {}
        self._choices = {}

    def holds(self, q, formula):
        self.system.check_state(q)
        return q in self.sat(formula)

    def sat(self, formula):
        if formula not in self._sat:
            self._sat[formula] = self._compute(formula)
        return self._sat[formula]

    def _compute(self, formula):
        system = self.system
        if isinstance(formula, Atom):
            return frozenset(q for q in system.states if system.obsmap[q] == formula.name)
        if isinstance(formula, Diamond):
            if self.eps is None:
                self.eps = formula.eps
            elif formula.eps != self.eps:
                raise InputError("<%s> %s does not match the analysis epsilon %s" % (formula.eps, formula.name,
                                                                                     self.eps))
            if formula.name not in self.obs:
                raise InputError("unknown observation %s" % formula.name)
            return frozenset(q for q in system.states
                             if self.obs.within(formula.name, system.obsmap[q], formula.eps))
        if isinstance(formula, Not):
            return system.universe - self.sat(formula.sub)
        if isinstance(formula, And):
            return self.sat(formula.left) & self.sat(formula.right)
        if isinstance(formula, Coalition):
            return self._coalition(formula)
        raise TypeError("not a state formula: %r" % (formula,))

    def _coalition(self, formula):
        objective = core_objective(formula.path)
        if objective is None:
            raise UnsupportedExactError("no exact procedure for %s" % formula)
        self.system.check_agents(formula.agents)
        kind, operands = objective
        agents = formula.agents
        choices = {}

        if kind == NOW:
            result = self.sat(operands[0])
        elif kind == NEXT:
            target = self.sat(operands[0])
            result = self.cpre(agents, target, choices)
        elif kind == UNTIL:
            keep, goal = self.sat(operands[0]), self.sat(operands[1])
            result = frozenset()
            iterations = 0
            while True:
                iterations += 1
                layer = {}
                grown = goal | (keep & self.cpre(agents, result, layer))
                for q, chosen in layer.items():
                    # first layer that attracts q fixes its progress-making choice
                    if q in grown and q not in result:
                        choices.setdefault(q, chosen)
                if grown == result:
                    break
                result = grown
            logger.debug("until fixpoint for %s stable after %d iteration(s)", formula, iterations)
        else:
            stay, guard = self.sat(operands[0]), self.sat(operands[1])
            result = self.system.universe
            iterations = 0
            while True:
                iterations += 1
                shrunk = guard & (stay | self.cpre(agents, result))
                if shrunk == result:
                    break
                result = shrunk
            self.cpre(agents, result, choices)
            logger.debug("release fixpoint for %s stable after %d iteration(s)", formula, iterations)

        self._choices[formula] = choices
        return result

    def cpre(self, agents, target, choices=None):
        """States where ``agents`` can force the next state into ``target``; records one forcing choice each."""
        system = self.system
        opponents = system.complement(agents)
        result = set()
        for q in system.states:
            for chosen in system.hbar(q, agents):
                if all(system.meet(q, chosen, countered) in target for countered in system.hbar(q, opponents)):
                    result.add(q)
                    if choices is not None:
                        choices[q] = chosen
                    break
        return frozenset(result)

    def witness(self, formula):
        """Memoryless strategy realizing the outermost coalition of ``formula`` from its satisfying states."""
        if not isinstance(formula, Coalition):
            raise InputError("only coalition formulas have witnessing strategies")
        self.sat(formula)
        recorded = self._choices.get(formula, {})
        table = {}
        for q in self.system.states:
            table[q] = recorded.get(q, self.system.hbar(q, formula.agents)[0])
        return AgStrategy.memoryless(formula.agents, table)


def eval_state(system, obs, q, formula, eps=None):
    """Exact truth of a core-fragment state formula at ``q``."""
    return StateChecker(system, obs, eps).holds(q, formula)


def witness_strategy(system, obs, q, formula, eps=None):
    """A memoryless strategy for the outermost coalition when it holds at ``q``, else None."""
    checker = StateChecker(system, obs, eps)
    if not checker.holds(q, formula):
        return None
    return checker.witness(formula)
