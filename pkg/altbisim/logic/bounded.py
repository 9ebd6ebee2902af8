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

from altbisim.errors import InputError
from altbisim.logic.formula import Atom, Diamond, Not, And, Coalition, Lift, PathNot, PathAnd, Next, Until
from altbisim.status import TRUE, FALSE, UNKNOWN, Verdict, kleene_not, kleene_and, kleene_or

import logging

logger = logging.getLogger(__name__)


class BoundedChecker(object):
    """Three-valued semantics over the game unrolled to ``horizon`` states.

    A coalition is TRUE when some depth-``horizon`` tree strategy makes every outcome prefix evaluate TRUE,
    FALSE when every tree strategy admits an outcome prefix evaluating FALSE, UNKNOWN otherwise. Positions past
    the end of a prefix are UNKNOWN and the connectives are Kleene's, so a verdict only sharpens as the horizon
    grows.

    Like StateChecker, a checker holds every ``<eps> p`` to one epsilon.
    """

    def __init__(self, system, obs, horizon, eps=None):
        if horizon < 1:
            raise InputError("horizon must be at least 1, got %s" % horizon)
        self.system = system
        self.obs = obs
        self.horizon = horizon
        self.eps = eps
        self._state_values = {}

    def value(self, q, formula):
        key = (q, formula)
        if key not in self._state_values:
            self._state_values[key] = self._state_value(q, formula)
        return self._state_values[key]

    def _state_value(self, q, formula):
        system = self.system
        if isinstance(formula, Atom):
            return Verdict.of(system.obsmap[q] == formula.name)
        if isinstance(formula, Diamond):
            if self.eps is None:
                self.eps = formula.eps
            elif formula.eps != self.eps:
                raise InputError("<%s> %s does not match the analysis epsilon %s" % (formula.eps, formula.name,
                                                                                     self.eps))
            if formula.name not in self.obs:
                raise InputError("unknown observation %s" % formula.name)
            return Verdict.of(self.obs.within(formula.name, system.obsmap[q], formula.eps))
        if isinstance(formula, Not):
            return kleene_not(self.value(q, formula.sub))
        if isinstance(formula, And):
            return kleene_and(self.value(q, formula.left), self.value(q, formula.right))
        if isinstance(formula, Coalition):
            system.check_agents(formula.agents)
            if self._can_force((q,), formula, TRUE):
                return TRUE
            if self._cannot_avoid((q,), formula, FALSE):
                return FALSE
            return UNKNOWN
        raise TypeError("not a state formula: %r" % (formula,))

    def path_value(self, path, history, i):
        if i >= len(history):
            return UNKNOWN
        if isinstance(path, Lift):
            return self.value(history[i], path.state)
        if isinstance(path, PathNot):
            return kleene_not(self.path_value(path.sub, history, i))
        if isinstance(path, PathAnd):
            return kleene_and(self.path_value(path.left, history, i), self.path_value(path.right, history, i))
        if isinstance(path, Next):
            return self.path_value(path.sub, history, i + 1)
        if isinstance(path, Until):
            result = UNKNOWN
            for j in range(len(history) - 1, i - 1, -1):
                result = kleene_or(self.path_value(path.right, history, j),
                                   kleene_and(self.path_value(path.left, history, j), result))
            return result
        raise TypeError("not a path formula: %r" % (path,))

    def _can_force(self, history, formula, target):
        """Some coalition choice at every node keeps every outcome evaluating to ``target``."""
        current = self.path_value(formula.path, history, 0)
        if current == target:
            return True
        if len(history) == self.horizon:
            return False
        system, q = self.system, history[-1]
        opponents = system.complement(formula.agents)
        return any(
            all(self._can_force(history + (system.meet(q, chosen, countered),), formula, target)
                for countered in system.hbar(q, opponents))
            for chosen in system.hbar(q, formula.agents))

    def _cannot_avoid(self, history, formula, target):
        """Whatever the coalition chooses, some outcome evaluates to ``target``."""
        current = self.path_value(formula.path, history, 0)
        if current == target:
            return True
        if len(history) == self.horizon:
            return False
        system, q = self.system, history[-1]
        opponents = system.complement(formula.agents)
        return all(
            any(self._cannot_avoid(history + (system.meet(q, chosen, countered),), formula, target)
                for countered in system.hbar(q, opponents))
            for chosen in system.hbar(q, formula.agents))


def eval_bounded(system, obs, q, formula, k, eps=None):
    """Sound three-valued verdict for any state formula, looking ``k`` states ahead."""
    checker = BoundedChecker(system, obs, k, eps)
    system.check_state(q)
    verdict = checker.value(q, formula)
    logger.debug("eval_bounded %s at %s, k=%d: %s", formula, q, k, verdict)
    return verdict
