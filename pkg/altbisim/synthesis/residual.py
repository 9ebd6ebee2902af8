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

"""Formula progression: what remains to be satisfied after reading one state.

A Residual is a disjunction of clauses, each clause a conjunction of positive formulas that must hold from the
next position on. Clauses that contain another clause are dropped, so equal residuals compare equal.
"""

from altbisim.errors import InputError
from altbisim.logic.positive import PositiveLtl, LtlTrue, LtlAtom, LtlDiamond, LtlOr, LtlAnd, LtlNext, LtlUntil


def _clause_key(clause):
    return sorted(str(f) for f in clause)


class Residual(object):
    def __init__(self, clauses):
        clauses = {frozenset(f for f in clause if not isinstance(f, LtlTrue)) for clause in clauses}
        minimal = [c for c in clauses if not any(other < c for other in clauses)]
        self.clauses = tuple(sorted(minimal, key=lambda c: (len(c), _clause_key(c))))

    @staticmethod
    def of(formula):
        return Residual([frozenset([formula])])

    @property
    def is_true(self):
        return self.clauses == (frozenset(),)

    @property
    def is_false(self):
        return not self.clauses

    def or_(self, other):
        return Residual(self.clauses + other.clauses)

    def and_(self, other):
        return Residual([a | b for a in self.clauses for b in other.clauses])

    def formulas(self):
        return frozenset(f for clause in self.clauses for f in clause)

    def __eq__(self, other):
        return isinstance(other, Residual) and self.clauses == other.clauses

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.clauses)

    def __str__(self):
        if self.is_true:
            return "true"
        if self.is_false:
            return "false"
        rendered = []
        for clause in self.clauses:
            members = sorted(str(f) for f in clause)
            rendered.append(members[0] if len(members) == 1 else "(" + " & ".join(members) + ")")
        return " | ".join(rendered)

    def __repr__(self):
        return "Residual(%s)" % self

    def to_json(self):
        return str(self)


TRUE_RESIDUAL = Residual([frozenset()])
FALSE_RESIDUAL = Residual([])


class Progression(object):
    """Memoized progression over one labeled system and observation space."""

    def __init__(self, system, obs=None):
        self.system = system
        self.obs = obs if obs is not None else system.obs
        self._cache = {}

    def formula(self, formula, q):
        key = (formula, q)
        if key not in self._cache:
            self._cache[key] = self._progress(formula, q)
        return self._cache[key]

    def _progress(self, formula, q):
        observed = self.system.obsmap[q]
        if isinstance(formula, LtlTrue):
            return TRUE_RESIDUAL
        if isinstance(formula, LtlAtom):
            return TRUE_RESIDUAL if observed == formula.name else FALSE_RESIDUAL
        if isinstance(formula, LtlDiamond):
            if formula.name not in self.obs:
                raise InputError("unknown observation %s" % formula.name)
            return TRUE_RESIDUAL if self.obs.within(formula.name, observed, formula.eps) else FALSE_RESIDUAL
        if isinstance(formula, LtlOr):
            return self.formula(formula.left, q).or_(self.formula(formula.right, q))
        if isinstance(formula, LtlAnd):
            return self.formula(formula.left, q).and_(self.formula(formula.right, q))
        if isinstance(formula, LtlNext):
            return Residual.of(formula.sub)
        if isinstance(formula, LtlUntil):
            # a U b == b | (a & X(a U b))
            return self.formula(formula.right, q).or_(self.formula(formula.left, q).and_(Residual.of(formula)))
        raise InputError("synthesis expects a negation-free LTL formula, got %s" % (formula,))

    def residual(self, residual, q):
        result = FALSE_RESIDUAL
        for clause in residual.clauses:
            conjunct = TRUE_RESIDUAL
            for f in clause:
                conjunct = conjunct.and_(self.formula(f, q))
                if conjunct.is_false:
                    break
            result = result.or_(conjunct)
            if result.is_true:
                break
        return result


def require_positive(formula):
    if not isinstance(formula, PositiveLtl):
        raise InputError("synthesis expects a negation-free LTL formula, got %s" % (formula,))


def progress(formula, q, system, obs=None):
    require_positive(formula)
    system.check_state(q)
    return Progression(system, obs).formula(formula, q)


def progress_residual(residual, q, system, obs=None):
    system.check_state(q)
    return Progression(system, obs).residual(residual, q)
