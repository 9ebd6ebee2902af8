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

"""The pairing of strict formulas with their eps-loosened partners.

The relations are generated by nine rules: atoms pair with their eps-diamond (1), negation swaps and negates
the two sides (2, 6), and every other connective pairs component-wise (3, 4, 5, 7, 8, 9). Reading the rules
backwards gives two grammars: a *left* one (formulas with a partner) and a *right* one (formulas that are a
partner). Partners are computed by mutual recursion over the two, so each formula has at most one.
"""

from altbisim.errors import InputError
from altbisim.logic.formula import Atom, Diamond, Not, And, Coalition, Lift, PathNot, PathAnd, Next, Until, \
    StateFormula
from altbisim.logic.positive import PositiveLtl, as_path_formula
from altbisim.logic.rank import rank_s, rank_p
from altbisim.status import NOT_IN_DOMAIN
from altbisim.utils.util import to_epsilon

H = "H"
E = "E"


class _OutOfDomain(Exception):
    pass


class Step(object):
    """One rule application: (left, right) joins relation ``kind`` by ``rule``."""

    def __init__(self, rule, kind, left, right):
        self.rule = rule
        self.kind = kind
        self.left = left
        self.right = right

    def __repr__(self):
        return "Step(%d, %s, %s, %s)" % (self.rule, self.kind, self.left, self.right)

    def to_json(self):
        return {"rule": self.rule, "relation": self.kind, "left": str(self.left), "right": str(self.right)}


class HPartner(object):
    """A formula, its partner and the derivation that pairs them."""

    def __init__(self, left, right, derivation, agents, eps):
        self.left = left
        self.right = right
        self.derivation = list(derivation)
        self.agents = frozenset(agents)
        self.eps = eps

    @property
    def kind(self):
        return H if isinstance(self.left, StateFormula) else E

    def ranks(self):
        rank = rank_s if self.kind == H else rank_p
        return rank(self.left), rank(self.right)

    def replay(self):
        """True iff every step follows from earlier ones and the last step yields (left, right)."""
        derived = set()
        for step in self.derivation:
            if not _follows(step, derived, self.agents, self.eps):
                return False
            derived.add((step.kind, step.left, step.right))
        return bool(self.derivation) and \
            (self.derivation[-1].left, self.derivation[-1].right) == (self.left, self.right)

    def to_json(self):
        left_rank, right_rank = self.ranks()
        return {
            "left": str(self.left),
            "right": str(self.right),
            "rank": [left_rank, right_rank],
            "derivation": self.derivation
        }


def _follows(step, derived, agents, eps):
    left, right = step.left, step.right
    if step.rule == 1:
        return isinstance(left, Atom) and right == Diamond(eps, left.name) and step.kind == H
    if step.rule in (2, 6):
        neg = Not if step.rule == 2 else PathNot
        return isinstance(left, neg) and isinstance(right, neg) and (step.kind, right.sub, left.sub) in derived
    if step.rule in (3, 7, 9):
        node = {3: And, 7: PathAnd, 9: Until}[step.rule]
        sub = H if step.rule == 3 else E
        return isinstance(left, node) and isinstance(right, node) and \
            (sub, left.left, right.left) in derived and (sub, left.right, right.right) in derived
    if step.rule == 4:
        return isinstance(left, Coalition) and isinstance(right, Coalition) and \
            left.agents == right.agents == agents and (E, left.path, right.path) in derived
    if step.rule == 5:
        return isinstance(left, Lift) and isinstance(right, Lift) and (H, left.state, right.state) in derived
    if step.rule == 8:
        return isinstance(left, Next) and isinstance(right, Next) and (E, left.sub, right.sub) in derived
    return False


class _Deriver(object):
    def __init__(self, agents, eps):
        self.agents = frozenset(agents)
        self.eps = eps
        self.steps = []

    def _step(self, rule, kind, left, right):
        self.steps.append(Step(rule, kind, left, right))

    def _check_agents(self, formula):
        if formula.agents != self.agents:
            raise InputError("coalition %s in %s does not match agent set %s"
                             % (sorted(formula.agents), formula, sorted(self.agents)))

    def partner_of(self, phi):
        """gamma with (phi, gamma) in H."""
        if isinstance(phi, Atom):
            gamma = Diamond(self.eps, phi.name)
            self._step(1, H, phi, gamma)
            return gamma
        if isinstance(phi, Not):
            inner = self.partner_for(phi.sub)
            gamma = Not(inner)
            self._step(2, H, phi, gamma)
            return gamma
        if isinstance(phi, And):
            gamma = And(self.partner_of(phi.left), self.partner_of(phi.right))
            self._step(3, H, phi, gamma)
            return gamma
        if isinstance(phi, Coalition):
            self._check_agents(phi)
            gamma = Coalition(phi.agents, self.path_partner_of(phi.path))
            self._step(4, H, phi, gamma)
            return gamma
        raise _OutOfDomain(phi)

    def partner_for(self, gamma):
        """phi with (phi, gamma) in H."""
        if isinstance(gamma, Diamond):
            if gamma.eps != self.eps:
                raise _OutOfDomain(gamma)
            phi = Atom(gamma.name)
            self._step(1, H, phi, gamma)
            return phi
        if isinstance(gamma, Not):
            inner = self.partner_of(gamma.sub)
            phi = Not(inner)
            self._step(2, H, phi, gamma)
            return phi
        if isinstance(gamma, And):
            phi = And(self.partner_for(gamma.left), self.partner_for(gamma.right))
            self._step(3, H, phi, gamma)
            return phi
        if isinstance(gamma, Coalition):
            self._check_agents(gamma)
            phi = Coalition(gamma.agents, self.path_partner_for(gamma.path))
            self._step(4, H, phi, gamma)
            return phi
        raise _OutOfDomain(gamma)

    def path_partner_of(self, psi):
        """phi with (psi, phi) in E."""
        if isinstance(psi, Lift):
            result = Lift(self.partner_of(psi.state))
            rule = 5
        elif isinstance(psi, PathNot):
            result = PathNot(self.path_partner_for(psi.sub))
            rule = 6
        elif isinstance(psi, PathAnd):
            result = PathAnd(self.path_partner_of(psi.left), self.path_partner_of(psi.right))
            rule = 7
        elif isinstance(psi, Next):
            result = Next(self.path_partner_of(psi.sub))
            rule = 8
        elif isinstance(psi, Until):
            result = Until(self.path_partner_of(psi.left), self.path_partner_of(psi.right))
            rule = 9
        else:
            raise _OutOfDomain(psi)
        self._step(rule, E, psi, result)
        return result

    def path_partner_for(self, phi):
        """psi with (psi, phi) in E."""
        if isinstance(phi, Lift):
            result = Lift(self.partner_for(phi.state))
            rule = 5
        elif isinstance(phi, PathNot):
            result = PathNot(self.path_partner_of(phi.sub))
            rule = 6
        elif isinstance(phi, PathAnd):
            result = PathAnd(self.path_partner_for(phi.left), self.path_partner_for(phi.right))
            rule = 7
        elif isinstance(phi, Next):
            result = Next(self.path_partner_for(phi.sub))
            rule = 8
        elif isinstance(phi, Until):
            result = Until(self.path_partner_for(phi.left), self.path_partner_for(phi.right))
            rule = 9
        else:
            raise _OutOfDomain(phi)
        self._step(rule, E, result, phi)
        return result


def derive_h(formula, agents, eps):
    """HPartner for a state formula, or NOT_IN_DOMAIN."""
    deriver = _Deriver(agents, to_epsilon(eps))
    try:
        partner = deriver.partner_of(formula)
    except _OutOfDomain:
        return NOT_IN_DOMAIN
    return HPartner(formula, partner, deriver.steps, agents, deriver.eps)


def derive_e(formula, agents, eps):
    """HPartner (of kind E) for a path formula or positive LTL formula, or NOT_IN_DOMAIN."""
    if isinstance(formula, PositiveLtl):
        formula = as_path_formula(formula)
    deriver = _Deriver(agents, to_epsilon(eps))
    try:
        partner = deriver.path_partner_of(formula)
    except _OutOfDomain:
        return NOT_IN_DOMAIN
    return HPartner(formula, partner, deriver.steps, agents, deriver.eps)


def h_partner(formula, agents, eps):
    derived = derive_h(formula, agents, eps)
    return NOT_IN_DOMAIN if derived is NOT_IN_DOMAIN else derived.right


def e_partner(formula, agents, eps):
    derived = derive_e(formula, agents, eps)
    return NOT_IN_DOMAIN if derived is NOT_IN_DOMAIN else derived.right


def decide_H(formula, partner, agents, eps):
    try:
        return h_partner(formula, agents, eps) == partner
    except InputError:
        return False


def decide_E(formula, partner, agents, eps):
    if isinstance(partner, PositiveLtl):
        partner = as_path_formula(partner)
    try:
        return e_partner(formula, agents, eps) == partner
    except InputError:
        return False
