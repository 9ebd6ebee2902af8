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

"""Negation-free linear-time formulas: the specification language of synthesis."""

from altbisim.logic.formula import Atom, Diamond, Lift, PathAnd, Next, Until, disjunction, truth

from dataclasses import dataclass
from decimal import Decimal


class PositiveLtl(object):
    def __str__(self):
        from altbisim.logic.printer import format_formula
        return format_formula(self)

    def to_json(self):
        return str(self)


@dataclass(frozen=True, repr=False)
class LtlTrue(PositiveLtl):
    def __repr__(self):
        return "LtlTrue()"


@dataclass(frozen=True, repr=False)
class LtlAtom(PositiveLtl):
    name: str

    def __repr__(self):
        return "LtlAtom(%s)" % self.name


@dataclass(frozen=True, repr=False)
class LtlDiamond(PositiveLtl):
    eps: Decimal
    name: str

    def __repr__(self):
        return "LtlDiamond(%s, %s)" % (self.eps, self.name)


@dataclass(frozen=True, repr=False)
class LtlOr(PositiveLtl):
    left: PositiveLtl
    right: PositiveLtl

    def __repr__(self):
        return "LtlOr(%r, %r)" % (self.left, self.right)


@dataclass(frozen=True, repr=False)
class LtlAnd(PositiveLtl):
    left: PositiveLtl
    right: PositiveLtl

    def __repr__(self):
        return "LtlAnd(%r, %r)" % (self.left, self.right)


@dataclass(frozen=True, repr=False)
class LtlNext(PositiveLtl):
    sub: PositiveLtl

    def __repr__(self):
        return "LtlNext(%r)" % (self.sub,)


@dataclass(frozen=True, repr=False)
class LtlUntil(PositiveLtl):
    left: PositiveLtl
    right: PositiveLtl

    def __repr__(self):
        return "LtlUntil(%r, %r)" % (self.left, self.right)


def ltl_children(formula):
    if isinstance(formula, LtlNext):
        return (formula.sub,)
    if isinstance(formula, (LtlOr, LtlAnd, LtlUntil)):
        return (formula.left, formula.right)
    return ()


def ltl_subformulas(formula):
    seen = []

    def visit(f):
        for child in ltl_children(f):
            visit(child)
        if f not in seen:
            seen.append(f)

    visit(formula)
    return seen


def has_diamond(formula):
    return any(isinstance(f, LtlDiamond) for f in ltl_subformulas(formula))


def ltl_depth(formula):
    kids = ltl_children(formula)
    return 1 + max((ltl_depth(k) for k in kids), default=0)


def as_path_formula(formula):
    """The same property as an ATL path formula; ``|`` becomes !(!a & !b)."""
    if isinstance(formula, LtlTrue):
        return Lift(truth())
    if isinstance(formula, LtlAtom):
        return Lift(Atom(formula.name))
    if isinstance(formula, LtlDiamond):
        return Lift(Diamond(formula.eps, formula.name))
    if isinstance(formula, LtlOr):
        return disjunction(as_path_formula(formula.left), as_path_formula(formula.right))
    if isinstance(formula, LtlAnd):
        return PathAnd(as_path_formula(formula.left), as_path_formula(formula.right))
    if isinstance(formula, LtlNext):
        return Next(as_path_formula(formula.sub))
    if isinstance(formula, LtlUntil):
        return Until(as_path_formula(formula.left), as_path_formula(formula.right))
    raise TypeError("not a positive LTL formula: %r" % (formula,))
