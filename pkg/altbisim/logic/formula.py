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

"""ATL state and path formulas with the metric atom ``<eps> p``.

Nodes are frozen dataclasses, so formulas compare and hash structurally. ``str`` renders the formula DSL.
"""

from dataclasses import dataclass
from decimal import Decimal
from typing import FrozenSet

# Observation name used to encode ``true`` as p | !p.
TRUTH_ATOM = "_"


class StateFormula(object):
    def __str__(self):
        from altbisim.logic.printer import format_formula
        return format_formula(self)

    def to_json(self):
        return str(self)


class PathFormula(object):
    def __str__(self):
        from altbisim.logic.printer import format_formula
        return format_formula(self)

    def to_json(self):
        return str(self)


@dataclass(frozen=True, repr=False)
class Atom(StateFormula):
    name: str

    def __repr__(self):
        return "Atom(%s)" % self.name


@dataclass(frozen=True, repr=False)
class Diamond(StateFormula):
    eps: Decimal
    name: str

    def __repr__(self):
        return "Diamond(%s, %s)" % (self.eps, self.name)


@dataclass(frozen=True, repr=False)
class Not(StateFormula):
    sub: StateFormula

    def __repr__(self):
        return "Not(%r)" % (self.sub,)


@dataclass(frozen=True, repr=False)
class And(StateFormula):
    left: StateFormula
    right: StateFormula

    def __repr__(self):
        return "And(%r, %r)" % (self.left, self.right)


@dataclass(frozen=True, repr=False)
class Coalition(StateFormula):
    agents: FrozenSet[int]
    path: PathFormula

    def __post_init__(self):
        object.__setattr__(self, "agents", frozenset(self.agents))

    def __repr__(self):
        return "Coalition(%s, %r)" % (sorted(self.agents), self.path)


@dataclass(frozen=True, repr=False)
class Lift(PathFormula):
    state: StateFormula

    def __repr__(self):
        return "Lift(%r)" % (self.state,)


@dataclass(frozen=True, repr=False)
class PathNot(PathFormula):
    sub: PathFormula

    def __repr__(self):
        return "PathNot(%r)" % (self.sub,)


@dataclass(frozen=True, repr=False)
class PathAnd(PathFormula):
    left: PathFormula
    right: PathFormula

    def __repr__(self):
        return "PathAnd(%r, %r)" % (self.left, self.right)


@dataclass(frozen=True, repr=False)
class Next(PathFormula):
    sub: PathFormula

    def __repr__(self):
        return "Next(%r)" % (self.sub,)


@dataclass(frozen=True, repr=False)
class Until(PathFormula):
    left: PathFormula
    right: PathFormula

    def __repr__(self):
        return "Until(%r, %r)" % (self.left, self.right)


def disjunction(left, right):
    """``left | right`` as !(!left & !right), for state or path formulas."""
    if isinstance(left, PathFormula):
        return PathNot(PathAnd(PathNot(left), PathNot(right)))
    return Not(And(Not(left), Not(right)))


def as_disjunction(formula):
    """The (left, right) operands if ``formula`` has the shape of a derived disjunction, else None."""
    if isinstance(formula, Not) and isinstance(formula.sub, And) \
            and isinstance(formula.sub.left, Not) and isinstance(formula.sub.right, Not):
        return formula.sub.left.sub, formula.sub.right.sub
    if isinstance(formula, PathNot) and isinstance(formula.sub, PathAnd) \
            and isinstance(formula.sub.left, PathNot) and isinstance(formula.sub.right, PathNot):
        return formula.sub.left.sub, formula.sub.right.sub
    return None


def release(left, right):
    """``left R right`` as !(!left U !right)."""
    return PathNot(Until(PathNot(left), PathNot(right)))


def as_release(formula):
    if isinstance(formula, PathNot) and isinstance(formula.sub, Until) \
            and isinstance(formula.sub.left, PathNot) and isinstance(formula.sub.right, PathNot):
        return formula.sub.left.sub, formula.sub.right.sub
    return None


def truth():
    return disjunction(Atom(TRUTH_ATOM), Not(Atom(TRUTH_ATOM)))


def is_truth(formula):
    return formula == truth()


def conjoin(formulas):
    """Left-nested conjunction of a nonempty sequence."""
    formulas = list(formulas)
    result = formulas[0]
    for f in formulas[1:]:
        result = And(result, f)
    return result


def disjoin(formulas):
    formulas = list(formulas)
    result = formulas[0]
    for f in formulas[1:]:
        result = disjunction(result, f)
    return result


def subformulas(formula):
    """Every node of the formula, children before parents, without duplicates."""
    seen = []

    def visit(f):
        for child in children(f):
            visit(child)
        if f not in seen:
            seen.append(f)

    visit(formula)
    return seen


def children(formula):
    if isinstance(formula, (Not, PathNot, Next)):
        return (formula.sub,)
    if isinstance(formula, (And, PathAnd, Until)):
        return (formula.left, formula.right)
    if isinstance(formula, Coalition):
        return (formula.path,)
    if isinstance(formula, Lift):
        return (formula.state,)
    return ()


def diamonds(formula):
    return [f for f in subformulas(formula) if isinstance(f, Diamond)]


def coalition_agents(formula):
    return {f.agents for f in subformulas(formula) if isinstance(f, Coalition)}


def modal_depth(formula):
    """Nesting depth of coalition operators."""
    below = max([modal_depth(child) for child in children(formula)] or [0])
    return below + 1 if isinstance(formula, Coalition) else below
