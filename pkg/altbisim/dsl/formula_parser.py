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

"""Formula DSL.

Precedence, tightest first: the prefix operators ``!`` and ``X``; ``U`` and ``R`` (right associative); ``&``;
``|``. A coalition ``<<ags>>`` takes everything up to the end of the ``U``/``R`` chain that follows it, so
``<<1>> p U q`` is ``<<1>> (p U q)`` while ``<<1>> X p & q`` is ``(<<1>> X p) & q``. Subtrees with no
temporal operator outside a coalition are read as state formulas, so ``<<1>> (p & q)`` is a coalition over a
lifted conjunction.
"""

from altbisim.dsl.diagnostics import ParseDiagnostic, from_exception
from altbisim.errors import ParseError
from altbisim.logic.formula import Atom, Diamond, Not, And, Coalition, Lift, PathNot, PathAnd, Next, Until, \
    disjunction, release, truth
from altbisim.logic.positive import LtlTrue, LtlAtom, LtlDiamond, LtlOr, LtlAnd, LtlNext, LtlUntil
from altbisim.utils.util import to_decimal

from pyparsing import Forward, Keyword, Literal, Optional, ParseException, ParserElement, Regex, Suppress, Word, \
    ZeroOrMore, alphas, alphanums, lineno, col
import re

ParserElement.enablePackrat()

STATE = "state"
PATH = "path"
LTL = "ltl"
KINDS = (STATE, PATH, LTL)

TEMPORAL = ("X", "U", "R")


class _CoalitionOp(object):
    def __init__(self, agents, loc):
        self.agents = agents
        self.loc = loc


class _Raw(object):
    """Untyped parse tree node; ``loc`` is the offset of the node in the input."""

    def __init__(self, op, args, loc):
        self.op = op
        self.args = args
        self.loc = loc

    def temporal(self):
        """True iff a temporal operator occurs outside every coalition."""
        if self.op in TEMPORAL:
            return True
        if self.op == "coalition":
            return False
        return any(a.temporal() for a in self.args if isinstance(a, _Raw))


def _grammar():
    keyword = Keyword("X") | Keyword("U") | Keyword("R") | Keyword("true")
    identifier = ~keyword + Word(alphas + "_", alphanums + "_")
    number = Regex(r"\d+(\.\d*)?|\.\d+")

    atom = identifier.copy().setParseAction(lambda s, loc, t: _Raw("atom", [t[0]], loc))
    diamond = (Suppress("<") + number + Suppress(">") + identifier).setParseAction(
        lambda s, loc, t: _Raw("diamond", [t[0], t[1]], loc))
    true = Keyword("true").setParseAction(lambda s, loc, t: _Raw("true", [], loc))
    coalition = Regex(r"<<\s*(\d+(\s*,\s*\d+)*)?\s*>>").setParseAction(
        lambda s, loc, t: _CoalitionOp(frozenset(int(a) for a in re.findall(r"\d+", t[0])), loc))

    formula = Forward()
    unary = Forward()
    until = Forward()

    def right_binary(s, loc, t):
        if len(t) == 1:
            return t[0]
        return _Raw(t[1], [t[0], t[2]], loc)

    def left_binary(name):
        def action(s, loc, t):
            result = t[0]
            for right in t[2::2]:
                result = _Raw(name, [result, right], loc)
            return result
        return action

    primary = diamond | true | atom | Suppress("(") + formula + Suppress(")")
    quantified = (coalition + until).setParseAction(lambda s, loc, t: _Raw("coalition", [t[0].agents, t[1]], t[0].loc))
    negated = (Suppress("!") + unary).setParseAction(lambda s, loc, t: _Raw("not", [t[0]], loc))
    following = (Suppress(Keyword("X")) + unary).setParseAction(lambda s, loc, t: _Raw("X", [t[0]], loc))
    unary <<= quantified | negated | following | primary
    until <<= (unary + Optional((Keyword("U") | Keyword("R")) + until)).setParseAction(right_binary)
    conjunction = (until + ZeroOrMore(Literal("&") + until)).setParseAction(left_binary("and"))
    formula <<= (conjunction + ZeroOrMore(Literal("|") + conjunction)).setParseAction(left_binary("or"))
    return formula


_FORMULA = _grammar()


class _Builder(object):
    def __init__(self, text, source):
        self.text = text
        self.source = source

    def fail(self, node, message):
        raise ParseError([ParseDiagnostic(self.source, lineno(node.loc, self.text), col(node.loc, self.text),
                                          message)])

    def state(self, node):
        op, args = node.op, node.args
        if op == "atom":
            return Atom(args[0])
        if op == "diamond":
            return Diamond(to_decimal(args[0], "epsilon"), args[1])
        if op == "true":
            return truth()
        if op == "not":
            return Not(self.state(args[0]))
        if op == "and":
            return And(self.state(args[0]), self.state(args[1]))
        if op == "or":
            return disjunction(self.state(args[0]), self.state(args[1]))
        if op == "coalition":
            return Coalition(args[0], self.path(args[1]))
        self.fail(node, "temporal operator %s outside a coalition" % op)

    def path(self, node):
        if not node.temporal():
            return Lift(self.state(node))
        op, args = node.op, node.args
        if op == "not":
            return PathNot(self.path(args[0]))
        if op == "and":
            return PathAnd(self.path(args[0]), self.path(args[1]))
        if op == "or":
            return disjunction(self.path(args[0]), self.path(args[1]))
        if op == "X":
            return Next(self.path(args[0]))
        if op == "U":
            return Until(self.path(args[0]), self.path(args[1]))
        return release(self.path(args[0]), self.path(args[1]))

    def ltl(self, node):
        op, args = node.op, node.args
        if op == "atom":
            return LtlAtom(args[0])
        if op == "diamond":
            return LtlDiamond(to_decimal(args[0], "epsilon"), args[1])
        if op == "true":
            return LtlTrue()
        if op == "and":
            return LtlAnd(self.ltl(args[0]), self.ltl(args[1]))
        if op == "or":
            return LtlOr(self.ltl(args[0]), self.ltl(args[1]))
        if op == "X":
            return LtlNext(self.ltl(args[0]))
        if op == "U":
            return LtlUntil(self.ltl(args[0]), self.ltl(args[1]))
        operator = {"not": "!", "R": "R", "coalition": "<<...>>"}[op]
        self.fail(node, "%s is not allowed in a negation-free specification" % operator)


def parse_formula(text, kind=STATE, source="<formula>"):
    """Parse one formula of the given kind: ``state``, ``path`` or ``ltl``."""
    if kind not in KINDS:
        raise ValueError("unknown formula kind %s" % kind)
    try:
        raw = _FORMULA.parseString(text, parseAll=True)[0]
    except ParseException as e:
        raise ParseError([from_exception(source, e)])
    builder = _Builder(text, source)
    return getattr(builder, kind)(raw)
