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

from altbisim.dsl import parse_formula, parse_system, load_system, format_system, ParseDiagnostic, STATE, PATH, LTL
from altbisim.errors import ParseError
from altbisim.logic.formula import Atom, Diamond, Not, And, Coalition, Lift, PathNot, Next, Until, disjunction, \
    release, truth
from altbisim.logic.positive import LtlTrue, LtlAtom, LtlDiamond, LtlAnd, LtlNext, LtlUntil
from altbisim.model import AgentAts, LabelAts
from tests.altbisim_mock import example1, matrix_game, plant, fine_and_coarse, resource

from decimal import Decimal

import io
import pytest

ROUND_TRIP = [
    "<<1>> X p1",
    "!<<1,2>> (p1 U <0.5> p2)",
    "<<>> (p1 R p2) & p3",
    "p1 | !p2",
    "<<2>> X X (p1 & !<<1>> X p2)",
    "<<1>> (<<2>> X p1) U p2",
    "<<1>> X !<<2>> p1 U p2 R p3",
    "true",
]


def matrix_text():
    with io.open(resource("matrix_game.ats")) as f:
        return f.read()


class CheckParseFormula(object):

    def check_coalition_next(self):
        assert parse_formula("<<1>> X p1") == Coalition(frozenset([1]), Next(Lift(Atom("p1"))))

    def check_precedence(self):
        p, q, r = Atom("p"), Atom("q"), Atom("r")
        assert parse_formula("p & q | r") == disjunction(And(p, q), r)
        assert parse_formula("!p & q") == And(Not(p), q)
        assert parse_formula("<1.5> p") == Diamond(Decimal("1.5"), "p")
        assert parse_formula("true") == truth()

    def check_coalition_takes_the_until_chain(self):
        p1, p2, p3 = Lift(Atom("p1")), Lift(Atom("p2")), Lift(Atom("p3"))
        assert parse_formula("<<1>> p2 U p1") == parse_formula("<<1>> (p2 U p1)") == \
            Coalition(frozenset([1]), Until(p2, p1))
        assert parse_formula("<<1>> X p2 U p1") == Coalition(frozenset([1]), Until(Next(p2), p1))
        assert parse_formula("<<1>> p3 U p2 U p1") == Coalition(frozenset([1]), Until(p3, Until(p2, p1)))
        assert parse_formula("<<1>> X p2 & p1") == And(Coalition(frozenset([1]), Next(p2)), Atom("p1"))
        assert parse_formula("!<<1>> p2 U p1") == Not(Coalition(frozenset([1]), Until(p2, p1)))
        assert parse_formula("(<<1>> X p2) U p1", PATH) == Until(Lift(Coalition(frozenset([1]), Next(p2))), p1)
        with pytest.raises(ParseError):
            parse_formula("(<<1>> X p2) U p1")

    def check_coalition_operands_of_until_print_parenthesized(self):
        inner = Coalition(frozenset([2]), Next(Lift(Atom("p2"))))
        for left in (inner, Not(inner), Coalition(frozenset([2]), Until(Lift(Atom("p3")), Lift(Atom("p2"))))):
            formula = Coalition(frozenset([1]), Until(Lift(left), Lift(Atom("p1"))))
            assert str(formula).startswith("<<1>> ((")
            assert parse_formula(str(formula)) == formula
            released = Coalition(frozenset([1]), release(Lift(left), Lift(Atom("p1"))))
            assert parse_formula(str(released)) == released
        assert str(Coalition(frozenset([1]), Until(Lift(Atom("p2")), Lift(inner)))) == "<<1>> (p2 U <<2>> X p2)"

    def check_path_lifts_maximally(self):
        assert parse_formula("!p & q", PATH) == Lift(And(Not(Atom("p")), Atom("q")))
        assert parse_formula("!(p U q)", PATH) == PathNot(Until(Lift(Atom("p")), Lift(Atom("q"))))
        assert parse_formula("X !p", PATH) == Next(Lift(Not(Atom("p"))))

    def check_ltl(self):
        assert parse_formula("true U goal", LTL) == LtlUntil(LtlTrue(), LtlAtom("goal"))
        assert parse_formula("X <0.25> mid & init", LTL) == \
            LtlAnd(LtlNext(LtlDiamond(Decimal("0.25"), "mid")), LtlAtom("init"))

    def check_ltl_rejects_negation(self):
        for text in ("!p", "p R q", "<<1>> X p"):
            with pytest.raises(ParseError):
                parse_formula(text, LTL)

    def check_temporal_outside_coalition(self):
        with pytest.raises(ParseError) as e:
            parse_formula("p & X q", STATE)
        assert "outside a coalition" in e.value.diagnostics[0].message

    def check_syntax_error(self):
        with pytest.raises(ParseError) as e:
            parse_formula("p &", source="spec.yml")
        assert e.value.diagnostics[0].source == "spec.yml"
        assert e.value.diagnostics[0].line == 1

    def check_unknown_kind(self):
        with pytest.raises(ValueError):
            parse_formula("p", "ctl")

    def check_printed_formulas_parse_back(self):
        for text in ROUND_TRIP:
            formula = parse_formula(text)
            assert parse_formula(str(formula)) == formula, text
        for text in ("true U goal", "X (goal | <1> trap)", "(init U goal) & X X goal"):
            formula = parse_formula(text, LTL)
            assert parse_formula(str(formula), LTL) == formula, text

    def check_printer(self):
        assert str(parse_formula("p1 | !p2")) == "(p1 | !p2)"
        assert str(parse_formula("<<1,2>> (p1 R p2)")) == "<<1,2>> (p1 R p2)"
        assert str(parse_formula("<1> p")) == "<1> p"


class CheckParseSystem(object):

    def check_agent_system(self):
        system = example1()
        assert isinstance(system, AgentAts)
        assert system.name == "example1"
        assert list(system.states) == ["q1", "q2", "q3"]
        assert system.obsmap["q3"] == "p3"
        assert system.obs.distance("p1", "p3") == Decimal(2)

    def check_labeled_system(self):
        system = plant()
        assert isinstance(system, LabelAts)
        assert list(system.controls) == ["a1", "a2"]
        assert system.post("q0", "a2", "b2") == {"t"}

    def check_chebyshev_points(self):
        fine, coarse = fine_and_coarse()
        assert coarse.obs.distance("low", "high") == Decimal(2)
        assert fine.obsmap["s0"] == "(0.25)"
        assert fine.obs.distance("(0.25)", "low") == Decimal("0.25")

    def check_broken_line_is_reported(self):
        with pytest.raises(ParseError) as e:
            load_system(resource("broken.lats"))
        diagnostic = e.value.diagnostics[0]
        assert diagnostic.line == 7
        assert diagnostic.source == resource("broken.lats")

    def check_every_bad_line_is_reported(self):
        text = "lats x\ncontrols {a}\nbogus line\ndisturbances {b}\nalso bogus\n"
        with pytest.raises(ParseError) as e:
            parse_system(text)
        assert [d.line for d in e.value.diagnostics] == [3, 5]

    def check_duplicate_state(self):
        text = matrix_text().replace("state d obs win", "state d obs win\nstate a obs lose")
        with pytest.raises(ParseError) as e:
            parse_system(text)
        assert "duplicate state a" in str(e.value)

    def check_keyword_of_other_kind(self):
        text = matrix_text() + "trans q0 a b -> a\n"
        with pytest.raises(ParseError) as e:
            parse_system(text)
        assert "'trans' is not allowed in a ats file" in str(e.value)

    def check_missing_metric(self):
        with pytest.raises(ParseError) as e:
            parse_system("lats x\ncontrols {a}\ndisturbances {b}\nobs {p}\nstate q obs p\ntrans q a b -> q\n")
        assert e.value.diagnostics[0].message == "no metric declared"

    def check_validation_points_at_state(self):
        text = matrix_text().replace("choice q0 agent 2 = { {a, c} ; {b, d} }",
                                     "choice q0 agent 2 = { {a, b, c} ; {d} }")
        with pytest.raises(ParseError) as e:
            parse_system(text, source="rigged.ats")
        assert any(d.line == 7 for d in e.value.diagnostics)
        assert parse_system(text, validate=False).name == "matrix"

    def check_printed_systems_parse_back(self):
        fine, coarse = fine_and_coarse()
        for system in (example1(), matrix_game(), plant(), fine, coarse):
            assert parse_system(format_system(system)) == system


class CheckDiagnostics(object):

    def check_format(self):
        diagnostic = ParseDiagnostic("plant.lats", 7, 3, "expected '->'")
        assert str(diagnostic) == "plant.lats:7:3: error: expected '->'"
        assert diagnostic.to_json()["line"] == 7

    def check_parse_error_message_lists_diagnostics(self):
        first = ParseDiagnostic("a", 1, 1, "one")
        second = ParseDiagnostic("a", 2, 1, "two")
        assert str(ParseError([first, second])) == "a:1:1: error: one\na:2:1: error: two"
