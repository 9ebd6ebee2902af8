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

"""System DSL: one statement per line, ``#`` starts a comment.

Agent systems::

    ats example
    agents 1
    obs {p1 p2}
    metric table {p1 p2 = 1.0}
    state q1 obs p1
    choice q1 agent 1 = { {q1} ; {q2} }

Labeled systems replace ``agents``/``choice`` with ``controls {a1,a2}``, ``disturbances {b1}`` and
``trans q a b -> q'``. A chebyshev space (``metric chebyshev dim N``) takes named ``point p (v1,...)``
declarations, and states may observe an anonymous vector ``state q obs (v1,...)``.
"""

from altbisim.dsl.diagnostics import ParseDiagnostic, from_exception
from altbisim.errors import InputError, ParseError
from altbisim.model.agent_ats import AgentAts
from altbisim.model.label_ats import LabelAts
from altbisim.model.metric import MetricObsSpace
from altbisim.utils.util import to_decimal, format_decimal

from pyparsing import Group, Keyword, Literal, Optional, ParseException, Regex, Suppress, Word, ZeroOrMore, \
    alphanums, delimitedList, nums
import io
import logging

logger = logging.getLogger(__name__)


def _statements():
    name = Word(alphanums + "_", alphanums + "_'")
    integer = Word(nums)
    number = Regex(r"[+-]?(\d+(\.\d*)?|\.\d+)")
    lbrace, rbrace = Suppress("{"), Suppress("}")
    names = Group(ZeroOrMore(name + Optional(Suppress(","))))
    vector = Group(Suppress("(") + delimitedList(number) + Suppress(")"))
    state_set = Group(lbrace + Optional(delimitedList(name)) + rbrace)

    def statement(kind, expr):
        return Keyword(kind) + expr

    return (
        statement("ats", name)
        | statement("lats", name)
        | statement("agents", integer | Group(lbrace + delimitedList(integer) + rbrace))
        | statement("obs", lbrace + names + rbrace)
        | (Keyword("metric") + Keyword("table") + lbrace
           + Group(Optional(delimitedList(Group(name + name + Suppress("=") + number), ";") + Optional(Suppress(";"))))
           + rbrace)
        | (Keyword("metric") + Keyword("chebyshev") + Suppress(Keyword("dim")) + integer)
        | statement("point", name + vector)
        | statement("state", name + Suppress(Keyword("obs")) + (vector | name))
        | statement("choice", name + Suppress(Keyword("agent")) + integer + Suppress("=") + lbrace
                    + Group(delimitedList(state_set, ";")) + rbrace)
        | statement("controls", lbrace + names + rbrace)
        | statement("disturbances", lbrace + names + rbrace)
        | statement("trans", name + name + name + Suppress(Literal("->")) + name)
    )


_STATEMENT = _statements()


def anonymous_name(vector):
    return "(" + ",".join(format_decimal(x) for x in vector) + ")"


class _Assembler(object):
    """Collects statements and reports problems as diagnostics against their lines."""

    def __init__(self, source):
        self.source = source
        self.diagnostics = []
        self.kind = None
        self.name = None
        self.header_line = 1
        self.agents = None
        self.observations = []
        self.metric = None
        self.metric_line = 1
        self.points = {}
        self.states = []
        self.state_lines = {}
        self.obsmap = {}
        self.choices = {}
        self.controls = None
        self.disturbances = None
        self.transitions = []

    def error(self, line, message, column=1):
        self.diagnostics.append(ParseDiagnostic(self.source, line, column, message))

    def add(self, line, tokens):
        keyword = tokens[0]
        if self.kind is None and keyword not in ("ats", "lats"):
            self.error(line, "expected 'ats NAME' or 'lats NAME' before %s" % keyword)
            return
        if keyword in ("ats", "lats"):
            if self.kind is not None:
                self.error(line, "duplicate system header")
                return
            self.kind, self.name, self.header_line = keyword, tokens[1], line
        elif keyword == "agents":
            self._expect("ats", line, keyword)
            count = tokens[1]
            self.agents = list(range(1, int(count) + 1)) if isinstance(count, str) else sorted(int(i) for i in count)
        elif keyword == "obs":
            self.observations.extend(p for p in tokens[1] if p not in self.observations)
        elif keyword == "metric":
            if self.metric is not None:
                self.error(line, "duplicate metric declaration")
                return
            self.metric_line = line
            if tokens[1] == "table":
                self.metric = ("table", {(p, q): v for p, q, v in tokens[2]})
            else:
                self.metric = ("chebyshev", int(tokens[2]))
        elif keyword == "point":
            self.points[tokens[1]] = tuple(to_decimal(x, "coordinate") for x in tokens[2])
        elif keyword == "state":
            q, observed = tokens[1], tokens[2]
            if q in self.state_lines:
                self.error(line, "duplicate state %s (first declared on line %d)" % (q, self.state_lines[q]))
                return
            if not isinstance(observed, str):
                vector = tuple(to_decimal(x, "coordinate") for x in observed)
                observed = anonymous_name(vector)
                self.points[observed] = vector
            self.states.append(q)
            self.state_lines[q] = line
            self.obsmap[q] = observed
        elif keyword == "choice":
            self._expect("ats", line, keyword)
            key = (tokens[1], int(tokens[2]))
            if key in self.choices:
                self.error(line, "duplicate choice for %s agent %d" % key)
                return
            self.choices[key] = [frozenset(s) for s in tokens[3]]
            self.state_lines.setdefault(("choice", key), line)
        elif keyword in ("controls", "disturbances"):
            self._expect("lats", line, keyword)
            setattr(self, keyword, list(tokens[1]))
        elif keyword == "trans":
            self._expect("lats", line, keyword)
            self.transitions.append(tuple(tokens[1:5]))

    def _expect(self, kind, line, keyword):
        if self.kind != kind:
            self.error(line, "'%s' is not allowed in a %s file" % (keyword, self.kind))

    def _space(self):
        if self.metric is None:
            self.error(self.header_line, "no metric declared")
            return None
        try:
            if self.metric[0] == "table":
                observations = list(self.observations)
                for q in self.states:
                    if self.obsmap[q] not in observations:
                        observations.append(self.obsmap[q])
                return MetricObsSpace.table(observations, self.metric[1])
            points = dict(self.points)
            for p in self.observations:
                if p not in points:
                    raise InputError("observation %s has no point" % p)
            return MetricObsSpace.chebyshev(self.metric[1], points)
        except InputError as e:
            self.error(self.metric_line, str(e))
            return None

    def build(self):
        if self.kind is None:
            self.error(1, "empty system description")
            return None
        obs = self._space()
        if obs is None:
            return None
        if self.kind == "ats":
            if self.agents is None:
                self.error(self.header_line, "no agents declared")
                return None
            return AgentAts(self.name, self.states, self.agents, obs, self.obsmap, self.choices)
        for label in ("controls", "disturbances"):
            if getattr(self, label) is None:
                self.error(self.header_line, "no %s declared" % label)
        if self.controls is None or self.disturbances is None:
            return None
        return LabelAts(self.name, self.states, self.controls, self.disturbances, self.transitions, obs,
                        self.obsmap)

    def line_of(self, violation):
        for key in (violation.where[:1], violation.where[:2]):
            if len(key) == 1 and key[0] in self.state_lines:
                return self.state_lines[key[0]]
            if len(key) == 2 and ("choice", key) in self.state_lines:
                return self.state_lines[("choice", key)]
        return self.metric_line if violation.kind == "metric" else self.header_line


def _strip(line):
    return line.split("#", 1)[0]


def parse_system(text, source="<system>", validate=True):
    """AgentAts or LabelAts described by ``text``; every problem is raised as a ParseError."""
    assembler = _Assembler(source)
    for number, line in enumerate(text.splitlines(), 1):
        body = _strip(line)
        if not body.strip():
            continue
        try:
            tokens = _STATEMENT.parseString(body, parseAll=True)
        except ParseException as e:
            assembler.diagnostics.append(from_exception(source, e, number - 1))
            continue
        try:
            assembler.add(number, tokens)
        except InputError as e:
            assembler.error(number, str(e))

    system = None
    if not assembler.diagnostics:
        system = assembler.build()
    if system is not None and validate:
        for violation in system.validate():
            assembler.error(assembler.line_of(violation), "%s: %s" % (violation.kind, violation.message))
    if assembler.diagnostics:
        raise ParseError(assembler.diagnostics)
    logger.debug("parsed %s from %s", system, source)
    return system


def load_system(path, validate=True):
    with io.open(path, encoding="utf-8") as f:
        return parse_system(f.read(), source=path, validate=validate)
