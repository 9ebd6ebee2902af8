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
from altbisim.model.violation import Violation, SINGLETON, EMPTY_CHOICE, MISSING_CHOICE, UNKNOWN_STATE, OBSMAP

import itertools


def state_set_str(states, index=None):
    """Render a state set as ``{q1,q2}``, in declaration order when an index is given."""
    key = (lambda s: (index.get(s, len(index)), s)) if index is not None else str
    return "{" + ",".join(sorted(states, key=key)) + "}"


class AgentAts(object):
    """Agent-based alternating transition system.

    ``choices`` maps (state, agent) to the sets of states the agent may restrict the successor to. Every
    joint selection of one set per agent must intersect in exactly one state; ``validate`` reports where it
    does not. Instances are never mutated after construction.
    """

    def __init__(self, name, states, agents, obs, obsmap, choices):
        self.name = name
        self.states = tuple(states)
        self.agents = tuple(sorted(agents))
        self.obs = obs
        self.obsmap = dict(obsmap)
        self.choices = {}
        for key, sets in choices.items():
            ordered = []
            for s in sets:
                s = frozenset(s)
                if s not in ordered:
                    ordered.append(s)
            self.choices[key] = tuple(ordered)

        self.index = {q: i for i, q in enumerate(self.states)}
        self._state_set = frozenset(self.states)
        self._hbar_cache = {}

    @property
    def universe(self):
        return self._state_set

    def check_state(self, q):
        if q not in self.index:
            raise InputError("unknown state %s in system %s" % (q, self.name))

    def check_agents(self, agents):
        unknown = set(agents) - set(self.agents)
        if unknown:
            raise InputError("unknown agents %s in system %s" % (sorted(unknown), self.name))

    def complement(self, agents):
        return frozenset(self.agents) - frozenset(agents)

    def hbar(self, q, agents):
        """All intersections of one choice per agent in ``agents``; the empty agent set yields (S,)."""
        agents = frozenset(agents)
        key = (q, agents)
        if key in self._hbar_cache:
            return self._hbar_cache[key]

        self.check_state(q)
        self.check_agents(agents)
        if not agents:
            result = (self._state_set,)
        else:
            factors = []
            for i in sorted(agents):
                if (q, i) not in self.choices:
                    raise InputError("no choices for agent %d at state %s" % (i, q))
                factors.append(self.choices[(q, i)])
            result = []
            for selection in itertools.product(*factors):
                inter = frozenset.intersection(*selection)
                if inter not in result:
                    result.append(inter)
            result = tuple(result)

        self._hbar_cache[key] = result
        return result

    def meet(self, q, chosen, countered):
        """The unique successor selected by a coalition choice and an opponent choice at ``q``."""
        inter = chosen & countered
        if len(inter) != 1:
            raise InputError("choices %s and %s at %s do not meet in a single state"
                             % (self.format_set(chosen), self.format_set(countered), q))
        return next(iter(inter))

    def successors(self, q):
        result = set()
        for s in self.hbar(q, self.agents):
            result |= s
        return frozenset(result)

    def observation(self, q):
        self.check_state(q)
        return self.obsmap[q]

    def format_set(self, states):
        return state_set_str(states, self.index)

    def validate(self):
        violations = []

        for q in self.states:
            if q not in self.obsmap:
                violations.append(Violation(OBSMAP, "state %s has no observation" % q, (q,)))
            elif self.obsmap[q] not in self.obs:
                violations.append(Violation(OBSMAP, "state %s observes unknown %s" % (q, self.obsmap[q]), (q,)))
        for q in sorted(set(self.obsmap) - self._state_set):
            violations.append(Violation(UNKNOWN_STATE, "observation given for unknown state %s" % q, (q,)))

        for (q, i) in sorted(set(self.choices), key=lambda k: (str(k[0]), k[1])):
            if q not in self.index or i not in self.agents:
                violations.append(Violation(UNKNOWN_STATE, "choice for unknown state/agent (%s, %s)" % (q, i), (q, i)))

        for q in self.states:
            well_formed = True
            for i in self.agents:
                sets = self.choices.get((q, i))
                if sets is None:
                    violations.append(Violation(MISSING_CHOICE, "no choice for agent %d at %s" % (i, q), (q, i)))
                    well_formed = False
                    continue
                if not sets:
                    violations.append(Violation(EMPTY_CHOICE, "agent %d has no choice at %s" % (i, q), (q, i)))
                    well_formed = False
                for s in sets:
                    if not s:
                        violations.append(Violation(EMPTY_CHOICE, "agent %d offers the empty set at %s" % (i, q),
                                                    (q, i)))
                        well_formed = False
                    unknown = s - self._state_set
                    if unknown:
                        violations.append(Violation(UNKNOWN_STATE, "agent %d at %s names unknown states %s"
                                                    % (i, q, sorted(unknown)), (q, i)))
                        well_formed = False
            if not well_formed:
                continue

            factors = [self.choices[(q, i)] for i in self.agents]
            for selection in itertools.product(*factors):
                inter = frozenset.intersection(*selection) if selection else self._state_set
                if len(inter) != 1:
                    rendered = tuple(self.format_set(s) for s in selection)
                    violations.append(Violation(
                        SINGLETON, "selection %s at %s intersects in %s" % (
                            " x ".join(rendered), q, self.format_set(inter)), (q,) + rendered))

        violations.extend(self.obs.validate())
        return violations

    def __eq__(self, other):
        return isinstance(other, AgentAts) and \
            (self.name, self.states, self.agents, self.obs, self.obsmap, self.choices) == \
            (other.name, other.states, other.agents, other.obs, other.obsmap, other.choices)

    def __hash__(self):
        return hash((self.name, self.states, self.agents))

    def __str__(self):
        return "AgentAts(%s: %d states, agents %s)" % (self.name, len(self.states), list(self.agents))

    def to_json(self):
        return {
            "kind": "ats",
            "name": self.name,
            "states": list(self.states),
            "agents": list(self.agents),
            "obsmap": {q: self.obsmap.get(q) for q in self.states},
            "choices": {
                "%s/%d" % (q, i): [self.format_set(s) for s in sets]
                for (q, i), sets in self.choices.items()
            },
            "observations": self.obs
        }


def hbar_set(system, q, agents):
    """The set of successor sets ``agents`` can jointly enforce at q."""
    return frozenset(system.hbar(q, agents))
