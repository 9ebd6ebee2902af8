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
from altbisim.model.agent_ats import state_set_str
from altbisim.model.violation import Violation, BLOCKING, UNKNOWN_STATE, UNKNOWN_LABEL, OBSMAP


class LabelAts(object):
    """Control/disturbance labeled alternating transition system.

    A transition (q, a, b, q') fires when the controller plays ``a`` and the environment plays ``b``; the
    successor may still be nondeterministic.
    """

    def __init__(self, name, states, controls, disturbances, transitions, obs, obsmap):
        self.name = name
        self.states = tuple(states)
        self.controls = tuple(controls)
        self.disturbances = tuple(disturbances)
        self.obs = obs
        self.obsmap = dict(obsmap)

        self.transitions = []
        self._post = {}
        for (q, a, b, q2) in transitions:
            if q2 in self._post.get((q, a, b), ()):
                continue
            self.transitions.append((q, a, b, q2))
            self._post[(q, a, b)] = self._post.get((q, a, b), ()) + (q2,)
        self.transitions = tuple(self.transitions)

        self.index = {q: i for i, q in enumerate(self.states)}

    @property
    def universe(self):
        return frozenset(self.states)

    def check_state(self, q):
        if q not in self.index:
            raise InputError("unknown state %s in system %s" % (q, self.name))

    def post(self, q, a, b):
        return self._post.get((q, a, b), ())

    def successors(self, q):
        return frozenset(q2 for (q1, _, _, q2) in self.transitions if q1 == q)

    def observation(self, q):
        self.check_state(q)
        return self.obsmap[q]

    def format_set(self, states):
        return state_set_str(states, self.index)

    def validate(self):
        violations = []
        states, controls, disturbances = set(self.states), set(self.controls), set(self.disturbances)

        for q in self.states:
            if q not in self.obsmap:
                violations.append(Violation(OBSMAP, "state %s has no observation" % q, (q,)))
            elif self.obsmap[q] not in self.obs:
                violations.append(Violation(OBSMAP, "state %s observes unknown %s" % (q, self.obsmap[q]), (q,)))
        if not self.controls:
            violations.append(Violation(UNKNOWN_LABEL, "no control labels declared"))
        if not self.disturbances:
            violations.append(Violation(UNKNOWN_LABEL, "no disturbance labels declared"))

        for (q, a, b, q2) in self.transitions:
            for s in (q, q2):
                if s not in states:
                    violations.append(Violation(UNKNOWN_STATE, "transition %s %s %s -> %s names unknown state %s"
                                                % (q, a, b, q2, s), (q, a, b)))
            if a not in controls:
                violations.append(Violation(UNKNOWN_LABEL, "unknown control %s" % a, (q, a, b)))
            if b not in disturbances:
                violations.append(Violation(UNKNOWN_LABEL, "unknown disturbance %s" % b, (q, a, b)))

        for q in self.states:
            for a in self.controls:
                for b in self.disturbances:
                    if not self._post.get((q, a, b)):
                        violations.append(Violation(BLOCKING, "no successor for (%s, %s, %s)" % (q, a, b), (q, a, b)))

        violations.extend(self.obs.validate())
        return violations

    def __eq__(self, other):
        return isinstance(other, LabelAts) and \
            (self.name, self.states, self.controls, self.disturbances, set(self.transitions), self.obs,
             self.obsmap) == \
            (other.name, other.states, other.controls, other.disturbances, set(other.transitions), other.obs,
             other.obsmap)

    def __hash__(self):
        return hash((self.name, self.states, self.controls, self.disturbances))

    def __str__(self):
        return "LabelAts(%s: %d states, %d transitions)" % (self.name, len(self.states), len(self.transitions))

    def to_json(self):
        return {
            "kind": "lats",
            "name": self.name,
            "states": list(self.states),
            "controls": list(self.controls),
            "disturbances": list(self.disturbances),
            "transitions": ["%s %s %s -> %s" % t for t in self.transitions],
            "obsmap": {q: self.obsmap.get(q) for q in self.states},
            "observations": self.obs
        }
