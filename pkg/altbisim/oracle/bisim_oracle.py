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

"""Relation enumeration: the union of every relation satisfying the bisimulation conditions as written."""

from altbisim.errors import InputError, OracleCapError
from altbisim.model.agent_ats import AgentAts
from altbisim.model.label_ats import LabelAts
from altbisim.model.validate import require_valid, shared_obs
from altbisim.utils.util import to_epsilon, within

from more_itertools import powerset
import itertools

# 2**12 candidate relations
MAX_PAIRS = 12


def _selections(system, q, agents):
    """Successor sets selectable by ``agents`` at q, recomputed from the raw choice table."""
    if not agents:
        return [frozenset(system.states)]
    result = []
    for picks in itertools.product(*[system.choices[(q, i)] for i in sorted(agents)]):
        inter = frozenset(system.states)
        for pick in picks:
            inter = inter & pick
        if inter not in result:
            result.append(inter)
    return result


def _only(states):
    (s,) = tuple(states)
    return s


def _ats_condition(first, second, agents, q1, q2, relation):
    opponents = set(first.agents) - set(agents)
    forth = all(
        any(all(any((_only(c1 & d1), _only(c2 & d2)) in relation for d1 in _selections(first, q1, opponents))
                for d2 in _selections(second, q2, opponents))
            for c2 in _selections(second, q2, agents))
        for c1 in _selections(first, q1, agents))
    back = all(
        any(all(any((_only(c1 & d1), _only(c2 & d2)) in relation for d2 in _selections(second, q2, opponents))
                for d1 in _selections(first, q1, opponents))
            for c1 in _selections(first, q1, agents))
        for c2 in _selections(second, q2, agents))
    return forth and back


def _label_condition(first, second, q1, q2, relation):
    def answers(a1, a2):
        return all(any((s1, s2) in relation for b1 in first.disturbances for s1 in first.post(q1, a1, b1))
                   for b2 in second.disturbances for s2 in second.post(q2, a2, b2))

    def answered(a2, a1):
        return all(any((s1, s2) in relation for b2 in second.disturbances for s2 in second.post(q2, a2, b2))
                   for b1 in first.disturbances for s1 in first.post(q1, a1, b1))

    forth = all(any(answers(a1, a2) for a2 in second.controls) for a1 in first.controls)
    back = all(any(answered(a2, a1) for a1 in first.controls) for a2 in second.controls)
    return forth and back


def enum_bisim(first, second, agents, eps):
    """Largest bisimulation by brute force over all relations; ``agents`` is None for labeled systems."""
    require_valid(first, second)
    eps = to_epsilon(eps)
    obs = shared_obs(first, second)
    pairs = [(q1, q2) for q1 in first.states for q2 in second.states]
    if len(pairs) > MAX_PAIRS:
        raise OracleCapError("relation enumeration is capped at %d state pairs, got %d" % (MAX_PAIRS, len(pairs)))

    if isinstance(first, AgentAts) and isinstance(second, AgentAts):
        if agents is None or set(first.agents) != set(second.agents) or not set(agents) <= set(first.agents):
            raise InputError("agent sets do not match")

        def condition(q1, q2, relation):
            return _ats_condition(first, second, frozenset(agents), q1, q2, relation)
    elif isinstance(first, LabelAts) and isinstance(second, LabelAts):
        def condition(q1, q2, relation):
            return _label_condition(first, second, q1, q2, relation)
    else:
        raise InputError("both systems must be of the same kind")

    # a relation holding a distant pair is never a bisimulation
    close = [(q1, q2) for q1, q2 in pairs if within(obs.distance(first.obsmap[q1], second.obsmap[q2]), eps)]
    largest = set()
    for candidate in powerset(close):
        relation = frozenset(candidate)
        if all(condition(q1, q2, relation) for q1, q2 in relation):
            largest |= relation
    return frozenset(largest)
