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

from altbisim.bisim.result import BisimResult, Refutation, OBS_DISTANCE, FORTH, BACK
from altbisim.errors import InputError
from altbisim.model.validate import require_valid, shared_obs
from altbisim.utils.util import to_epsilon

import logging

logger = logging.getLogger(__name__)


def check_compatible(first, second, agents):
    if first.agents != second.agents:
        raise InputError("agent sets differ: %s vs %s" % (list(first.agents), list(second.agents)))
    unknown = set(agents) - set(first.agents)
    if unknown:
        raise InputError("agents %s are not agents of the systems" % sorted(unknown))


def forth_failure(first, second, agents, q1, q2, relation):
    """(Q1, responses) when a coalition choice at q1 has no counterpart at q2, else None.

    The counterpart Q2 must, against every opponent reply Q2' at q2, admit a reply Q1' at q1 whose successors
    are related. ``responses`` holds, for every candidate Q2, the first reply Q2' that defeats it.
    """
    opponents = first.complement(agents)
    for chosen in first.hbar(q1, agents):
        responses = []
        for candidate in second.hbar(q2, agents):
            breaker = None
            for countered in second.hbar(q2, opponents):
                s2 = second.meet(q2, candidate, countered)
                if not any((first.meet(q1, chosen, reply), s2) in relation for reply in first.hbar(q1, opponents)):
                    breaker = countered
                    break
            if breaker is None:
                break
            responses.append((candidate, breaker))
        else:
            return chosen, responses
    return None


def back_failure(first, second, agents, q1, q2, relation):
    """Mirror of ``forth_failure``: a coalition choice at q2 that no choice at q1 answers."""
    opponents = second.complement(agents)
    for chosen in second.hbar(q2, agents):
        responses = []
        for candidate in first.hbar(q1, agents):
            breaker = None
            for countered in first.hbar(q1, opponents):
                s1 = first.meet(q1, candidate, countered)
                if not any((s1, second.meet(q2, chosen, reply)) in relation for reply in second.hbar(q2, opponents)):
                    breaker = countered
                    break
            if breaker is None:
                break
            responses.append((candidate, breaker))
        else:
            return chosen, responses
    return None


def _setup(first, second, agents, eps):
    require_valid(first, second)
    check_compatible(first, second, agents)
    return shared_obs(first, second), to_epsilon(eps), frozenset(agents)


def approx_bisim(first, second, agents, eps):
    """Largest (agents, eps)-alternating approximate bisimulation between two agent systems.

    Starts from every pair whose observations are within eps and removes, pass by pass, the pairs that fail the
    forth or back condition against the relation of the previous pass.
    """
    obs, eps, agents = _setup(first, second, agents, eps)

    relation = set()
    refutations = {}
    for q1 in first.states:
        for q2 in second.states:
            if obs.within(first.obsmap[q1], second.obsmap[q2], eps):
                relation.add((q1, q2))
            else:
                refutations[(q1, q2)] = Refutation(0, OBS_DISTANCE)

    ordered = [(q1, q2) for q1 in first.states for q2 in second.states]
    rounds = 0
    while True:
        rounds += 1
        removed = {}
        frozen = frozenset(relation)
        for pair in ordered:
            if pair not in frozen:
                continue
            failure = forth_failure(first, second, agents, pair[0], pair[1], frozen)
            if failure is not None:
                removed[pair] = Refutation(rounds, FORTH, failure[0], failure[1])
                continue
            failure = back_failure(first, second, agents, pair[0], pair[1], frozen)
            if failure is not None:
                removed[pair] = Refutation(rounds, BACK, failure[0], failure[1])
        logger.debug("refinement pass %d removed %d pair(s)", rounds, len(removed))
        if not removed:
            break
        relation -= set(removed)
        refutations.update(removed)

    return BisimResult(first.states, second.states, relation, eps, agents, rounds, refutations)


def exact_bisim(first, second, agents):
    return approx_bisim(first, second, agents, 0)


def check_relation(first, second, agents, eps, relation):
    """Pairs of ``relation`` violating the bisimulation conditions, with the failed condition.

    An empty result means ``relation`` is itself an (agents, eps)-alternating approximate bisimulation.
    """
    obs, eps, agents = _setup(first, second, agents, eps)
    relation = frozenset(relation)
    for q1, q2 in relation:
        first.check_state(q1)
        second.check_state(q2)
    failures = []
    for q1, q2 in sorted(relation, key=lambda p: (first.index[p[0]], second.index[p[1]])):
        if not obs.within(first.obsmap[q1], second.obsmap[q2], eps):
            failures.append(((q1, q2), OBS_DISTANCE))
        elif forth_failure(first, second, agents, q1, q2, relation) is not None:
            failures.append(((q1, q2), FORTH))
        elif back_failure(first, second, agents, q1, q2, relation) is not None:
            failures.append(((q1, q2), BACK))
    return failures
