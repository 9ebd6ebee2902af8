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
from altbisim.model.validate import shared_obs
from altbisim.utils.util import to_epsilon

import logging

logger = logging.getLogger(__name__)


def _require_non_blocking(*systems):
    for system in systems:
        violations = system.validate()
        if violations:
            raise InputError("labeled system %s is invalid (non-blocking systems required): %s"
                             % (system.name, "; ".join(str(v) for v in violations)))


def aea_forth_failure(first, second, q1, q2, relation):
    """A control a1 at q1 that no control at q2 matches, with the disturbance/successor breaking each candidate.

    a2 matches a1 when every successor of q2 under a2 (any disturbance) is related to some successor of q1
    under a1 (some disturbance).
    """
    for a1 in first.controls:
        reachable1 = [s for b1 in first.disturbances for s in first.post(q1, a1, b1)]
        responses = []
        for a2 in second.controls:
            breaker = None
            for b2 in second.disturbances:
                for s2 in second.post(q2, a2, b2):
                    if not any((s1, s2) in relation for s1 in reachable1):
                        breaker = (b2, s2)
                        break
                if breaker is not None:
                    break
            if breaker is None:
                break
            responses.append((a2, "%s->%s" % breaker))
        else:
            return a1, responses
    return None


def aea_back_failure(first, second, q1, q2, relation):
    for a2 in second.controls:
        reachable2 = [s for b2 in second.disturbances for s in second.post(q2, a2, b2)]
        responses = []
        for a1 in first.controls:
            breaker = None
            for b1 in first.disturbances:
                for s1 in first.post(q1, a1, b1):
                    if not any((s1, s2) in relation for s2 in reachable2):
                        breaker = (b1, s1)
                        break
                if breaker is not None:
                    break
            if breaker is None:
                break
            responses.append((a1, "%s->%s" % breaker))
        else:
            return a2, responses
    return None


def aea_bisim(first, second, eps):
    """Largest alternating eps-approximate bisimulation between two labeled systems."""
    _require_non_blocking(first, second)
    obs = shared_obs(first, second)
    eps = to_epsilon(eps)

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
        frozen = frozenset(relation)
        removed = {}
        for pair in ordered:
            if pair not in frozen:
                continue
            failure = aea_forth_failure(first, second, pair[0], pair[1], frozen)
            if failure is not None:
                removed[pair] = Refutation(rounds, FORTH, failure[0], failure[1])
                continue
            failure = aea_back_failure(first, second, pair[0], pair[1], frozen)
            if failure is not None:
                removed[pair] = Refutation(rounds, BACK, failure[0], failure[1])
        logger.debug("AeA refinement pass %d removed %d pair(s)", rounds, len(removed))
        if not removed:
            break
        relation -= set(removed)
        refutations.update(removed)

    return BisimResult(first.states, second.states, relation, eps, None, rounds, refutations)


def aea_check_relation(first, second, eps, relation):
    """Pairs of ``relation`` violating the AeA conditions; empty iff it is an AeA bisimulation."""
    _require_non_blocking(first, second)
    obs = shared_obs(first, second)
    eps = to_epsilon(eps)
    relation = frozenset(relation)
    for q1, q2 in relation:
        first.check_state(q1)
        second.check_state(q2)
    failures = []
    for q1, q2 in sorted(relation, key=lambda p: (first.index[p[0]], second.index[p[1]])):
        if not obs.within(first.obsmap[q1], second.obsmap[q2], eps):
            failures.append(((q1, q2), OBS_DISTANCE))
        elif aea_forth_failure(first, second, q1, q2, relation) is not None:
            failures.append(((q1, q2), FORTH))
        elif aea_back_failure(first, second, q1, q2, relation) is not None:
            failures.append(((q1, q2), BACK))
    return failures
