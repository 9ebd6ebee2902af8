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

"""Seeded random systems for property tests and the ``gen`` command."""

from altbisim.errors import InputError
from altbisim.model.agent_ats import AgentAts
from altbisim.model.label_ats import LabelAts
from altbisim.model.metric import MetricObsSpace
from altbisim.utils.util import to_decimal, to_epsilon

from decimal import Decimal
import itertools
import logging
import random

logger = logging.getLogger(__name__)

ATS = "ats"
LATS = "lats"

# retries of the successor-matrix construction before falling back to a constant row
MAX_ATTEMPTS = 20

# spacing of generated observations on the line
SPACING = Decimal("0.75")


def _observation_space(count):
    points = {"p%d" % i: (SPACING * i,) for i in range(count)}
    return MetricObsSpace.chebyshev(1, points)


def _singleton_ok(sets_by_agent, agents):
    for selection in itertools.product(*[sets_by_agent[i] for i in agents]):
        if len(frozenset.intersection(*selection)) != 1:
            return False
    return True


def _choice_row(rng, states, agents, max_choices):
    """Choice sets of every agent at one state, from a random matrix of successors."""
    for _ in range(MAX_ATTEMPTS):
        sizes = [rng.randint(1, max_choices) for _ in agents]
        matrix = {cell: rng.choice(states) for cell in itertools.product(*[range(n) for n in sizes])}
        sets_by_agent = {}
        for position, i in enumerate(agents):
            sets_by_agent[i] = [frozenset(s for cell, s in matrix.items() if cell[position] == j)
                                for j in range(sizes[position])]
        if _singleton_ok(sets_by_agent, agents):
            return sets_by_agent
    target = frozenset([rng.choice(states)])
    return {i: [target] for i in agents}


def gen_ats(rng, name, states, agents, observations, max_choices=2):
    names = ["s%d" % i for i in range(states)]
    agent_ids = list(range(1, agents + 1))
    obs = _observation_space(observations)
    obsmap = {q: rng.choice(obs.observations) for q in names}
    choices = {}
    for q in names:
        for i, sets in _choice_row(rng, names, agent_ids, max_choices).items():
            choices[(q, i)] = sets
    return AgentAts(name, names, agent_ids, obs, obsmap, choices)


def gen_lats(rng, name, states, controls, disturbances, observations):
    names = ["s%d" % i for i in range(states)]
    a_labels = ["a%d" % i for i in range(1, controls + 1)]
    b_labels = ["b%d" % i for i in range(1, disturbances + 1)]
    obs = _observation_space(observations)
    obsmap = {q: rng.choice(obs.observations) for q in names}
    transitions = []
    for q, a, b in itertools.product(names, a_labels, b_labels):
        for q2 in rng.sample(names, rng.randint(1, min(2, states))):
            transitions.append((q, a, b, q2))
    return LabelAts(name, names, a_labels, b_labels, transitions, obs, obsmap)


def gen_fixture(seed, kind=ATS, states=3, agents=2, observations=2, controls=2, disturbances=2, max_choices=2):
    """Deterministic valid system for ``seed``; generated systems share one observation space per count."""
    if states < 1 or observations < 1:
        raise InputError("fixtures need at least one state and one observation")
    rng = random.Random(seed)
    name = "gen%s" % seed
    if kind == ATS:
        if agents < 1:
            raise InputError("fixtures need at least one agent")
        system = gen_ats(rng, name, states, agents, observations, max_choices)
    elif kind == LATS:
        if controls < 1 or disturbances < 1:
            raise InputError("fixtures need at least one control and one disturbance")
        system = gen_lats(rng, name, states, controls, disturbances, observations)
    else:
        raise InputError("unknown fixture kind %s" % kind)

    violations = system.validate()
    if violations:
        raise AssertionError("generated system %s is invalid: %s" % (name, violations[0]))
    logger.debug("generated %s", system)
    return system


def _point_names(values):
    """Names p0, p1, ... for the distinct coordinates, in increasing order."""
    return {x: "p%d" % i for i, x in enumerate(sorted(set(values)))}


def gen_refinement_pair(seed, states=3, controls=2, disturbances=2, eps="0.5"):
    """(sample, abstraction) labeled systems related by an alternating eps-approximate bisimulation.

    Every abstract state has one or two sample copies observed within eps of it; a copy moves to every copy of
    each abstract successor. Both systems share one chebyshev space of named points, so specifications can
    refer to the observations of either side.
    """
    eps = to_epsilon(eps)
    rng = random.Random(seed)
    abstraction = gen_lats(rng, "abs%s" % seed, states, controls, disturbances, 1)
    coordinates = {q: to_decimal(rng.randint(0, states)).normalize() for q in abstraction.states}

    copies = {}
    sample_coordinates = {}
    for q in abstraction.states:
        copies[q] = ["%s_%d" % (q, k) for k in range(rng.randint(1, 2))]
        for c in copies[q]:
            sample_coordinates[c] = (coordinates[q] + eps * rng.choice([-2, -1, 0, 1, 2]) / 2).normalize()

    names = _point_names(list(coordinates.values()) + list(sample_coordinates.values()))
    obs = MetricObsSpace.chebyshev(1, {name: (x,) for x, name in names.items()})
    abs_obsmap = {q: names[x] for q, x in coordinates.items()}
    sample_obsmap = {c: names[x] for c, x in sample_coordinates.items()}

    abstraction = LabelAts(abstraction.name, abstraction.states, abstraction.controls, abstraction.disturbances,
                           abstraction.transitions, obs, abs_obsmap)
    transitions = [(c, a, b, c2) for (q, a, b, q2) in abstraction.transitions for c in copies[q] for c2 in copies[q2]]
    sample = LabelAts("sample%s" % seed, [c for q in abstraction.states for c in copies[q]], abstraction.controls,
                      abstraction.disturbances, transitions, obs, sample_obsmap)
    return sample, abstraction
