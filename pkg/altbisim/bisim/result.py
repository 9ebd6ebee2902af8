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

from altbisim.utils.util import format_decimal

OBS_DISTANCE = "obs-distance"
FORTH = "forth"
BACK = "back"


class Refutation(object):
    """Why a pair left the relation.

    ``witness`` is the uncounterable choice set (or control label) and ``responses`` lists, for every candidate
    answer of the other side, the opponent reply that broke it. Choice sets are frozensets of states.
    """

    def __init__(self, round, reason, witness=None, responses=()):
        self.round = round
        self.reason = reason
        self.witness = witness
        self.responses = tuple(responses)

    def __eq__(self, other):
        return isinstance(other, Refutation) and \
            (self.round, self.reason, self.witness, self.responses) == \
            (other.round, other.reason, other.witness, other.responses)

    def __hash__(self):
        return hash((self.round, self.reason, self.witness))

    def __repr__(self):
        return "Refutation(%d, %s, %s)" % (self.round, self.reason, _render(self.witness))

    def to_json(self):
        data = {"round": self.round, "reason": self.reason}
        if self.witness is not None:
            data["witness"] = _render(self.witness)
            data["responses"] = [[_render(a), _render(b)] for a, b in self.responses]
        return data


def _render(value):
    if isinstance(value, frozenset):
        return "{" + ",".join(sorted(value)) + "}"
    return str(value)


class BisimResult(object):
    """A greatest bisimulation between the states of two systems, with the trace of its refinement."""

    def __init__(self, left_states, right_states, relation, epsilon, agents, rounds, refutations):
        self.left_states = tuple(left_states)
        self.right_states = tuple(right_states)
        self.relation = frozenset(relation)
        self.epsilon = epsilon
        self.agents = None if agents is None else frozenset(agents)
        self.rounds = rounds
        self.refutations = dict(refutations)

    def related(self, q1, q2):
        return (q1, q2) in self.relation

    def ordered_pairs(self):
        """Relation pairs in declaration order of both systems."""
        left = {q: i for i, q in enumerate(self.left_states)}
        right = {q: i for i, q in enumerate(self.right_states)}
        return sorted(self.relation, key=lambda pair: (left[pair[0]], right[pair[1]]))

    @property
    def systems_bisimilar(self):
        """Every state on each side is related to some state on the other."""
        return {q1 for q1, _ in self.relation} == set(self.left_states) and \
            {q2 for _, q2 in self.relation} == set(self.right_states)

    def __eq__(self, other):
        return isinstance(other, BisimResult) and self.relation == other.relation and \
            self.epsilon == other.epsilon and self.agents == other.agents

    def __hash__(self):
        return hash(self.relation)

    def to_json(self):
        left = {q: i for i, q in enumerate(self.left_states)}
        right = {q: i for i, q in enumerate(self.right_states)}
        refuted = sorted(self.refutations, key=lambda pair: (left[pair[0]], right[pair[1]]))
        return {
            "epsilon": format_decimal(self.epsilon),
            "agents": None if self.agents is None else sorted(self.agents),
            "rounds": self.rounds,
            "relation": [list(pair) for pair in self.ordered_pairs()],
            "systems_bisimilar": self.systems_bisimilar,
            "refutations": [dict(pair=list(pair), **self.refutations[pair].to_json()) for pair in refuted]
        }
