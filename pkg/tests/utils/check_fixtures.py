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

from altbisim.bisim import aea_bisim
from altbisim.dsl import format_system, parse_formula, parse_system, LTL
from altbisim.errors import InputError
from altbisim.logic.positive import LtlAtom, LtlTrue, LtlUntil
from altbisim.model import AgentAts, LabelAts, validate
from altbisim.utils.fixtures import gen_fixture, gen_refinement_pair, ATS, LATS

from hypothesis import given, settings
from hypothesis.strategies import integers, sampled_from

import pytest

MAX_EXAMPLES = 50


class CheckFixtures(object):

    def check_small_agent_system(self):
        system = gen_fixture(0, states=2)
        assert isinstance(system, AgentAts)
        assert len(system.states) == 2
        assert validate(system) == []

    def check_same_seed_same_system(self):
        assert gen_fixture(11, LATS, states=4) == gen_fixture(11, LATS, states=4)
        assert format_system(gen_fixture(11)) == format_system(gen_fixture(11))

    def check_two_hundred_seeds_are_valid(self):
        for seed in range(200):
            assert validate(gen_fixture(seed, ATS, states=1 + seed % 3, agents=1 + seed % 2)) == []

    @given(seed=integers(min_value=0, max_value=10 ** 6), kind=sampled_from([ATS, LATS]),
           states=integers(min_value=1, max_value=5), agents=integers(min_value=1, max_value=3))
    @settings(deadline=None, max_examples=MAX_EXAMPLES)
    def check_generated_systems_are_valid(self, seed, kind, states, agents):
        system = gen_fixture(seed, kind, states=states, agents=agents)
        assert validate(system) == []
        assert isinstance(system, AgentAts if kind == ATS else LabelAts)

    @given(seed=integers(min_value=0, max_value=10 ** 6))
    @settings(deadline=None, max_examples=MAX_EXAMPLES)
    def check_printed_fixtures_parse_back(self, seed):
        system = gen_fixture(seed, LATS, states=3)
        assert parse_system(format_system(system)) == system

    @given(seed=integers(min_value=0, max_value=10 ** 6), eps=sampled_from(["0", "0.5", "1"]))
    @settings(deadline=None, max_examples=MAX_EXAMPLES)
    def check_refinement_pairs_are_bisimilar(self, seed, eps):
        sample, abstraction = gen_refinement_pair(seed, states=3, eps=eps)
        assert validate(sample) == [] and validate(abstraction) == []
        assert aea_bisim(sample, abstraction, eps).systems_bisimilar

    def check_refinement_observations_are_atoms(self):
        sample, abstraction = gen_refinement_pair(4, states=3, eps="0.5")
        names = sorted(set(sample.obsmap.values()) | set(abstraction.obsmap.values()))
        assert names == sorted(sample.obs.observations)
        for name in names:
            assert parse_formula("true U " + name, LTL) == LtlUntil(LtlTrue(), LtlAtom(name))
        coordinates = [sample.obs.points[name][0] for name in sorted(names, key=lambda n: int(n[1:]))]
        assert coordinates == sorted(coordinates)
        assert parse_system(format_system(sample)) == sample
        assert parse_system(format_system(abstraction)) == abstraction

    def check_bad_shapes(self):
        with pytest.raises(InputError):
            gen_fixture(0, states=0)
        with pytest.raises(InputError):
            gen_fixture(0, "dts")
        with pytest.raises(InputError):
            gen_fixture(0, ATS, agents=0)
