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

from altbisim.dsl import parse_formula, PATH, LTL
from altbisim.errors import InputError
from altbisim.logic.formula import Atom, Diamond, Not, Coalition, Lift, Next
from altbisim.logic.transform import tr_epsilon
from altbisim.relations import derive_h, derive_e, h_partner, e_partner, decide_H, decide_E, check_transfer, \
    check_transfer_pair
from altbisim.status import NOT_IN_DOMAIN, CONSISTENT, VIOLATION
from tests.altbisim_mock import example1, matrix_game

from decimal import Decimal

import pytest

ONE = Decimal(1)


class CheckPartners(object):

    def check_atom_pairs_with_its_diamond(self):
        assert h_partner(Atom("p"), {1}, 1) == Diamond(ONE, "p")
        assert e_partner(Lift(Atom("p")), {1}, 1) == Lift(Diamond(ONE, "p"))
        assert e_partner(Next(Lift(Atom("p"))), {1}, 1) == Next(Lift(Diamond(ONE, "p")))

    def check_negation_swaps_sides(self):
        assert h_partner(Not(Diamond(ONE, "p")), {1}, 1) == Not(Atom("p"))
        assert h_partner(Not(Atom("p")), {1}, 1) is NOT_IN_DOMAIN
        assert h_partner(Not(Diamond(Decimal(2), "p")), {1}, 1) is NOT_IN_DOMAIN

    def check_until_is_componentwise(self):
        psi = parse_formula("p U (q & X r)", PATH)
        partner = e_partner(psi, {1}, "0.5")
        assert partner == parse_formula("<0.5> p U (<0.5> q & X <0.5> r)", PATH)

    def check_coalitions(self):
        phi = parse_formula("<<1>> X !<1> p")
        assert h_partner(phi, {1}, 1) == Coalition({1}, Next(Lift(Not(Atom("p")))))
        with pytest.raises(InputError):
            h_partner(phi, {1, 2}, 1)

    def check_partner_is_unique(self):
        phi = parse_formula("<<1>> (p U !<1> q)")
        gamma = h_partner(phi, {1}, 1)
        assert decide_H(phi, gamma, {1}, 1)
        assert not decide_H(phi, phi, {1}, 1)
        assert not decide_H(phi, gamma, {1, 2}, 1)

    def check_derivation_replays(self):
        derived = derive_h(parse_formula("!<<1>> X !p & q"), {1}, 1)
        assert derived.kind == "H"
        assert derived.replay()
        left_rank, right_rank = derived.ranks()
        assert left_rank == right_rank
        assert [step.rule for step in derived.derivation][-1] == 3

    def check_tampered_derivation_fails_replay(self):
        derived = derive_h(parse_formula("<<1>> X p"), {1}, 1)
        derived.derivation = derived.derivation[1:]
        assert not derived.replay()

    def check_out_of_domain(self):
        assert derive_h(parse_formula("!p"), {1}, 1) is NOT_IN_DOMAIN
        assert derive_e(parse_formula("!(p U q)", PATH), {1}, 1) is NOT_IN_DOMAIN

    def check_loosened_specifications_are_partners(self):
        for text in ["p", "X p", "p U q", "(p | X q) & r", "p U (q U X r)"]:
            phi = parse_formula(text, LTL)
            loosened = tr_epsilon(phi, "0.5")
            assert decide_E(phi, loosened, set(), "0.5")
            derived = derive_e(phi, set(), "0.5")
            assert derived.kind == "E"
            assert derived.ranks()[0] == derived.ranks()[1]

    def check_to_json(self):
        data = derive_h(Atom("p"), {1}, 1).to_json()
        assert data["left"] == "p"
        assert data["right"] == "<1> p"
        assert data["rank"] == [1, 1]
        assert data["derivation"][0].to_json()["rule"] == 1


class CheckTransfer(object):

    def check_example1_atoms(self):
        system = example1()
        assert check_transfer(system, system.obs, "q1", Atom("p1"), {1}, 1).verdict == CONSISTENT
        assert check_transfer(system, system.obs, "q3", Atom("p3"), {1}, 1).verdict == CONSISTENT

    def check_matrix_game_coalition(self):
        system = matrix_game()
        check = check_transfer(system, system.obs, "q0", parse_formula("<<1,2>> X win"), {1, 2}, 0)
        assert check.source_holds and check.target_holds
        assert check.verdict == CONSISTENT

    def check_unrelated_states_may_violate(self):
        system = example1()
        check = check_transfer_pair(system, system, system.obs, "q1", "q3", Atom("p1"), {1}, 1)
        assert check.verdict == VIOLATION
        assert check.to_json()["verdict"] == VIOLATION

    def check_formula_without_partner(self):
        system = example1()
        with pytest.raises(InputError):
            check_transfer(system, system.obs, "q1", Not(Atom("p1")), {1}, 1)
