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
from altbisim.logic.state_checker import StateChecker
from altbisim.model.validate import require_valid
from altbisim.relations.partner import h_partner
from altbisim.status import CONSISTENT, VIOLATION, NOT_IN_DOMAIN
from altbisim.utils.util import to_epsilon

import logging

logger = logging.getLogger(__name__)


class TransferCheck(object):
    """Truth of a formula at one state and of its partner at another (possibly the same) state."""

    def __init__(self, formula, partner, source, target, source_holds, target_holds):
        self.formula = formula
        self.partner = partner
        self.source = source
        self.target = target
        self.source_holds = source_holds
        self.target_holds = target_holds

    @property
    def verdict(self):
        return VIOLATION if self.source_holds and not self.target_holds else CONSISTENT

    def to_json(self):
        return {
            "formula": str(self.formula),
            "partner": str(self.partner),
            "source": self.source,
            "target": self.target,
            "source_holds": self.source_holds,
            "target_holds": self.target_holds,
            "verdict": self.verdict
        }


def _partner(formula, agents, eps):
    partner = h_partner(formula, agents, eps)
    if partner is NOT_IN_DOMAIN:
        raise InputError("%s has no partner for epsilon %s" % (formula, eps))
    return partner


def check_transfer(system, obs, q, formula, agents, eps):
    """A state satisfying a formula also satisfies its partner."""
    return check_transfer_pair(system, system, obs, q, q, formula, agents, eps)


def check_transfer_pair(first, second, obs, q1, q2, formula, agents, eps):
    """Truth of ``formula`` at q1 in ``first`` against its partner at q2 in ``second``.

    For related states the partner must hold whenever the formula does; any other outcome is a VIOLATION.
    """
    require_valid(first, second)
    eps = to_epsilon(eps)
    first.check_state(q1)
    second.check_state(q2)
    partner = _partner(formula, agents, eps)
    source_holds = StateChecker(first, obs, eps).holds(q1, formula)
    target_holds = StateChecker(second, obs, eps).holds(q2, partner)
    check = TransferCheck(formula, partner, q1, q2, source_holds, target_holds)
    if check.verdict == VIOLATION:
        logger.warning("transfer violated from %s to %s for %s", q1, q2, formula)
    return check
