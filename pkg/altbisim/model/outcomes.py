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

from altbisim.errors import InputError, StrategyError

import logging

logger = logging.getLogger(__name__)


def _check_length(n):
    if n < 1:
        raise InputError("outcome length must be positive, got %s" % n)


def outcomes_n(system, q, strategy, agents, n):
    """All length-n outcomes from ``q`` when ``agents`` follow ``strategy``.

    Computed level by level: a history extends by every state the opponents can force inside the
    coalition's current choice.
    """
    _check_length(n)
    system.check_state(q)
    if frozenset(agents) != strategy.agents:
        raise InputError("strategy is for agents %s, not %s" % (sorted(strategy.agents), sorted(agents)))
    opponents = system.complement(agents)

    level = {((q,), strategy.initial_memory)}
    for _ in range(n - 1):
        extended = set()
        for history, memory in level:
            last = history[-1]
            chosen = strategy.choose(memory, last)
            if chosen not in system.hbar(last, agents):
                raise StrategyError("strategy choice %s at %s is not available to agents %s"
                                    % (system.format_set(chosen), last, sorted(agents)))
            for countered in system.hbar(last, opponents):
                successor = system.meet(last, chosen, countered)
                extended.add((history + (successor,), strategy.next_memory(memory, successor)))
        level = extended
    result = frozenset(history for history, _ in level)
    logger.debug("outcomes_n from %s, n=%d: %d outcome(s)", q, n, len(result))
    return result


def ctrl_outcomes_n(system, q, strategy, n):
    """All length-n outcomes of a control strategy: any offered action, any disturbance, any successor."""
    _check_length(n)
    system.check_state(q)

    level = {((q,), strategy.initial_memory)}
    for _ in range(n - 1):
        extended = set()
        for history, memory in level:
            last = history[-1]
            for a in sorted(strategy.choose(memory, last)):
                if a not in system.controls:
                    raise StrategyError("strategy plays unknown control %s at %s" % (a, last))
                for b in system.disturbances:
                    for successor in system.post(last, a, b):
                        extended.add((history + (successor,), strategy.next_memory(memory, successor)))
        level = extended
    return frozenset(history for history, _ in level)
