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

# Memory state of every memoryless strategy.
ONE = 0


class _TableStrategy(object):
    """Finite-memory strategy table.

    At position i the strategy holds memory m_i and plays ``table[(m_i, s_i)]``; on observing the successor
    s_{i+1} it moves to ``update[(m_i, s_{i+1})]``, staying put when no update is listed.
    """

    def __init__(self, table, update=None, initial_memory=ONE):
        self.table = {key: frozenset(value) for key, value in table.items()}
        self.update = dict(update or {})
        self.initial_memory = initial_memory

    def choose(self, memory, state):
        try:
            return self.table[(memory, state)]
        except KeyError:
            raise StrategyError("strategy is undefined at memory %s, state %s" % (memory, state))

    def next_memory(self, memory, successor):
        return self.update.get((memory, successor), memory)

    @property
    def memory_states(self):
        return frozenset(m for (m, _) in self.table)

    def is_memoryless(self):
        return self.memory_states <= {self.initial_memory} and not self.update


class AgStrategy(_TableStrategy):
    """Strategy of a coalition in an AgentAts; each entry must lie in hbar(state, agents)."""

    def __init__(self, agents, table, update=None, initial_memory=ONE):
        super(AgStrategy, self).__init__(table, update, initial_memory)
        self.agents = frozenset(agents)

    @staticmethod
    def memoryless(agents, choices):
        return AgStrategy(agents, {(ONE, q): s for q, s in choices.items()})

    def violations(self, system):
        """Entries failing the membership test value(s) in hbar(s[end], agents)."""
        bad = []
        for (memory, state), chosen in sorted(self.table.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))):
            if state not in system.index or chosen not in system.hbar(state, self.agents):
                bad.append((memory, state))
        return bad

    def check(self, system):
        bad = self.violations(system)
        if bad:
            memory, state = bad[0]
            raise StrategyError("strategy choice %s at memory %s, state %s is not in hbar(%s, %s)"
                                % (system.format_set(self.table[bad[0]]), memory, state, state,
                                   sorted(self.agents)))

    def to_json(self):
        return {
            "agents": sorted(self.agents),
            "initial_memory": str(self.initial_memory),
            "table": [{"memory": str(m), "state": q, "choice": sorted(s)}
                      for (m, q), s in sorted(self.table.items(), key=lambda kv: (str(kv[0][0]), kv[0][1]))]
        }


class CtrlStrategy(_TableStrategy):
    """Control strategy of a LabelAts: every emitted action set is nonempty."""

    def __init__(self, table, update=None, initial_memory=ONE):
        super(CtrlStrategy, self).__init__(table, update, initial_memory)
        for key, actions in self.table.items():
            if not actions:
                raise InputError("control strategy emits the empty set at %s" % (key,))

    @staticmethod
    def memoryless(actions):
        return CtrlStrategy({(ONE, q): a for q, a in actions.items()})

    def to_json(self):
        return {
            "initial_memory": str(self.initial_memory),
            "table": [{"memory": str(m), "state": q, "actions": sorted(a)}
                      for (m, q), a in sorted(self.table.items(), key=lambda kv: (str(kv[0][0]), kv[0][1]))]
        }
