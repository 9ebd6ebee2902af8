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

import itertools


class Lasso(object):
    """The ultimately periodic trace prefix . cycle^omega."""

    def __init__(self, prefix, cycle):
        self.prefix = tuple(prefix)
        self.cycle = tuple(cycle)
        if not self.cycle:
            raise InputError("lasso cycle must be nonempty")

    def __len__(self):
        return len(self.prefix) + len(self.cycle)

    def state_at(self, i):
        """State at folded position i, 0-based."""
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def next_position(self, i):
        """Successor of a folded position; the last position wraps to the start of the cycle."""
        return i + 1 if i + 1 < len(self) else len(self.prefix)

    def unroll(self, n):
        return tuple(self.state_at(i) for i in range(n))

    def tail(self):
        """The suffix starting at the second state."""
        if self.prefix:
            return Lasso(self.prefix[1:], self.cycle)
        return Lasso((), self.cycle[1:] + self.cycle[:1])

    def steps(self):
        """Every consecutive pair, including prefix to cycle and the cycle wrap."""
        states = self.prefix + self.cycle
        pairs = list(zip(states, states[1:]))
        pairs.append((self.cycle[-1], self.cycle[0]))
        return pairs

    def __eq__(self, other):
        return isinstance(other, Lasso) and (self.prefix, self.cycle) == (other.prefix, other.cycle)

    def __hash__(self):
        return hash((self.prefix, self.cycle))

    def __repr__(self):
        return "Lasso(%s, %s)" % (list(self.prefix), list(self.cycle))

    def to_json(self):
        return {"prefix": list(self.prefix), "cycle": list(self.cycle)}


def lasso_check(system, lasso):
    """True iff every step of the lasso is a transition of ``system``."""
    for s in lasso.prefix + lasso.cycle:
        if s not in system.index:
            return False
    return all(t in system.successors(s) for s, t in lasso.steps())


def enumerate_lassos(system, max_prefix, max_cycle, start=None):
    """Every valid lasso of the system with bounded prefix and cycle lengths, in a stable order."""
    starts = [start] if start is not None else list(system.states)
    for plen in range(0, max_prefix + 1):
        for clen in range(1, max_cycle + 1):
            for states in itertools.product(system.states, repeat=plen + clen):
                if states[0] not in starts:
                    continue
                lasso = Lasso(states[:plen], states[plen:])
                if lasso_check(system, lasso):
                    yield lasso
