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

from altbisim.errors import StrategyError
from altbisim.model.validate import require_valid
from altbisim.synthesis.residual import Progression, require_positive

import logging

logger = logging.getLogger(__name__)


def _product(system, progression, q0, strategy, formula):
    """Reachable (state, memory, residual) nodes and their successors; fulfilled nodes are not expanded."""
    initial = (q0, strategy.initial_memory, progression.formula(formula, q0))
    edges = {}
    frontier = [initial]
    while frontier:
        node = frontier.pop()
        if node in edges:
            continue
        q, memory, residual = node
        if residual.is_true or residual.is_false:
            edges[node] = ()
            continue
        actions = strategy.choose(memory, q)
        if not actions:
            raise StrategyError("strategy emits the empty set at memory %s, state %s" % (memory, q))
        unknown = set(actions) - set(system.controls)
        if unknown:
            raise StrategyError("strategy emits unknown controls %s at state %s" % (sorted(unknown), q))
        successors = []
        for a in sorted(actions):
            for b in system.disturbances:
                for succ in system.post(q, a, b):
                    successors.append((succ, strategy.next_memory(memory, succ), progression.residual(residual, succ)))
        edges[node] = tuple(successors)
        frontier.extend(s for s in successors if s not in edges)
    return initial, edges


def verify_under_strategy(system, q0, strategy, formula, obs=None):
    """True iff every outcome of ``strategy`` from q0 satisfies the negation-free ``formula``.

    Negation-free formulas are fulfilled by a finite prefix, so an outcome fails exactly when it reaches a dead
    residual or loops forever among unfulfilled nodes.
    """
    require_positive(formula)
    require_valid(system)
    system.check_state(q0)
    progression = Progression(system, obs)
    initial, edges = _product(system, progression, q0, strategy, formula)

    if any(node[2].is_false for node in edges):
        logger.debug("strategy from %s reaches an unsatisfiable residual", q0)
        return False

    # an unfulfilled node on a cycle lets the environment postpone fulfilment forever
    pending = {node for node in edges if not node[2].is_true}
    indegree = {node: 0 for node in pending}
    for node in pending:
        for succ in edges[node]:
            if succ in pending:
                indegree[succ] += 1
    ready = [node for node in pending if indegree[node] == 0]
    removed = 0
    while ready:
        node = ready.pop()
        removed += 1
        for succ in edges[node]:
            if succ in pending:
                indegree[succ] -= 1
                if indegree[succ] == 0:
                    ready.append(succ)
    if removed < len(pending):
        logger.debug("strategy from %s admits an outcome that never fulfils %s", q0, formula)
        return False
    return True
