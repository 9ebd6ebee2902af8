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
from altbisim.logic.formula import Coalition, Lift, PathNot, PathAnd, Next, Until, subformulas
from altbisim.logic.positive import PositiveLtl, as_path_formula
from altbisim.logic.state_checker import StateChecker
from altbisim.model.agent_ats import AgentAts
from altbisim.model.lasso import lasso_check


def eval_lasso(system, obs, lasso, formula, eps=None):
    """Exact truth of a path or positive LTL formula on the trace prefix . cycle^omega.

    Each subformula gets one truth value per folded position; Until is the least fixpoint of
    u(i) = right(i) or (left(i) and u(next(i))) over the folded lasso.
    """
    if not lasso_check(system, lasso):
        raise InputError("%r is not a lasso of %s" % (lasso, system.name))
    if isinstance(formula, PositiveLtl):
        formula = as_path_formula(formula)
    if not isinstance(system, AgentAts) and any(isinstance(f, Coalition) for f in subformulas(formula)):
        raise InputError("coalition formulas need an agent-based system")

    checker = StateChecker(system, obs, eps)
    n = len(lasso)
    nexts = [lasso.next_position(i) for i in range(n)]
    memo = {}

    def values(path):
        if path in memo:
            return memo[path]
        if isinstance(path, Lift):
            satisfying = checker.sat(path.state)
            result = [lasso.state_at(i) in satisfying for i in range(n)]
        elif isinstance(path, PathNot):
            result = [not v for v in values(path.sub)]
        elif isinstance(path, PathAnd):
            result = [a and b for a, b in zip(values(path.left), values(path.right))]
        elif isinstance(path, Next):
            sub = values(path.sub)
            result = [sub[nexts[i]] for i in range(n)]
        elif isinstance(path, Until):
            left, right = values(path.left), values(path.right)
            result = [False] * n
            changed = True
            while changed:
                changed = False
                for i in range(n - 1, -1, -1):
                    v = right[i] or (left[i] and result[nexts[i]])
                    if v != result[i]:
                        result[i] = v
                        changed = True
        else:
            raise TypeError("not a path formula: %r" % (path,))
        memo[path] = result
        return result

    return values(formula)[0]
