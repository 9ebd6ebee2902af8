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

"""Path evaluation by literal unrolling of a lasso into a finite word."""

from altbisim.errors import InputError, OracleCapError
from altbisim.logic.formula import Atom, Diamond, Not, And, Lift, PathNot, PathAnd, Next, Until, subformulas
from altbisim.logic.positive import PositiveLtl, LtlTrue, LtlAtom, LtlDiamond, LtlOr, LtlAnd, LtlNext, LtlUntil, \
    ltl_subformulas
from altbisim.model.lasso import lasso_check
from altbisim.utils.util import within


def required_length(lasso, formula):
    if isinstance(formula, PositiveLtl):
        count = len(ltl_subformulas(formula))
    else:
        count = len(subformulas(formula))
    return len(lasso.prefix) + len(lasso.cycle) * (1 + count)


def unroll_eval(system, obs, lasso, formula, n):
    """Truth of a coalition-free path formula (or positive formula) on the lasso, from its first n states."""
    if not lasso_check(system, lasso):
        raise InputError("%r is not a lasso of %s" % (lasso, system.name))
    needed = required_length(lasso, formula)
    if n < needed:
        raise InputError("unrolling length %d is too small, need at least %d" % (n, needed))

    word = [lasso.prefix[i] if i < len(lasso.prefix) else
            lasso.cycle[(i - len(lasso.prefix)) % len(lasso.cycle)] for i in range(n)]
    p, c = len(lasso.prefix), len(lasso.cycle)

    def window(i):
        # right operands recur every c steps once inside the cycle
        return range(i, max(p + c, i + c))

    def label(i):
        if i >= n:
            raise OracleCapError("evaluation ran past the unrolled word at position %d" % i)
        return system.obsmap[word[i]]

    def close(name, i, eps):
        return within(obs.distance(name, label(i)), eps)

    def state(f, i):
        if isinstance(f, Atom):
            return label(i) == f.name
        if isinstance(f, Diamond):
            return close(f.name, i, f.eps)
        if isinstance(f, Not):
            return not state(f.sub, i)
        if isinstance(f, And):
            return state(f.left, i) and state(f.right, i)
        raise InputError("unrolling does not evaluate %s" % (f,))

    def path(f, i):
        if isinstance(f, Lift):
            return state(f.state, i)
        if isinstance(f, PathNot):
            return not path(f.sub, i)
        if isinstance(f, PathAnd):
            return path(f.left, i) and path(f.right, i)
        if isinstance(f, Next):
            return path(f.sub, i + 1)
        if isinstance(f, Until):
            for j in window(i):
                if path(f.right, j):
                    return True
                if not path(f.left, j):
                    return False
            return False
        return positive(f, i)

    def positive(f, i):
        if isinstance(f, LtlTrue):
            return True
        if isinstance(f, LtlAtom):
            return label(i) == f.name
        if isinstance(f, LtlDiamond):
            return close(f.name, i, f.eps)
        if isinstance(f, LtlOr):
            return positive(f.left, i) or positive(f.right, i)
        if isinstance(f, LtlAnd):
            return positive(f.left, i) and positive(f.right, i)
        if isinstance(f, LtlNext):
            return positive(f.sub, i + 1)
        if isinstance(f, LtlUntil):
            for j in window(i):
                if positive(f.right, j):
                    return True
                if not positive(f.left, j):
                    return False
            return False
        raise InputError("unrolling does not evaluate %s" % (f,))

    return path(formula, 0)
