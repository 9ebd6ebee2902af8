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

from altbisim.logic.formula import Atom, Diamond, Not, And, Coalition, Lift, PathNot, PathAnd, Next, Until, \
    StateFormula


def rank_s(formula):
    """Rank of a state formula: atoms count 1, every connective adds one."""
    if isinstance(formula, (Atom, Diamond)):
        return 1
    if isinstance(formula, Not):
        return rank_s(formula.sub) + 1
    if isinstance(formula, And):
        return max(rank_s(formula.left), rank_s(formula.right)) + 1
    if isinstance(formula, Coalition):
        return rank_p(formula.path) + 1
    raise TypeError("not a state formula: %r" % (formula,))


def rank_p(formula):
    """Rank of a path formula; a state formula used as a path formula gains one."""
    if isinstance(formula, Lift):
        return rank_s(formula.state) + 1
    if isinstance(formula, StateFormula):
        return rank_s(formula) + 1
    if isinstance(formula, (PathNot, Next)):
        return rank_p(formula.sub) + 1
    if isinstance(formula, (PathAnd, Until)):
        return max(rank_p(formula.left), rank_p(formula.right)) + 1
    raise TypeError("not a path formula: %r" % (formula,))
