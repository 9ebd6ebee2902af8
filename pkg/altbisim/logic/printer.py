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
    as_disjunction, as_release, is_truth
from altbisim.logic.positive import LtlTrue, LtlAtom, LtlDiamond, LtlOr, LtlAnd, LtlNext, LtlUntil
from altbisim.utils.util import format_decimal


def format_agents(agents):
    return ",".join(str(i) for i in sorted(agents))


def _open_coalition(formula):
    """True iff the printed formula ends in a coalition, whose body would swallow a following U or R."""
    if isinstance(formula, Coalition):
        return True
    if isinstance(formula, Lift):
        return _open_coalition(formula.state)
    if isinstance(formula, (Not, PathNot, Next)) and as_disjunction(formula) is None and \
            as_release(formula) is None:
        return _open_coalition(formula.sub)
    return False


def _operand(formula):
    text = format_formula(formula)
    return "(%s)" % text if _open_coalition(formula) else text


def format_formula(formula):
    """Render any formula in the formula DSL. Binary operators are always parenthesized."""
    f = formula
    if isinstance(f, (Atom, LtlAtom)):
        return f.name
    if isinstance(f, (Diamond, LtlDiamond)):
        return "<%s> %s" % (format_decimal(f.eps), f.name)
    if isinstance(f, LtlTrue) or is_truth(f):
        return "true"
    if isinstance(f, Lift):
        return format_formula(f.state)

    released = as_release(f)
    if released is not None:
        return "(%s R %s)" % (_operand(released[0]), format_formula(released[1]))
    disjuncts = as_disjunction(f)
    if disjuncts is not None:
        return "(%s | %s)" % (format_formula(disjuncts[0]), format_formula(disjuncts[1]))

    if isinstance(f, (Not, PathNot)):
        return "!%s" % format_formula(f.sub)
    if isinstance(f, (And, PathAnd, LtlAnd)):
        return "(%s & %s)" % (format_formula(f.left), format_formula(f.right))
    if isinstance(f, LtlOr):
        return "(%s | %s)" % (format_formula(f.left), format_formula(f.right))
    if isinstance(f, (Next, LtlNext)):
        return "X %s" % format_formula(f.sub)
    if isinstance(f, (Until, LtlUntil)):
        return "(%s U %s)" % (_operand(f.left), format_formula(f.right))
    if isinstance(f, Coalition):
        return "<<%s>> %s" % (format_agents(f.agents), format_formula(f.path))
    raise TypeError("not a formula: %r" % (formula,))
