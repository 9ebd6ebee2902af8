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
from altbisim.logic.positive import LtlTrue, LtlAtom, LtlDiamond, LtlOr, LtlAnd, LtlNext, LtlUntil
from altbisim.utils.util import to_epsilon


def tr_epsilon(formula, eps):
    """Loosen every atom p of a diamond-free positive formula to <eps> p."""
    eps = to_epsilon(eps)

    def tr(f):
        if isinstance(f, LtlTrue):
            return f
        if isinstance(f, LtlAtom):
            return LtlDiamond(eps, f.name)
        if isinstance(f, LtlDiamond):
            raise InputError("tr_epsilon expects a formula without <eps> atoms, found %s" % f)
        if isinstance(f, LtlOr):
            return LtlOr(tr(f.left), tr(f.right))
        if isinstance(f, LtlAnd):
            return LtlAnd(tr(f.left), tr(f.right))
        if isinstance(f, LtlNext):
            return LtlNext(tr(f.sub))
        if isinstance(f, LtlUntil):
            return LtlUntil(tr(f.left), tr(f.right))
        raise InputError("tr_epsilon expects a negation-free LTL formula, got %s" % (f,))

    return tr(formula)
