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
from altbisim.model.violation import Violation, METRIC
from altbisim.utils.util import TOLERANCE, to_decimal, format_decimal

import itertools
import logging

TABLE = "table"
CHEBYSHEV = "chebyshev"

logger = logging.getLogger(__name__)


class MetricObsSpace(object):
    """Finite observation set with a metric.

    Two representations are supported: an explicit ``table`` of pairwise distances, or ``chebyshev`` where
    every observation is a numeric point and d(x, y) = max_i |x_i - y_i|. Values are held as Decimals.
    """

    def __init__(self, observations, mode, written=None, points=None, dim=None):
        self.observations = tuple(observations)
        self._obs_set = frozenset(self.observations)
        if len(self._obs_set) != len(self.observations):
            raise InputError("duplicate observation in %s" % (self.observations,))
        self.mode = mode
        self.dim = dim
        self.written = dict(written or {})
        self.points = dict(points or {})
        self._distances = {}

        if mode == TABLE:
            for (p, q), value in self.written.items():
                self._check_known(p)
                self._check_known(q)
                self._distances[(p, q)] = value
                self._distances.setdefault((q, p), value)
        elif mode == CHEBYSHEV:
            for p in self.observations:
                if p not in self.points:
                    raise InputError("observation %s has no point in chebyshev space" % p)
                if len(self.points[p]) != dim:
                    raise InputError("point of %s has length %d, expected %d" % (p, len(self.points[p]), dim))
        else:
            raise InputError("unknown metric representation %s" % mode)

    @staticmethod
    def table(observations, distances=None):
        """Build a table space; ``distances`` maps (p, q) to a number and one direction per pair is enough."""
        written = {(p, q): to_decimal(v, "distance") for (p, q), v in (distances or {}).items()}
        return MetricObsSpace(observations, TABLE, written=written)

    @staticmethod
    def chebyshev(dim, points):
        points = {p: tuple(to_decimal(x, "coordinate") for x in v) for p, v in points.items()}
        return MetricObsSpace(list(points.keys()), CHEBYSHEV, points=points, dim=dim)

    def _check_known(self, p):
        if p not in self._obs_set:
            raise InputError("unknown observation %s" % p)

    def __contains__(self, p):
        return p in self._obs_set

    def distance(self, p, q):
        self._check_known(p)
        self._check_known(q)
        if self.mode == CHEBYSHEV:
            x, y = self.points[p], self.points[q]
            return max((abs(a - b) for a, b in zip(x, y)), default=to_decimal(0))
        if p == q and (p, q) not in self._distances:
            return to_decimal(0)
        if (p, q) not in self._distances:
            raise InputError("no distance between %s and %s" % (p, q))
        return self._distances[(p, q)]

    def within(self, p, q, eps):
        return self.distance(p, q) <= eps + TOLERANCE

    def validate(self):
        """Check the metric axioms; returns a list of violations, empty iff the space is a metric."""
        violations = []
        if self.mode == TABLE:
            for (p, q), value in sorted(self.written.items()):
                if value < 0:
                    violations.append(Violation(METRIC, "negative distance d(%s,%s)=%s" % (p, q, value), (p, q)))
                if p == q and value != 0:
                    violations.append(Violation(METRIC, "nonzero self distance d(%s,%s)=%s" % (p, q, value), (p,)))
                if p < q and (q, p) in self.written and self.written[(q, p)] != value:
                    violations.append(Violation(
                        METRIC, "asymmetric distances d(%s,%s)=%s, d(%s,%s)=%s"
                        % (p, q, value, q, p, self.written[(q, p)]), (p, q)))
            for p, q in itertools.combinations(self.observations, 2):
                if (p, q) not in self._distances:
                    violations.append(Violation(METRIC, "missing distance between %s and %s" % (p, q), (p, q)))
            if violations:
                # the remaining axioms need a total table
                return violations

        for p, q in itertools.combinations(self.observations, 2):
            if self.distance(p, q) == 0:
                violations.append(Violation(METRIC, "distinct observations %s and %s at distance 0" % (p, q), (p, q)))

        for p, q, r in itertools.permutations(self.observations, 3):
            if self.distance(p, r) > self.distance(p, q) + self.distance(q, r) + TOLERANCE:
                violations.append(Violation(
                    METRIC, "triangle inequality fails: d(%s,%s) > d(%s,%s) + d(%s,%s)" % (p, r, p, q, q, r),
                    (p, q, r)))
        return violations

    def merge(self, other):
        """The space shared by two systems.

        Table spaces must agree exactly. Chebyshev spaces of equal dimension are unioned, as long as shared
        names carry the same point.
        """
        if self.mode != other.mode:
            raise InputError("observation spaces differ in representation: %s vs %s" % (self.mode, other.mode))
        if self.mode == TABLE:
            if self._obs_set != other._obs_set:
                raise InputError("table observation spaces differ: %s vs %s"
                                 % (sorted(self._obs_set), sorted(other._obs_set)))
            for p, q in itertools.combinations(self.observations, 2):
                if self.distance(p, q) != other.distance(p, q):
                    raise InputError("observation spaces disagree on d(%s,%s)" % (p, q))
            return self

        if self.dim != other.dim:
            raise InputError("chebyshev dimensions differ: %d vs %d" % (self.dim, other.dim))
        points = dict(self.points)
        for p, v in other.points.items():
            if p in points and points[p] != v:
                raise InputError("observation %s has different points in the two spaces" % p)
            points[p] = v
        observations = list(self.observations) + [p for p in other.observations if p not in self._obs_set]
        logger.debug("merged chebyshev spaces into %d observations", len(observations))
        return MetricObsSpace(observations, CHEBYSHEV, points=points, dim=self.dim)

    def __eq__(self, other):
        if not isinstance(other, MetricObsSpace):
            return False
        if (self.mode, self._obs_set, self.dim) != (other.mode, other._obs_set, other.dim):
            return False
        if self.mode == CHEBYSHEV:
            return self.points == other.points
        return self._distances == other._distances

    def __hash__(self):
        return hash((self.mode, self._obs_set, self.dim))

    def to_json(self):
        data = {"mode": self.mode, "observations": list(self.observations)}
        if self.mode == CHEBYSHEV:
            data["dim"] = self.dim
            data["points"] = {p: [format_decimal(x) for x in v] for p, v in self.points.items()}
        else:
            data["table"] = ["%s %s = %s" % (p, q, format_decimal(v)) for (p, q), v in sorted(self.written.items())]
        return data
