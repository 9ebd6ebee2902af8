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


class Verdict(object):
    def __init__(self, verdict):
        self._verdict = str(verdict).lower()

    def __eq__(self, other):
        return str(self).lower() == str(other).lower()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._verdict)

    def __str__(self):
        return self._verdict

    def __repr__(self):
        return "Verdict(%s)" % self._verdict

    def to_json(self):
        return str(self).upper()

    @staticmethod
    def of(value):
        return TRUE if value else FALSE


TRUE = Verdict("true")
FALSE = Verdict("false")
UNKNOWN = Verdict("unknown")

CONSISTENT = Verdict("consistent")
VIOLATION = Verdict("violation")

BISIMILAR = Verdict("bisimilar")
NOT_IN_DOMAIN = Verdict("not-in-domain")

REALIZABLE = Verdict("realizable")
UNREALIZABLE = Verdict("unrealizable")


def kleene_not(v):
    if v == UNKNOWN:
        return UNKNOWN
    return FALSE if v == TRUE else TRUE


def kleene_and(v, w):
    if v == FALSE or w == FALSE:
        return FALSE
    if v == TRUE and w == TRUE:
        return TRUE
    return UNKNOWN


def kleene_or(v, w):
    return kleene_not(kleene_and(kleene_not(v), kleene_not(w)))
