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


class Violation(object):
    """One failed invariant of a system or observation space.

    ``where`` names the responsible part, e.g. ``("q1", ("{q1,q2}",))`` for a state and agent selection or
    ``("q", "a", "b")`` for a labeled triple.
    """

    def __init__(self, kind, message, where=()):
        self.kind = kind
        self.message = message
        self.where = tuple(where)

    def __eq__(self, other):
        return isinstance(other, Violation) and \
            (self.kind, self.message, self.where) == (other.kind, other.message, other.where)

    def __hash__(self):
        return hash((self.kind, self.message, self.where))

    def __str__(self):
        return "%s: %s" % (self.kind, self.message)

    def __repr__(self):
        return "Violation(%r, %r)" % (self.kind, self.message)

    def to_json(self):
        return {
            "kind": self.kind,
            "message": self.message,
            "where": [str(w) for w in self.where]
        }


SINGLETON = "singleton"
EMPTY_CHOICE = "empty-choice"
MISSING_CHOICE = "missing-choice"
UNKNOWN_STATE = "unknown-state"
UNKNOWN_LABEL = "unknown-label"
BLOCKING = "non-blocking"
OBSMAP = "obsmap"
METRIC = "metric"
