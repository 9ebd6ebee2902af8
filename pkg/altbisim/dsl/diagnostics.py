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

ERROR = "error"
WARNING = "warning"


class ParseDiagnostic(object):
    """A positioned message about DSL input; lines and columns are 1-based."""

    def __init__(self, source, line, column, message, severity=ERROR):
        self.source = source
        self.line = line
        self.column = column
        self.message = message
        self.severity = severity

    def __eq__(self, other):
        return isinstance(other, ParseDiagnostic) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash((self.source, self.line, self.column, self.message))

    def __str__(self):
        return "%s:%d:%d: %s: %s" % (self.source, self.line, self.column, self.severity, self.message)

    def __repr__(self):
        return "ParseDiagnostic(%s)" % self

    def to_json(self):
        return {
            "file": self.source,
            "line": self.line,
            "column": self.column,
            "message": self.message,
            "severity": self.severity
        }


def from_exception(source, exc, line_offset=0):
    """Diagnostic for a pyparsing ParseException."""
    return ParseDiagnostic(source, exc.lineno + line_offset, exc.col, exc.msg)
