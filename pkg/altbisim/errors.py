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


class AltbisimError(RuntimeError):
    pass


class InputError(AltbisimError):
    """Malformed, inconsistent or mismatched input."""
    pass


class ParseError(InputError):
    """Raised by the DSL parsers; carries at least one positioned diagnostic."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        assert len(self.diagnostics) > 0, "ParseError requires at least one diagnostic"
        super(ParseError, self).__init__("\n".join(str(d) for d in self.diagnostics))


class StrategyError(AltbisimError):
    pass


class UnsupportedExactError(AltbisimError):
    """The formula lies outside the fragment the exact checker decides."""
    pass


class OracleCapError(AltbisimError):
    pass


class InternalError(AltbisimError):
    """A computed result failed its own consistency check."""
    pass
