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
from altbisim.utils.util import to_decimal, to_epsilon, within, format_decimal, altbisim_version, \
    package_is_installed

from decimal import Decimal

import pytest
import re


class CheckUtils(object):

    def check_to_decimal(self):
        assert to_decimal("0.1") == Decimal("0.1")
        assert to_decimal(0.1) == Decimal("0.1")
        assert to_decimal(2) == Decimal(2)
        with pytest.raises(InputError):
            to_decimal("one")
        with pytest.raises(InputError):
            to_decimal("inf")

    def check_to_epsilon(self):
        assert to_epsilon("0") == Decimal(0)
        with pytest.raises(InputError, match="nonnegative"):
            to_epsilon("-0.5")

    def check_within_tolerance(self):
        assert within(Decimal("1.0000000001"), Decimal(1))
        assert not within(Decimal("1.01"), Decimal(1))
        assert within(Decimal(0), Decimal(0))

    def check_format_decimal(self):
        assert format_decimal(Decimal(1)) == "1"
        assert format_decimal(Decimal("0.250")) == "0.25"
        assert format_decimal(Decimal("2.0")) == "2.0"
        assert format_decimal(Decimal("1E+1")) == "10"

    def check_version(self):
        assert re.match(r"\d+\.\d+\.\d+", altbisim_version())

    def check_package_is_installed(self):
        assert package_is_installed("yaml")
        assert not package_is_installed("no_such_package_for_altbisim")
