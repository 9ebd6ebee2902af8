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

from altbisim import __version__ as __altbisim_version__
from altbisim.errors import InputError

from decimal import Decimal, InvalidOperation
import importlib

# Absolute tolerance for every comparison against a metric value.
TOLERANCE = Decimal("1e-9")


def package_is_installed(package_name):
    """Return true iff package can be successfully imported."""
    try:
        importlib.import_module(package_name)
        return True
    except Exception:
        return False


def altbisim_version():
    """Return string representation of current altbisim version."""
    return __altbisim_version__


def to_decimal(value, what="number"):
    """Exact decimal from a literal; floats go through their shortest repr so 0.1 stays 0.1."""
    if isinstance(value, Decimal):
        result = value
    else:
        try:
            result = Decimal(str(value).strip())
        except (InvalidOperation, ValueError):
            raise InputError("%s is not a valid %s" % (value, what))
    if not result.is_finite():
        raise InputError("%s must be finite, got %s" % (what, value))
    return result


def to_epsilon(value):
    eps = to_decimal(value, "epsilon")
    if eps < 0:
        raise InputError("epsilon must be nonnegative, got %s" % value)
    return eps


def within(distance, eps):
    return distance <= eps + TOLERANCE


def format_decimal(value):
    """Plain (non-scientific) rendering used by the printers and JSON output."""
    text = format(value, "f")
    if "." in text:
        text = text.rstrip("0")
        if text.endswith("."):
            text += "0"
    return text
