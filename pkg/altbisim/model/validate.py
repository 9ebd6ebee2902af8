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

import logging

logger = logging.getLogger(__name__)


def validate(system):
    """All invariant violations of an AgentAts or LabelAts; violations are data, never raised."""
    violations = system.validate()
    logger.debug("validated %s: %d violation(s)", system, len(violations))
    return violations


def require_valid(*systems):
    for system in systems:
        violations = system.validate()
        if violations:
            raise InputError("system %s is invalid: %s" % (system.name, "; ".join(str(v) for v in violations)))


def shared_obs(first, second):
    """The observation space two systems are compared in."""
    return first.obs.merge(second.obs)
