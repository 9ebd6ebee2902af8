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

"""Brute-force reference implementations, independent of the main algorithms."""

from altbisim.oracle.bisim_oracle import enum_bisim, MAX_PAIRS  # NOQA
from altbisim.oracle.unroll import unroll_eval, required_length  # NOQA
from altbisim.oracle.game_tree import bounded_game  # NOQA
from altbisim.oracle.strategies import enum_strategies, MAX_STRATEGIES  # NOQA
