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

from altbisim.model.metric import MetricObsSpace, TABLE, CHEBYSHEV  # NOQA
from altbisim.model.violation import Violation  # NOQA
from altbisim.model.agent_ats import AgentAts, hbar_set  # NOQA
from altbisim.model.label_ats import LabelAts  # NOQA
from altbisim.model.strategy import AgStrategy, CtrlStrategy  # NOQA
from altbisim.model.outcomes import outcomes_n, ctrl_outcomes_n  # NOQA
from altbisim.model.lasso import Lasso, lasso_check, enumerate_lassos  # NOQA
from altbisim.model.validate import validate, require_valid, shared_obs  # NOQA
