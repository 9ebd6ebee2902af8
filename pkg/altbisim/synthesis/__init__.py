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

from altbisim.synthesis.residual import Residual, Progression, TRUE_RESIDUAL, FALSE_RESIDUAL, progress, \
    progress_residual  # NOQA
from altbisim.synthesis.synthesize import SynthResult, synthesize  # NOQA
from altbisim.synthesis.verify import verify_under_strategy  # NOQA
from altbisim.synthesis.harness import TransferCell, TransferReport, transfer_harness  # NOQA
