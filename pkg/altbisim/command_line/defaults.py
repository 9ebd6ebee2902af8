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

import os


class ConsoleDefaults(object):
    # Directory for project-specific altbisim configs
    ALTBISIM_DIR = ".altbisim"

    # Default path, relative to current project directory, to the project's config file
    PROJECT_CONFIG_FILE = os.path.join(ALTBISIM_DIR, "config")

    # Default path to the user-specific config file
    USER_CONFIG_FILE = os.path.join('~', ALTBISIM_DIR, 'config')

    # Overrides the seed of the fixture generator
    SEED_ENV_VAR = "ALTBISIM_SEED"

    LOG_FORMATTER = '[%(levelname)s:%(asctime)s - %(module)s]: %(message)s'

    # Exit codes
    EXIT_OK = 0
    EXIT_VIOLATION = 1
    EXIT_INPUT_ERROR = 2
    EXIT_INTERNAL_ERROR = 3
