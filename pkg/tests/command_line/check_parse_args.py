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

from altbisim.command_line.parse_args import parse_args, command_path
from tests.altbisim_mock import Capturing

import os
import re
import shutil
import tempfile


class CheckParseArgs(object):

    def check_empty_args(self):
        """Check that parsing an empty args list results in printing a usage message, followed by sys.exit(0) """
        try:
            with Capturing() as captured:
                parse_args([])
        except SystemExit as e:
            assert e.code == 0
            assert captured.output.find("usage") >= 0

    def check_version(self):
        """If --version is present, altbisim should print version and exit"""
        try:
            with Capturing() as captured:
                parse_args(["--version"])
        except SystemExit as e:
            assert e.code == 0
            assert re.search(r"[\d]+\.[\d]+\.[\d]+", captured.output) is not None

    def check_missing_oracle_command(self):
        try:
            with Capturing():
                parse_args(["oracle"])
        except SystemExit as e:
            assert e.code == 2

    def check_defaults(self):
        parsed = parse_args(["bisim", "--sys1", "a.ats", "--sys2", "b.ats"])
        assert parsed["command"] == "bisim"
        assert parsed["eps"] == "0"
        assert parsed["agents"] is None
        assert parsed["json"] is False
        assert parsed["require_bisimilar"] is False

    def check_nargs_options(self):
        parsed = parse_args(["distinguish", "--sys1", "a.ats", "--sys2", "b.ats", "--pair", "q1", "q3"])
        assert parsed["pair"] == ["q1", "q3"]

    def check_oracle_command_path(self):
        parsed = parse_args(["oracle", "game", "--sys", "m.ats", "--state", "q0", "--formula", "p", "--bounded", "3"])
        assert command_path(parsed) == ["oracle", "game"]
        assert parsed["bounded"] == 3

    def check_config_overrides(self, monkeypatch):
        """Check that parsed arguments pick up values from config files, and that overrides match precedence."""

        tmpdir = tempfile.mkdtemp(dir="/tmp")
        project_cfg_filename = os.path.join(tmpdir, "altbisim-project.cfg")
        user_cfg_filename = os.path.join(tmpdir, "altbisim-user.cfg")

        project_cfg = [
            "--eps 2",
            "--agents 1",
            "--debug"
        ]

        # user_cfg options should override project_cfg
        user_cfg = [
            "# shared by every command",
            "--eps 1",
            "--agents 1,2"
        ]

        try:
            monkeypatch.setattr("altbisim.command_line.defaults.ConsoleDefaults.PROJECT_CONFIG_FILE",
                                project_cfg_filename)
            monkeypatch.setattr("altbisim.command_line.defaults.ConsoleDefaults.USER_CONFIG_FILE", user_cfg_filename)

            with open(project_cfg_filename, "w") as project_f:
                project_f.write("\n".join(project_cfg))

            with open(user_cfg_filename, "w") as user_f:
                user_f.write("\n".join(user_cfg))

            # command-line options should override user_cfg and project_cfg
            args_dict = parse_args(["bisim", "--sys1", "a.ats", "--sys2", "b.ats", "--agents", "2"])

            assert args_dict["debug"] is True
            assert args_dict["eps"] == "1"
            assert args_dict["agents"] == "2"

        finally:
            shutil.rmtree(tmpdir)

    def check_config_ignores_foreign_options(self, monkeypatch):
        """A config line for another command leaves this command's defaults alone."""
        tmpdir = tempfile.mkdtemp(dir="/tmp")
        project_cfg_filename = os.path.join(tmpdir, "altbisim-project.cfg")

        try:
            monkeypatch.setattr("altbisim.command_line.defaults.ConsoleDefaults.PROJECT_CONFIG_FILE",
                                project_cfg_filename)
            monkeypatch.setattr("altbisim.command_line.defaults.ConsoleDefaults.USER_CONFIG_FILE",
                                os.path.join(tmpdir, "missing.cfg"))
            with open(project_cfg_filename, "w") as project_f:
                project_f.write("--max-parallel 4\n--eps 0.5\n")

            args_dict = parse_args(["tr", "--formula", "p"])
            assert args_dict["eps"] == "0.5"
            assert "max_parallel" not in args_dict

            args_dict = parse_args(["transfer", "--sample", "s", "--abs", "a", "--spec", "p"])
            assert args_dict["max_parallel"] == 4
        finally:
            shutil.rmtree(tmpdir)

    def check_config_file_option(self):
        """Check that config file option works"""
        tmpdir = tempfile.mkdtemp(dir="/tmp")
        user_cfg_filename = os.path.join(tmpdir, "altbisim-user.cfg")

        user_cfg = [
            "--eps 0.25",
            "--max-parallel 3"
        ]

        try:
            with open(user_cfg_filename, "w") as user_f:
                user_f.write("\n".join(user_cfg))
            args_dict = parse_args(["transfer", "--config-file", user_cfg_filename])
            assert args_dict["eps"] == "0.25"
            assert args_dict["max_parallel"] == 3
        finally:
            shutil.rmtree(tmpdir)
