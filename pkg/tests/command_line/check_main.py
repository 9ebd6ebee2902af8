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

from altbisim.command_line.main import COMMANDS, main, parse_agents, parse_lasso
from altbisim.dsl import load_system
from altbisim.errors import InputError, InternalError, StrategyError
from altbisim.model import Lasso
from tests.altbisim_mock import Capturing, resource

import io
import json
import os
import pytest
import shutil
import sys
import tempfile

SINGLE = """
ats single
agents 1
obs {p1 p2 p3}
metric table {p1 p2 = 1; p1 p3 = 2; p2 p3 = 1}
state s obs p1
choice s agent 1 = { {s} }
"""

NON_SINGLETON = """
ats loose
agents 2
obs {p}
metric table {}
state q obs p
state r obs p
choice q agent 1 = { {q, r} }
choice q agent 2 = { {q, r} }
choice r agent 1 = { {r} }
choice r agent 2 = { {r} }
"""


def altbisim(monkeypatch, *args):
    """Run the command line; returns (exit code, stdout, stderr)."""
    monkeypatch.setattr(sys, "argv", ["altbisim"] + list(args))
    with Capturing() as captured:
        with pytest.raises(SystemExit) as e:
            main()
    return e.value.code, captured.output, captured.errors


class CheckHelpers(object):

    def check_parse_agents(self):
        assert parse_agents("1,3") == frozenset([1, 3])
        assert parse_agents("") == frozenset()
        with pytest.raises(InputError):
            parse_agents("one")
        with pytest.raises(InputError):
            parse_agents(None)

    def check_parse_lasso(self):
        assert parse_lasso("q0,q1;q2") == Lasso(["q0", "q1"], ["q2"])
        assert parse_lasso("g") == Lasso([], ["g"])


class CheckMain(object):
    def setup_method(self, _):
        self.tmpdir = tempfile.mkdtemp()

    def teardown_method(self, _):
        shutil.rmtree(self.tmpdir)

    def write(self, name, text):
        path = os.path.join(self.tmpdir, name)
        with io.open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def check_validate(self, monkeypatch):
        code, out, _ = altbisim(monkeypatch, "validate", "--sys", resource("example1.ats"))
        assert code == 0
        assert out.strip() == "example1: valid"

        code, out, _ = altbisim(monkeypatch, "validate", "--sys", self.write("loose.ats", NON_SINGLETON))
        assert code == 1
        assert "violation(s)" in out

    def check_bisim_text(self, monkeypatch):
        example1 = resource("example1.ats")
        code, out, _ = altbisim(monkeypatch, "bisim", "--sys1", example1, "--sys2", example1, "--agents", "1",
                                "--eps", "1")
        assert code == 0
        assert "q1 ~ q2" in out
        assert "q1 / q3: obs-distance (round 0)" in out
        assert "systems bisimilar: yes" in out

    def check_bisim_json(self, monkeypatch):
        example1 = resource("example1.ats")
        code, out, _ = altbisim(monkeypatch, "bisim", "--sys1", example1, "--sys2", example1, "--agents", "1",
                                "--json")
        assert code == 0
        document = json.loads(out)
        assert document["epsilon"] == "0"
        assert document["relation"] == [["q1", "q1"], ["q2", "q2"], ["q3", "q3"]]

    def check_require_bisimilar(self, monkeypatch):
        example1, single = resource("example1.ats"), self.write("single.ats", SINGLE)
        args = ["bisim", "--sys1", example1, "--sys2", single, "--agents", "1"]
        assert altbisim(monkeypatch, *args)[0] == 0
        code, out, _ = altbisim(monkeypatch, *(args + ["--require-bisimilar"]))
        assert code == 1
        assert "systems bisimilar: no" in out

    def check_bisim_distinguish(self, monkeypatch):
        example1 = resource("example1.ats")
        code, out, _ = altbisim(monkeypatch, "bisim", "--sys1", example1, "--sys2", example1, "--agents", "1",
                                "--distinguish", "q1", "q2")
        assert code == 0
        assert "distinguishing pair for (q1, q2)" in out

    def check_check_exit_codes(self, monkeypatch):
        example1 = resource("example1.ats")
        code, out, _ = altbisim(monkeypatch, "check", "--sys", example1, "--state", "q1", "--formula", "<<1>> X p1")
        assert code == 0
        assert out.strip() == "<<1>> X p1 at q1: true"

        code, out, _ = altbisim(monkeypatch, "check", "--sys", example1, "--state", "q1", "--formula", "<<1>> X p2")
        assert code == 1

        code, _, err = altbisim(monkeypatch, "check", "--sys", example1, "--state", "q1", "--formula",
                                "<1> p2 & <2> p3")
        assert code == 2
        assert "does not match the analysis epsilon 1" in err

    def check_bounded_unknown_is_not_a_violation(self, monkeypatch):
        game = resource("matrix_game.ats")
        code, out, _ = altbisim(monkeypatch, "check", "--sys", game, "--state", "q0", "--formula",
                                "<<1,2>> X win", "--bounded", "1")
        assert code == 0
        assert out.strip().endswith("unknown")

        code, out, _ = altbisim(monkeypatch, "check", "--sys", game, "--state", "q0", "--formula",
                                "<<1,2>> X win", "--bounded", "2", "--json")
        assert code == 0
        assert json.loads(out)["verdict"] == "TRUE"

    def check_lasso(self, monkeypatch):
        code, out, _ = altbisim(monkeypatch, "check", "--sys", resource("plant.lats"), "--lasso", "q0;g",
                                "--formula", "init U goal")
        assert code == 0
        assert out.strip().endswith("true")

    def check_parse_errors_go_to_stderr(self, monkeypatch):
        code, out, err = altbisim(monkeypatch, "validate", "--sys", resource("broken.lats"))
        assert code == 2
        assert out == ""
        assert "broken.lats:7:" in err

        code, _, err = altbisim(monkeypatch, "tr", "--formula", "goal &")
        assert code == 2
        assert err.startswith("<formula>:1:")

    def check_missing_option(self, monkeypatch):
        code, _, err = altbisim(monkeypatch, "check", "--sys", resource("example1.ats"), "--formula", "p1")
        assert code == 2
        assert "missing required option(s): --state" in err

    def check_wrong_system_kind(self, monkeypatch):
        code, _, err = altbisim(monkeypatch, "synth", "--sys", resource("example1.ats"), "--state", "q1",
                                "--spec", "p1")
        assert code == 2
        assert "must describe a labeled system" in err

    def check_internal_errors_are_not_input_errors(self, monkeypatch):
        def broken(error):
            def run_command(args_dict):
                raise error
            return run_command

        monkeypatch.setitem(COMMANDS, "validate", broken(InternalError("pair (q1, q3) is not H-related")))
        code, out, err = altbisim(monkeypatch, "validate", "--sys", resource("example1.ats"))
        assert code == 3
        assert out == ""
        assert err.startswith("altbisim: internal error: pair (q1, q3) is not H-related")
        assert "Traceback" in err

        monkeypatch.setitem(COMMANDS, "validate", broken(StrategyError("strategy is undefined at memory 0, state g")))
        assert altbisim(monkeypatch, "validate", "--sys", resource("example1.ats"))[0] == 3

        monkeypatch.setitem(COMMANDS, "validate", broken(KeyError("q9")))
        assert altbisim(monkeypatch, "validate", "--sys", resource("example1.ats"))[0] == 3

        monkeypatch.setitem(COMMANDS, "validate", broken(InputError("unknown state q9")))
        code, _, err = altbisim(monkeypatch, "validate", "--sys", resource("example1.ats"))
        assert code == 2
        assert err.strip() == "altbisim: error: unknown state q9"

    def check_partner(self, monkeypatch):
        code, out, _ = altbisim(monkeypatch, "partner", "--formula", "<<1>> X p", "--agents", "1", "--eps", "1")
        assert code == 0
        assert out.strip() == "<<1>> X <1> p"

        code, out, _ = altbisim(monkeypatch, "partner", "--formula", "!p", "--agents", "1", "--eps", "1")
        assert code == 0
        assert out.strip() == "not-in-domain"

        code = altbisim(monkeypatch, "partner", "--formula", "<<1>> X p", "--agents", "1,2", "--eps", "1")[0]
        assert code == 2

    def check_tr(self, monkeypatch):
        code, out, _ = altbisim(monkeypatch, "tr", "--formula", "true U goal", "--eps", "0.5")
        assert code == 0
        assert out.strip() == "(true U <0.5> goal)"

    def check_synth(self, monkeypatch):
        code, out, _ = altbisim(monkeypatch, "synth", "--sys", resource("plant.lats"), "--state", "q0",
                                "--spec", "true U goal", "--verify")
        assert code == 0
        assert out.startswith("realizable from q0")
        assert "horizon: 1" in out
        assert "verified: yes" in out

        code, out, _ = altbisim(monkeypatch, "synth", "--sys", resource("plant_trapped.lats"), "--state", "q0",
                                "--spec", "true U goal")
        assert code == 1
        assert out.startswith("unrealizable from q0")

    def check_transfer(self, monkeypatch):
        code, out, _ = altbisim(monkeypatch, "transfer", "--sample", resource("fine.lats"), "--abs",
                                resource("coarse.lats"), "--spec", "true U mid", "--eps", "0.25", "--json")
        assert code == 0
        document = json.loads(out)
        assert document["verdict"] == "CONSISTENT"
        assert document["violations"] == 0
        assert document["loosened_spec"] == "(true U <0.25> mid)"

    def check_spec_file_list(self, monkeypatch):
        spec_file = self.write("specs.yml", "- true U mid\n- X high\n")
        code, out, _ = altbisim(monkeypatch, "transfer", "--sample", resource("fine.lats"), "--abs",
                                resource("coarse.lats"), "--eps", "0.25", "--spec-file", spec_file, "--json")
        assert code == 0
        reports = json.loads(out)["reports"]
        assert [r["spec"] for r in reports] == ["(true U mid)", "X high"]

    def check_spec_file_mapping(self, monkeypatch):
        spec_file = self.write("synth.yml", "sys: %s\nstate: q0\nspec: true U goal\nverify: true\n"
                               % resource("plant.lats"))
        code, out, _ = altbisim(monkeypatch, "synth", "--spec-file", spec_file)
        assert code == 0
        assert "verified: yes" in out

        # the command line wins over the file
        code, out, _ = altbisim(monkeypatch, "synth", "--spec-file", spec_file, "--state", "t")
        assert code == 1

    def check_spec_file_unknown_key(self, monkeypatch):
        spec_file = self.write("bad.yml", "horizon: 3\n")
        code, _, err = altbisim(monkeypatch, "tr", "--formula", "p", "--spec-file", spec_file)
        assert code == 2
        assert "does not take" in err

    def check_oracles_agree(self, monkeypatch):
        example1, game = resource("example1.ats"), resource("matrix_game.ats")
        code, out, _ = altbisim(monkeypatch, "oracle", "bisim", "--sys1", example1, "--sys2", example1,
                                "--agents", "1", "--eps", "1")
        assert code == 0
        assert "agrees with the main implementation: yes" in out

        code, out, _ = altbisim(monkeypatch, "oracle", "game", "--sys", game, "--state", "q0", "--formula",
                                "<<1>> X win", "--bounded", "2")
        assert code == 0
        assert out.startswith("false")

        code, out, _ = altbisim(monkeypatch, "oracle", "strategies", "--sys", resource("plant.lats"), "--state",
                                "q0", "--spec", "true U goal")
        assert code == 0
        assert out.startswith("realizable")

    def check_oracle_cap(self, monkeypatch):
        game = resource("matrix_game.ats")
        code, _, err = altbisim(monkeypatch, "oracle", "bisim", "--sys1", game, "--sys2", game, "--agents", "1")
        assert code == 2
        assert "capped" in err

    def check_gen_is_seeded(self, monkeypatch):
        first = altbisim(monkeypatch, "gen", "--seed", "7", "--states", "4")
        second = altbisim(monkeypatch, "gen", "--seed", "7", "--states", "4")
        assert first[0] == 0
        assert first[1] == second[1]

        monkeypatch.setenv("ALTBISIM_SEED", "8")
        overridden = altbisim(monkeypatch, "gen", "--seed", "7", "--states", "4", "--json")
        assert json.loads(overridden[1])["seed"] == 8

    def check_gen_refinement_files(self, monkeypatch):
        out = os.path.join(self.tmpdir, "pair")
        code, _, _ = altbisim(monkeypatch, "gen", "--kind", "refinement", "--seed", "3", "--out", out)
        assert code == 0
        assert os.path.exists(out + ".sample.lats")
        assert os.path.exists(out + ".abs.lats")
        code, _, _ = altbisim(monkeypatch, "aea-bisim", "--sys1", out + ".sample.lats", "--sys2", out + ".abs.lats",
                              "--eps", "0.5", "--require-bisimilar")
        assert code == 0

    def check_gen_refinement_feeds_transfer(self, monkeypatch):
        out = os.path.join(self.tmpdir, "pair")
        code, _, _ = altbisim(monkeypatch, "gen", "--kind", "refinement", "--seed", "5", "--states", "3",
                              "--out", out)
        assert code == 0
        abstraction = load_system(out + ".abs.lats")
        names = sorted(set(abstraction.obsmap.values()))
        assert all(name.startswith("p") for name in names)

        code, out_text, _ = altbisim(monkeypatch, "transfer", "--sample", out + ".sample.lats",
                                       "--abs", out + ".abs.lats", "--eps", "0.5",
                                       "--spec", "true U %s" % names[-1], "--json")
        assert code == 0
        document = json.loads(out_text)
        assert document["spec"] == "(true U %s)" % names[-1]
        assert document["systems_bisimilar"]
        assert document["verdict"] == "CONSISTENT"
