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

from __future__ import print_function

from altbisim.command_line.defaults import ConsoleDefaults
from altbisim.utils.util import altbisim_version

import argparse
import itertools
import os
import sys

ORACLE_COMMANDS = ("bisim", "unroll", "game", "strategies")


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the result as a JSON document.")
    common.add_argument("--debug", action="store_true", help="log progress of the algorithms to stderr.")
    common.add_argument("--log-file", action="store", default=None, help="also write the debug log to this file.")
    common.add_argument("--config-file", action="store", default=ConsoleDefaults.USER_CONFIG_FILE,
                        help="path to the user configuration file.")
    common.add_argument("--spec-file", action="store", default=None,
                        help="YAML file holding a formula, a list of specifications, or a mapping of "
                             "option names to values for options left at their defaults.")
    return common


def _add_pair(parser):
    parser.add_argument("--sys1", action="store", help="first system file.")
    parser.add_argument("--sys2", action="store", help="second system file.")


def _add_eps(parser, default="0"):
    parser.add_argument("--eps", action="store", default=default, help="precision epsilon (>= 0).")


def _add_require_bisimilar(parser):
    parser.add_argument("--require-bisimilar", action="store_true",
                        help="exit 1 unless every state of each system is related to a state of the other.")


def _add_agents(parser):
    parser.add_argument("--agents", action="store", default=None,
                        help="comma-separated coalition, e.g. 1,3; empty string for the empty coalition.")


def create_altbisim_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog="altbisim", description="Alternating approximate bisimulation toolkit")
    parser.add_argument("--version", action="store_true", help="display version")
    commands = parser.add_subparsers(dest="command", metavar="command")

    p = commands.add_parser("validate", parents=[common], help="check the invariants of a system file.")
    p.add_argument("--sys", action="store", help="system file.")

    p = commands.add_parser("bisim", parents=[common], help="greatest alternating approximate bisimulation.")
    _add_pair(p)
    _add_agents(p)
    _add_eps(p)
    p.add_argument("--distinguish", action="store", nargs=2, metavar=("Q1", "Q2"), default=None,
                   help="also print a distinguishing formula pair for two states.")
    _add_require_bisimilar(p)

    p = commands.add_parser("aea-bisim", parents=[common], help="greatest AeA bisimulation of labeled systems.")
    _add_pair(p)
    _add_eps(p)
    _add_require_bisimilar(p)

    p = commands.add_parser("check", parents=[common], help="evaluate a formula at a state or on a lasso.")
    p.add_argument("--sys", action="store", help="system file.")
    p.add_argument("--state", action="store", help="state to evaluate a state formula at.")
    p.add_argument("--formula", action="store",
                   help="formula in the formula DSL; <<A>> scopes over the U/R chain after it.")
    p.add_argument("--eps", action="store", default=None, help="require every <eps> atom to use this epsilon.")
    p.add_argument("--bounded", action="store", type=int, default=None,
                   help="three-valued evaluation looking K states ahead instead of the exact checker.")
    p.add_argument("--witness", action="store_true", help="print a memoryless strategy for the coalition.")
    p.add_argument("--lasso", action="store", default=None,
                   help="evaluate a path formula on 'prefix;cycle', e.g. 'q0,q1;q2'.")

    p = commands.add_parser("partner", parents=[common], help="partner of a formula under the H/E relations.")
    p.add_argument("--formula", action="store", help="state formula (path formula with --path).")
    p.add_argument("--path", action="store_true", help="treat the formula as a path formula.")
    _add_agents(p)
    _add_eps(p)
    p.add_argument("--derivation", action="store_true", help="print the rule applications.")
    p.add_argument("--sys", action="store", default=None, help="with --state, check the transfer on this system.")
    p.add_argument("--state", action="store", default=None, help="state at which to check the transfer.")

    p = commands.add_parser("tr", parents=[common], help="loosen a negation-free specification by epsilon.")
    p.add_argument("--formula", action="store", help="negation-free LTL formula.")
    _add_eps(p)

    p = commands.add_parser("distinguish", parents=[common], help="distinguishing formulas of refuted pairs.")
    _add_pair(p)
    _add_agents(p)
    _add_eps(p)
    p.add_argument("--pair", action="store", nargs=2, metavar=("Q1", "Q2"), default=None,
                   help="the pair to distinguish; every refuted pair when omitted.")

    p = commands.add_parser("synth", parents=[common], help="synthesize a control strategy.")
    p.add_argument("--sys", action="store", help="labeled system file.")
    p.add_argument("--state", action="store", help="initial state.")
    p.add_argument("--spec", action="store", help="negation-free LTL specification.")
    p.add_argument("--eps", action="store", default=None, help="epsilon for --tr.")
    p.add_argument("--tr", action="store_true", help="synthesize for the loosened specification.")
    p.add_argument("--verify", action="store_true", help="re-check the strategy on the product.")

    p = commands.add_parser("transfer", parents=[common], help="synthesis transfer from abstraction to sample.")
    p.add_argument("--sample", action="store", help="fine labeled system.")
    p.add_argument("--abs", action="store", help="abstract labeled system.")
    p.add_argument("--spec", action="store", help="negation-free LTL specification without <eps> atoms.")
    _add_eps(p)
    p.add_argument("--max-parallel", action="store", type=int, default=1,
                   help="upper bound on synthesis runs executed simultaneously.")

    p = commands.add_parser("oracle", help="brute-force reference computations.")
    oracles = p.add_subparsers(dest="oracle_command", metavar="oracle")
    o = oracles.add_parser("bisim", parents=[common], help="bisimulation by relation enumeration.")
    _add_pair(o)
    _add_agents(o)
    _add_eps(o)
    o.add_argument("--labeled", action="store_true", help="compare labeled systems (AeA).")
    o = oracles.add_parser("unroll", parents=[common], help="path evaluation by unrolling a lasso.")
    o.add_argument("--sys", action="store", help="system file.")
    o.add_argument("--lasso", action="store", help="'prefix;cycle', e.g. 'q0,q1;q2'.")
    o.add_argument("--formula", action="store", help="coalition-free path formula.")
    o.add_argument("--length", action="store", type=int, default=None, help="unrolling length.")
    o = oracles.add_parser("game", parents=[common], help="bounded evaluation by game-tree recursion.")
    o.add_argument("--sys", action="store", help="agent system file.")
    o.add_argument("--state", action="store", help="state.")
    o.add_argument("--formula", action="store", help="state formula.")
    o.add_argument("--bounded", action="store", type=int, default=None, help="horizon K.")
    o = oracles.add_parser("strategies", parents=[common], help="realizability by strategy enumeration.")
    o.add_argument("--sys", action="store", help="labeled system file.")
    o.add_argument("--state", action="store", help="initial state.")
    o.add_argument("--spec", action="store", help="negation-free LTL specification.")
    o.add_argument("--cap", action="store", type=int, default=None, help="maximum number of strategies tried.")

    p = commands.add_parser("gen", parents=[common], help="print a seeded random system.")
    p.add_argument("--kind", action="store", default="ats", choices=["ats", "lats", "refinement"],
                   help="agent system, labeled system, or a (sample, abstraction) refinement pair.")
    p.add_argument("--seed", action="store", type=int, default=0,
                   help="generator seed; the %s environment variable overrides it." % ConsoleDefaults.SEED_ENV_VAR)
    p.add_argument("--states", action="store", type=int, default=3)
    p.add_argument("--agents", action="store", type=int, default=2)
    p.add_argument("--observations", action="store", type=int, default=2)
    p.add_argument("--controls", action="store", type=int, default=2)
    p.add_argument("--disturbances", action="store", type=int, default=2)
    p.add_argument("--eps", action="store", default="0.5", help="perturbation bound of refinement pairs.")
    p.add_argument("--out", action="store", default=None,
                   help="file to write; refinement pairs go to OUT.sample.lats and OUT.abs.lats.")
    return parser


def command_path(args_dict):
    path = [args_dict["command"]]
    if args_dict.get("oracle_command"):
        path.append(args_dict["oracle_command"])
    return path


def get_user_config_file(args_dict):
    config_file = args_dict.get("config_file")
    assert config_file is not None
    return os.path.expanduser(config_file)


def config_file_to_args_list(config_file):
    """Options from a config file, one or more per line; blank lines and '#' comments are skipped."""
    if config_file is None:
        raise RuntimeError("config_file is None")

    with open(config_file) as f:
        config_lines = [line for line in f.readlines() if line.strip() and line.lstrip()[0] != '#']

    return list(itertools.chain(*[line.split() for line in config_lines]))


def parse_non_default_args(parser, defaults, args):
    """Parse ``args`` and keep only values that differ from ``defaults``; options unknown to the command are
    ignored so a config file may serve several commands."""
    parsed_args = vars(parser.parse_known_args(args)[0])

    for key, value in defaults.items():
        if key in parsed_args and parsed_args[key] == value:
            del parsed_args[key]

    return parsed_args


def parse_args(args):
    """Parse command-line and config file options.

    Command line arguments have the highest priority, then the user config in ~/.altbisim/config, and finally
    the project config in .altbisim/config.
    """
    parser = create_altbisim_parser()

    if len(args) == 0:
        parser.print_help()
        sys.exit(0)

    if "--version" in args:
        print(altbisim_version())
        sys.exit(0)

    cli_args = vars(parser.parse_args(args))
    if cli_args["command"] is None or (cli_args["command"] == "oracle" and not cli_args.get("oracle_command")):
        parser.print_help()
        sys.exit(ConsoleDefaults.EXIT_INPUT_ERROR)

    path = command_path(cli_args)
    defaults = vars(parser.parse_args(path))

    parsed_args_list = []
    project_config_file = ConsoleDefaults.PROJECT_CONFIG_FILE
    if os.path.exists(project_config_file):
        parsed_args_list.append(
            parse_non_default_args(parser, defaults, path + config_file_to_args_list(project_config_file)))

    user_config_file = get_user_config_file(cli_args)
    if os.path.exists(user_config_file):
        parsed_args_list.append(
            parse_non_default_args(parser, defaults, path + config_file_to_args_list(user_config_file)))

    parsed_args_list.append(parse_non_default_args(parser, defaults, args))

    parsed_args_dict = defaults
    for parsed_args in parsed_args_list:
        parsed_args_dict.update(parsed_args)
    return parsed_args_dict
