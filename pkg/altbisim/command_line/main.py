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

from altbisim.bisim import approx_bisim, aea_bisim, distinguish, distinguish_all
from altbisim.command_line.defaults import ConsoleDefaults
from altbisim.command_line.parse_args import command_path, create_altbisim_parser, parse_args
from altbisim.dsl import parse_formula, load_system, format_system, STATE, PATH, LTL
from altbisim.errors import InputError, OracleCapError, ParseError, UnsupportedExactError
from altbisim.json_serializable import dumps
from altbisim.loggermaker import ConsoleLoggerMaker, close_logger
from altbisim.logic.bounded import eval_bounded
from altbisim.logic.formula import coalition_agents
from altbisim.logic.lasso_eval import eval_lasso
from altbisim.logic.state_checker import StateChecker
from altbisim.logic.transform import tr_epsilon
from altbisim.model import AgentAts, LabelAts, Lasso, validate
from altbisim.oracle import enum_bisim, unroll_eval, required_length, bounded_game, enum_strategies
from altbisim.relations import derive_h, derive_e, check_transfer
from altbisim.status import BISIMILAR, FALSE, NOT_IN_DOMAIN, VIOLATION, Verdict
from altbisim.synthesis import synthesize, verify_under_strategy, transfer_harness
from altbisim.template import TemplateRenderer
from altbisim.utils.fixtures import gen_fixture, gen_refinement_pair
from altbisim.utils.util import format_decimal, to_epsilon

import io
import os
import sys
import traceback
import yaml


class TextReport(TemplateRenderer):
    """Human-readable rendering of a command result."""

    def __init__(self, **context):
        self.__dict__.update(context)


class Outcome(object):
    """What a command prints, and its exit code."""

    def __init__(self, document, text, exit_code=ConsoleDefaults.EXIT_OK):
        self.document = document
        self.text = text
        self.exit_code = exit_code


def require(args_dict, *names):
    missing = ["--" + n.replace("_", "-") for n in names if args_dict.get(n) in (None, "")]
    if missing:
        raise InputError("missing required option(s): %s" % ", ".join(missing))


def parse_agents(text):
    if text is None:
        raise InputError("missing required option(s): --agents")
    try:
        return frozenset(int(a) for a in text.replace(" ", "").split(",") if a)
    except ValueError:
        raise InputError("--agents expects comma-separated integers, got %s" % text)


def parse_lasso(text):
    prefix, _, cycle = text.rpartition(";")
    split = (lambda part: [q for q in part.replace(" ", "").split(",") if q])
    return Lasso(split(prefix), split(cycle))


def _formula_option(args_dict):
    return "spec" if "spec" in args_dict else "formula"


def load_spec_file(args_dict):
    """Fill options left at their defaults from the YAML --spec-file.

    The document is a formula, a list of specifications (``transfer`` runs each one), or a mapping of
    option names to values.
    """
    path = args_dict.get("spec_file")
    if path is None:
        return args_dict
    try:
        with io.open(path, encoding="utf-8") as f:
            values = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise InputError("spec file %s is not valid YAML: %s" % (path, e))
    if values is None:
        raise InputError("spec file %s is empty" % path)
    if not isinstance(values, dict):
        values = {_formula_option(args_dict): values}

    defaults = vars(create_altbisim_parser().parse_args(command_path(args_dict)))
    for key, value in values.items():
        key = str(key).replace("-", "_")
        if key not in args_dict:
            raise InputError("spec file %s sets %s, which '%s' does not take" % (path, key, args_dict["command"]))
        if args_dict[key] is None or args_dict[key] == defaults.get(key):
            if isinstance(value, list):
                value = [str(v) for v in value]
            elif not isinstance(value, (bool, int)):
                value = str(value)
            args_dict[key] = value

    key = _formula_option(args_dict)
    if isinstance(args_dict.get(key), list) and args_dict["command"] != "transfer":
        if len(args_dict[key]) != 1:
            raise InputError("'%s' takes a single formula, spec file %s lists %d"
                             % (args_dict["command"], path, len(args_dict[key])))
        args_dict[key] = args_dict[key][0]
    return args_dict


def _load_kind(path, kind):
    system = load_system(path)
    if not isinstance(system, kind):
        raise InputError("%s must describe %s" % (path, "an agent system" if kind is AgentAts else
                                                  "a labeled system"))
    return system


def _refuted(result):
    left = {q: i for i, q in enumerate(result.left_states)}
    right = {q: i for i, q in enumerate(result.right_states)}
    pairs = sorted(result.refutations, key=lambda p: (left[p[0]], right[p[1]]))
    return [(pair, result.refutations[pair]) for pair in pairs]


def _bisim_exit_code(args_dict, result):
    if args_dict.get("require_bisimilar") and not result.systems_bisimilar:
        return ConsoleDefaults.EXIT_VIOLATION
    return ConsoleDefaults.EXIT_OK


def _bisim_text(kind, result, distinctions=(), bisimilar_pair=None):
    return TextReport(kind=kind, epsilon=format_decimal(result.epsilon),
                      agents=None if result.agents is None else sorted(result.agents), result=result,
                      refuted=_refuted(result), distinctions=list(distinctions),
                      bisimilar_pair=bisimilar_pair).render("bisim.txt")


def run_validate(args_dict):
    require(args_dict, "sys")
    system = load_system(args_dict["sys"], validate=False)
    violations = validate(system)
    document = {"system": system.name, "valid": not violations, "violations": violations}
    text = TextReport(system=system, violations=violations).render("validate.txt")
    return Outcome(document, text, ConsoleDefaults.EXIT_VIOLATION if violations else ConsoleDefaults.EXIT_OK)


def run_bisim(args_dict):
    require(args_dict, "sys1", "sys2")
    first, second = _load_kind(args_dict["sys1"], AgentAts), _load_kind(args_dict["sys2"], AgentAts)
    agents = parse_agents(args_dict["agents"])
    result = approx_bisim(first, second, agents, args_dict["eps"])
    document = result.to_json()
    distinctions, bisimilar_pair = [], None
    if args_dict.get("distinguish"):
        q1, q2 = args_dict["distinguish"]
        found = distinguish(first, second, agents, result.epsilon, q1, q2, result=result)
        document["distinguish"] = found
        if found == BISIMILAR:
            bisimilar_pair = (q1, q2)
        else:
            distinctions.append(found)
    return Outcome(document, _bisim_text("alternating", result, distinctions, bisimilar_pair),
                   _bisim_exit_code(args_dict, result))


def run_aea_bisim(args_dict):
    require(args_dict, "sys1", "sys2")
    first, second = _load_kind(args_dict["sys1"], LabelAts), _load_kind(args_dict["sys2"], LabelAts)
    result = aea_bisim(first, second, args_dict["eps"])
    return Outcome(result.to_json(), _bisim_text("AeA", result), _bisim_exit_code(args_dict, result))


def _verdict_exit_code(verdict):
    return ConsoleDefaults.EXIT_VIOLATION if verdict == FALSE else ConsoleDefaults.EXIT_OK


def run_check(args_dict):
    require(args_dict, "sys", "formula")
    system = load_system(args_dict["sys"])
    eps = None if args_dict.get("eps") is None else to_epsilon(args_dict["eps"])

    if args_dict.get("lasso"):
        formula = parse_formula(args_dict["formula"], PATH)
        lasso = parse_lasso(args_dict["lasso"])
        verdict = Verdict.of(eval_lasso(system, system.obs, lasso, formula, eps))
        document = {"lasso": lasso, "formula": formula, "verdict": verdict}
        return Outcome(document, "%s on %r: %s" % (formula, lasso, verdict), _verdict_exit_code(verdict))

    require(args_dict, "state")
    formula = parse_formula(args_dict["formula"], STATE)
    if coalition_agents(formula) and not isinstance(system, AgentAts):
        raise InputError("coalition formulas need an agent system")
    q = args_dict["state"]
    document = {"state": q, "formula": formula}
    if args_dict.get("bounded") is not None:
        verdict = eval_bounded(system, system.obs, q, formula, args_dict["bounded"], eps)
        document.update(horizon=args_dict["bounded"], verdict=verdict)
        return Outcome(document, "%s at %s, %d states ahead: %s" % (formula, q, args_dict["bounded"], verdict),
                       _verdict_exit_code(verdict))

    checker = StateChecker(system, system.obs, eps)
    verdict = Verdict.of(checker.holds(q, formula))
    document["verdict"] = verdict
    text = "%s at %s: %s" % (formula, q, verdict)
    if args_dict.get("witness") and verdict == Verdict.of(True):
        strategy = checker.witness(formula)
        document["witness"] = strategy
        text += "\nwitness: " + ", ".join("%s -> %s" % (state, system.format_set(chosen))
                                         for (_, state), chosen in sorted(strategy.table.items(),
                                                                          key=lambda kv: system.index[kv[0][1]]))
    return Outcome(document, text, _verdict_exit_code(verdict))


def run_partner(args_dict):
    require(args_dict, "formula")
    agents = parse_agents(args_dict["agents"])
    eps = to_epsilon(args_dict["eps"])
    if args_dict.get("path"):
        derived = derive_e(parse_formula(args_dict["formula"], PATH), agents, eps)
    else:
        derived = derive_h(parse_formula(args_dict["formula"], STATE), agents, eps)
    if derived is NOT_IN_DOMAIN:
        return Outcome({"formula": args_dict["formula"], "partner": NOT_IN_DOMAIN}, str(NOT_IN_DOMAIN))

    document = derived.to_json()
    if not args_dict.get("derivation"):
        del document["derivation"]
    text = str(derived.right)
    if args_dict.get("derivation"):
        text += "\n" + "\n".join("  (%d) %s  %s ~ %s" % (s.rule, s.kind, s.left, s.right) for s in derived.derivation)

    exit_code = ConsoleDefaults.EXIT_OK
    if args_dict.get("sys") or args_dict.get("state"):
        require(args_dict, "sys", "state")
        if args_dict.get("path"):
            raise InputError("the transfer check takes a state formula")
        system = _load_kind(args_dict["sys"], AgentAts)
        check = check_transfer(system, system.obs, args_dict["state"], derived.left, agents, eps)
        document["transfer"] = check
        text += "\ntransfer at %s: %s" % (args_dict["state"], check.verdict)
        if check.verdict == VIOLATION:
            exit_code = ConsoleDefaults.EXIT_VIOLATION
    return Outcome(document, text, exit_code)


def run_tr(args_dict):
    require(args_dict, "formula")
    formula = parse_formula(args_dict["formula"], LTL)
    loosened = tr_epsilon(formula, args_dict["eps"])
    return Outcome({"formula": formula, "epsilon": format_decimal(to_epsilon(args_dict["eps"])),
                    "result": loosened}, str(loosened))


def run_distinguish(args_dict):
    require(args_dict, "sys1", "sys2")
    first, second = _load_kind(args_dict["sys1"], AgentAts), _load_kind(args_dict["sys2"], AgentAts)
    agents = parse_agents(args_dict["agents"])
    result = approx_bisim(first, second, agents, args_dict["eps"])
    if args_dict.get("pair"):
        q1, q2 = args_dict["pair"]
        found = distinguish(first, second, agents, result.epsilon, q1, q2, result=result)
        if found == BISIMILAR:
            return Outcome({"pair": [q1, q2], "result": BISIMILAR}, "(%s, %s) is bisimilar" % (q1, q2))
        distinctions = [found]
    else:
        distinctions = distinguish_all(first, second, agents, result.epsilon, result=result)
    text = "\n".join("(%s, %s) %s: %s / %s" % (d.pair[0], d.pair[1], d.direction, d.left, d.right)
                     for d in distinctions)
    return Outcome({"distinctions": distinctions}, text)


def run_synth(args_dict):
    require(args_dict, "sys", "state", "spec")
    system = _load_kind(args_dict["sys"], LabelAts)
    formula = parse_formula(args_dict["spec"], LTL)
    if args_dict.get("tr"):
        require(args_dict, "eps")
        formula = tr_epsilon(formula, args_dict["eps"])
    result = synthesize(system, args_dict["state"], formula)
    document = result.to_json()
    verified = None
    if args_dict.get("verify") and result.realizable:
        verified = verify_under_strategy(system, args_dict["state"], result.strategy, formula)
        document["verified"] = verified
    text = TextReport(result=result, verified=verified).render("synth.txt")
    failed = not result.realizable or verified is False
    return Outcome(document, text, ConsoleDefaults.EXIT_VIOLATION if failed else ConsoleDefaults.EXIT_OK)


def run_transfer(args_dict):
    require(args_dict, "sample", "abs", "spec")
    sample, abstraction = _load_kind(args_dict["sample"], LabelAts), _load_kind(args_dict["abs"], LabelAts)
    specs = args_dict["spec"] if isinstance(args_dict["spec"], list) else [args_dict["spec"]]
    reports, texts = [], []
    for spec in specs:
        formula = parse_formula(spec, LTL)
        report = transfer_harness(sample, abstraction, args_dict["eps"], formula, args_dict["max_parallel"])
        reports.append(report)
        texts.append(TextReport(report=report, epsilon=format_decimal(report.epsilon)).render("transfer.txt"))
    failed = any(report.verdict == VIOLATION for report in reports)
    document = reports[0] if len(reports) == 1 else {"reports": reports}
    return Outcome(document, "\n".join(texts), ConsoleDefaults.EXIT_VIOLATION if failed else ConsoleDefaults.EXIT_OK)


def _audit(document, text, agree):
    document["agrees"] = agree
    text += "\nagrees with the main implementation: %s" % ("yes" if agree else "NO")
    return Outcome(document, text, ConsoleDefaults.EXIT_OK if agree else ConsoleDefaults.EXIT_VIOLATION)


def run_oracle(args_dict):
    command = args_dict["oracle_command"]
    if command == "bisim":
        require(args_dict, "sys1", "sys2")
        if args_dict.get("labeled"):
            first, second = _load_kind(args_dict["sys1"], LabelAts), _load_kind(args_dict["sys2"], LabelAts)
            relation = enum_bisim(first, second, None, args_dict["eps"])
            main = aea_bisim(first, second, args_dict["eps"]).relation
        else:
            first, second = _load_kind(args_dict["sys1"], AgentAts), _load_kind(args_dict["sys2"], AgentAts)
            agents = parse_agents(args_dict["agents"])
            relation = enum_bisim(first, second, agents, args_dict["eps"])
            main = approx_bisim(first, second, agents, args_dict["eps"]).relation
        pairs = sorted(relation, key=lambda p: (first.index[p[0]], second.index[p[1]]))
        text = "\n".join("%s ~ %s" % p for p in pairs) or "(empty relation)"
        return _audit({"relation": [list(p) for p in pairs]}, text, relation == main)

    if command == "unroll":
        require(args_dict, "sys", "lasso", "formula")
        system = load_system(args_dict["sys"])
        lasso = parse_lasso(args_dict["lasso"])
        formula = parse_formula(args_dict["formula"], PATH)
        n = args_dict.get("length") or required_length(lasso, formula)
        value = unroll_eval(system, system.obs, lasso, formula, n)
        main = eval_lasso(system, system.obs, lasso, formula)
        return _audit({"length": n, "verdict": Verdict.of(value)}, "%s" % Verdict.of(value), value == main)

    if command == "game":
        require(args_dict, "sys", "state", "formula", "bounded")
        system = _load_kind(args_dict["sys"], AgentAts)
        formula = parse_formula(args_dict["formula"], STATE)
        verdict = bounded_game(system, system.obs, args_dict["state"], formula, args_dict["bounded"])
        main = eval_bounded(system, system.obs, args_dict["state"], formula, args_dict["bounded"])
        return _audit({"verdict": verdict}, str(verdict), verdict == main)

    require(args_dict, "sys", "state", "spec")
    system = _load_kind(args_dict["sys"], LabelAts)
    formula = parse_formula(args_dict["spec"], LTL)
    kwargs = {} if args_dict.get("cap") is None else {"cap": args_dict["cap"]}
    realizable = enum_strategies(system, args_dict["state"], formula, **kwargs)
    main = synthesize(system, args_dict["state"], formula).realizable
    return _audit({"realizable": realizable}, "realizable" if realizable else "unrealizable", realizable == main)


def _write(path, text):
    with io.open(path, "w", encoding="utf-8") as f:
        f.write(text)


def run_gen(args_dict):
    seed = args_dict["seed"]
    if os.environ.get(ConsoleDefaults.SEED_ENV_VAR):
        try:
            seed = int(os.environ[ConsoleDefaults.SEED_ENV_VAR])
        except ValueError:
            raise InputError("%s must be an integer" % ConsoleDefaults.SEED_ENV_VAR)

    if args_dict["kind"] == "refinement":
        sample, abstraction = gen_refinement_pair(seed, args_dict["states"], args_dict["controls"],
                                                  args_dict["disturbances"], args_dict["eps"])
        texts = [format_system(sample), format_system(abstraction)]
        if args_dict.get("out"):
            _write(args_dict["out"] + ".sample.lats", texts[0])
            _write(args_dict["out"] + ".abs.lats", texts[1])
        return Outcome({"seed": seed, "sample": sample, "abstraction": abstraction}, "\n".join(texts).rstrip("\n"))

    system = gen_fixture(seed, args_dict["kind"], states=args_dict["states"], agents=args_dict["agents"],
                         observations=args_dict["observations"], controls=args_dict["controls"],
                         disturbances=args_dict["disturbances"])
    text = format_system(system)
    if args_dict.get("out"):
        _write(args_dict["out"], text)
    return Outcome({"seed": seed, "system": system}, text.rstrip("\n"))


COMMANDS = {
    "validate": run_validate,
    "bisim": run_bisim,
    "aea-bisim": run_aea_bisim,
    "check": run_check,
    "partner": run_partner,
    "tr": run_tr,
    "distinguish": run_distinguish,
    "synth": run_synth,
    "transfer": run_transfer,
    "oracle": run_oracle,
    "gen": run_gen,
}


def run(args_dict):
    """Execute one parsed command, print its output and return the exit code."""
    outcome = COMMANDS[args_dict["command"]](load_spec_file(args_dict))
    if args_dict.get("json"):
        print(dumps(outcome.document))
    else:
        print(outcome.text.rstrip("\n"))
    return outcome.exit_code


def main():
    """altbisim entry point: parse options, run the command and map failures to exit codes.

    Exit codes are 0 on success, 1 when a verdict reports a violated property, 2 on bad input and 3 when a
    computed result fails its own checks (a strategy the synthesizer built that cannot be played, an
    unrelated distinguishing pair) or anything else goes wrong inside the tool.
    """
    args_dict = parse_args(sys.argv[1:])
    logger = ConsoleLoggerMaker(debug=args_dict.get("debug", False), log_file=args_dict.get("log_file")).logger
    for k, v in sorted(args_dict.items()):
        logger.debug("Configuration: %s=%s", k, v)

    try:
        exit_code = run(args_dict)
    except ParseError as e:
        for diagnostic in e.diagnostics:
            print(str(diagnostic), file=sys.stderr)
        exit_code = ConsoleDefaults.EXIT_INPUT_ERROR
    except (InputError, UnsupportedExactError, OracleCapError, IOError) as e:
        print("altbisim: error: %s" % e, file=sys.stderr)
        exit_code = ConsoleDefaults.EXIT_INPUT_ERROR
    except Exception as e:
        print("altbisim: internal error: %s" % e, file=sys.stderr)
        print(traceback.format_exc(limit=16), file=sys.stderr)
        exit_code = ConsoleDefaults.EXIT_INTERNAL_ERROR
    finally:
        close_logger(logger)
    sys.exit(exit_code)
