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

from altbisim.bisim.aea import aea_bisim
from altbisim.errors import InputError
from altbisim.logic.transform import tr_epsilon
from altbisim.model.validate import shared_obs
from altbisim.status import CONSISTENT, VIOLATION
from altbisim.synthesis.synthesize import synthesize
from altbisim.utils.util import to_epsilon, format_decimal

import logging
import threading
import traceback

logger = logging.getLogger(__name__)


class TransferCell(object):
    """Synthesis verdicts for one related pair (sample state, abstract state)."""

    def __init__(self, sample_state, abstract_state, synth_abs, synth_sample):
        self.sample_state = sample_state
        self.abstract_state = abstract_state
        self.synth_abs = synth_abs
        self.synth_sample = synth_sample

    @property
    def violation(self):
        return self.synth_abs and not self.synth_sample

    def to_json(self):
        return {
            "pair": [self.sample_state, self.abstract_state],
            "synth_abs": self.synth_abs,
            "synth_sample": self.synth_sample,
            "violation": self.violation
        }


class TransferReport(object):
    def __init__(self, epsilon, formula, loosened, bisim, cells):
        self.epsilon = epsilon
        self.formula = formula
        self.loosened = loosened
        self.bisim = bisim
        self.cells = list(cells)

    @property
    def violations(self):
        return [cell for cell in self.cells if cell.violation]

    @property
    def verdict(self):
        return VIOLATION if self.violations else CONSISTENT

    def to_json(self):
        return {
            "epsilon": format_decimal(self.epsilon),
            "spec": str(self.formula),
            "loosened_spec": str(self.loosened),
            "systems_bisimilar": self.bisim.systems_bisimilar,
            "related_pairs": len(self.bisim.relation),
            "cells": self.cells,
            "violations": len(self.violations),
            "verdict": self.verdict
        }


class _SynthesisPool(object):
    """Runs synthesis jobs on worker threads; a failed job is re-raised in the caller."""

    def __init__(self, max_parallel):
        if max_parallel < 1:
            raise InputError("max_parallel must be at least 1, got %s" % max_parallel)
        self.max_parallel = max_parallel
        self.lock = threading.RLock()
        self.results = {}
        self.errors = {}

    def _protected_worker(self, jobs):
        while True:
            with self.lock:
                if not jobs:
                    return
                key, job = jobs.pop(0)
            try:
                value = job()
            except BaseException as e:
                with self.lock:
                    logger.debug("synthesis job %s failed: %s", key, traceback.format_exc())
                    self.errors[key] = e
                return
            with self.lock:
                self.results[key] = value

    def run(self, jobs):
        jobs = list(jobs)
        if self.max_parallel == 1:
            for key, job in jobs:
                self.results[key] = job()
            return self.results

        workers = [threading.Thread(name="synthesis-worker-%d" % i, target=self._protected_worker, args=(jobs,))
                   for i in range(min(self.max_parallel, len(jobs)))]
        for worker in workers:
            worker.daemon = True
            worker.start()
        for worker in workers:
            worker.join()
        if self.errors:
            raise self.errors[sorted(self.errors, key=str)[0]]
        return self.results


def transfer_harness(sample, abstraction, eps, formula, max_parallel=1):
    """Checks that synthesis success on the abstraction carries over to the sample for the loosened formula.

    Every pair related by the AeA bisimulation gets one cell; a cell where the abstraction is controllable but
    the sample is not is a violation.
    """
    eps = to_epsilon(eps)
    bisim = aea_bisim(sample, abstraction, eps)
    obs = shared_obs(sample, abstraction)
    loosened = tr_epsilon(formula, eps)
    pairs = bisim.ordered_pairs()

    jobs = []
    for q in sorted({q2 for _, q2 in pairs}, key=lambda s: abstraction.index[s]):
        jobs.append((("abs", q), lambda q=q: synthesize(abstraction, q, formula, obs).realizable))
    for q in sorted({q1 for q1, _ in pairs}, key=lambda s: sample.index[s]):
        jobs.append((("sample", q), lambda q=q: synthesize(sample, q, loosened, obs).realizable))
    verdicts = _SynthesisPool(max_parallel).run(jobs)

    cells = [TransferCell(q1, q2, verdicts[("abs", q2)], verdicts[("sample", q1)]) for q1, q2 in pairs]
    report = TransferReport(eps, formula, loosened, bisim, cells)
    for cell in report.violations:
        logger.warning("synthesis transfer violated at (%s, %s)", cell.sample_state, cell.abstract_state)
    return report
