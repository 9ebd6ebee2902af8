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

from altbisim.dsl.system_parser import anonymous_name
from altbisim.model.agent_ats import AgentAts
from altbisim.model.metric import TABLE
from altbisim.template import TemplateRenderer
from altbisim.utils.util import format_decimal


def _vector(v):
    return "(" + ",".join(format_decimal(x) for x in v) + ")"


class SystemPrinter(TemplateRenderer):
    """Renders a system in the system DSL; parsing the output gives back an equal system."""

    def __init__(self, system):
        self.system = system

    def _metric_lines(self):
        obs = self.system.obs
        if obs.mode == TABLE:
            entries = "; ".join("%s %s = %s" % (p, q, format_decimal(v)) for (p, q), v in sorted(obs.written.items()))
            return ["obs {%s}" % " ".join(obs.observations), "metric table {%s}" % entries]
        lines = ["metric chebyshev dim %d" % obs.dim]
        for p in obs.observations:
            if p != anonymous_name(obs.points[p]):
                lines.append("point %s %s" % (p, _vector(obs.points[p])))
        return lines

    def _observed(self):
        obs = self.system.obs
        observed = {}
        for q in self.system.states:
            p = self.system.obsmap[q]
            if obs.mode != TABLE and p == anonymous_name(obs.points[p]):
                observed[q] = _vector(obs.points[p])
            else:
                observed[q] = p
        return observed

    def _choices(self):
        system = self.system
        rows = []
        for q in system.states:
            for i in system.agents:
                if (q, i) not in system.choices:
                    continue
                sets = system.choices[(q, i)]
                rows.append((q, i, " ; ".join(system.format_set(s) for s in sets)))
        return rows

    def format(self):
        if isinstance(self.system, AgentAts):
            return self.render("ats.txt", agents="{%s}" % ",".join(str(i) for i in self.system.agents),
                               metric_lines=self._metric_lines(), observed=self._observed(),
                               choices=self._choices())
        return self.render("lats.txt", metric_lines=self._metric_lines(), observed=self._observed())


def format_system(system):
    return SystemPrinter(system).format()
