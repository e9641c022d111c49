# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the submax solvers.

Instances and reports are plain dicts with the same schema as the CLI's JSON
files.
"""

import json

from submax import _submax
from submax._submax import ContractViolation, FracBudgetError

__all__ = [
        "ContractViolation",
        "FracBudgetError",
        "check",
        "digest",
        "eme_value",
        "generate",
        "solve",
]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def generate(family, n=8, seed=1):
    """Seeded instance for a family such as "cut-graphic"."""
    return json.loads(_submax.generate(family, n, seed))


def digest(instance):
    return _submax.digest(_text(instance))


def solve(instance, epsilon=0.5, ts=0.372, enum_cap=2, frac_cap=24):
    """Run report; includes "opt" and "ratio" when n <= 20."""
    return json.loads(
            _submax.solve(_text(instance), epsilon, ts, enum_cap, frac_cap))


def check(instance, epsilon=0.5):
    """Solves and runs every checker; returns report, violations and checks."""
    return json.loads(_submax.check(_text(instance), epsilon))


def eme_value(table, sure, coords):
    """Exact F(y) for f given as a 2^n table; coords are (members, p) pairs."""
    return _submax.eme_value(list(table), list(sure),
                             [(list(s), float(p)) for s, p in coords])
