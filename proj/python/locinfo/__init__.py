# Copyright 2026 The locinfo Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Channel information matrices, bound tables and testers for local data."""

import json

import numpy as np

from . import _locinfo

__all__ = [
      "bounds",
      "git_describe",
      "info_matrix",
      "norms",
      "preset",
      "simulate",
      "verify",
      "wilson",
      "worst_case_error",
]

git_describe = _locinfo.git_describe


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def info_matrix(channel):
    """Returns H(W) for a channel given as a JSON object or string."""
    return np.asarray(_locinfo.info_matrix(_dump(channel)))


def norms(channel):
    """Returns op, nuclear and Frobenius norms of H(W)."""
    return json.loads(_locinfo.norms(_dump(channel)))


def bounds(k, eps, family):
    """Returns the lower-bound table rows for a constraint family."""
    return json.loads(_locinfo.bounds(int(k), float(eps), family))


def simulate(spec):
    """Runs one protocol on uniform samples and returns its outcome."""
    return json.loads(_locinfo.simulate(_dump(spec)))


def verify(suite, cases, seed):
    """Runs an exact-enumeration suite and returns its summary."""
    return json.loads(_locinfo.verify(suite, int(cases), int(seed)))


def worst_case_error(spec, trials, seed):
    """Monte Carlo worst-case error over uniform and the adversary set."""
    return json.loads(_locinfo.worst_case_error(_dump(spec), int(trials), int(seed)))


def preset(name):
    """Returns the tester constants of the "proof" or "calibrated" preset."""
    return json.loads(_locinfo.preset(name))


def wilson(errors, trials):
    """Returns (rate, lower, upper) of the 95% Wilson interval."""
    return tuple(_locinfo.wilson(int(errors), int(trials)))
