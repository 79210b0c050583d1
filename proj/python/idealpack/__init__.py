# Copyright 2026 The idealpack Authors
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

"""Exact strip packing formulations and pairwise idealness checks.

Instances, layouts and reports are plain dicts in the same JSON shapes the
command-line tool reads and writes. Rationals are strings such as "9/2";
``fraction`` converts one to ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _idealpack
from ._idealpack import InvalidInstance, JsonFormatError, TooLarge

__all__ = [
    "InvalidInstance",
    "JsonFormatError",
    "TooLarge",
    "campaign",
    "check_ideal",
    "export_lp",
    "family_counts",
    "fraction",
    "generate_instance",
    "oracle",
    "render_svg",
    "solve",
]


def _text(doc):
    if doc is None:
        return ""
    return doc if isinstance(doc, str) else json.dumps(doc)


def fraction(value):
    """Parses a rational string from a report."""
    return Fraction(value)


def generate_instance(seed, n, grid=1):
    return json.loads(_idealpack.generate_instance(seed, n, grid))


def solve(instance, formulation="su", sequence_pair=False, branch=False, static_bounds=False,
          node_limit=100000, warm_start=True):
    return json.loads(_idealpack.solve(_text(instance), formulation, sequence_pair, branch,
                                       static_bounds, node_limit, warm_start))


def check_ideal(kind, mode="enumeration", instance=None, params=None, two_squares=False):
    return json.loads(_idealpack.check_ideal(kind, mode, _text(instance), _text(params), two_squares))


def campaign(kind, samples=100, seed=1, epsilon="1", grid=4, boundary=False):
    return json.loads(_idealpack.campaign(kind, samples, seed, str(epsilon), grid, boundary))


def oracle(instance):
    return json.loads(_idealpack.oracle(_text(instance)))


def export_lp(instance, formulation="su", sequence_pair=False, branch=False, static_bounds=False):
    return _idealpack.export_lp(_text(instance), formulation, sequence_pair, branch, static_bounds)


def render_svg(instance, layout=None, scale="6"):
    return _idealpack.render_svg(_text(instance), _text(layout), str(scale))


def family_counts(kind):
    return _idealpack.family_counts(kind)
