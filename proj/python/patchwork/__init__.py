"""Combinatorial patchworking of real algebraic curves."""

import json

from ._core import (
    InfeasibleError,
    InputError,
    asymptote_distances,
    harnack_bound,
    numeric_isotopy,
    patchwork_family,
    preset_names,
)
from . import _core

__all__ = [
    "InfeasibleError",
    "InputError",
    "asymptote_distances",
    "build",
    "chart",
    "convexify",
    "harnack_bound",
    "numeric_isotopy",
    "patchwork_family",
    "preset",
    "preset_names",
    "verify",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def build(problem):
    """Build report for a problem dict (or JSON text)."""
    return json.loads(_core.build_json(_text(problem)))


def convexify(document):
    """Convexify report for a problem or partition."""
    return json.loads(_core.convexify_json(_text(document)))


def verify(problem, t_start=1, t_steps=12, grid=512):
    return json.loads(_core.verify_json(_text(problem), t_start, t_steps, grid))


def preset(name, degree=0):
    return json.loads(_core.preset_json(name, degree))


def chart(expr, adjoin=(), mode=""):
    return json.loads(_core.chart_json(expr, [tuple(n) for n in adjoin], mode))
