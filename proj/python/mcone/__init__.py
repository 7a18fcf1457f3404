"""Momentum-cone analysis: polyhedral cones, simplex sections, spherical
geodesics and the example-family analyzer."""

import json

from . import _core
from ._core import (
    Error,
    InputError,
    InvariantError,
    caratheodory_reduce,
    extremal_scale,
    gnomonic,
    gnomonic_inv,
    hypotenuse,
    in_image,
    is_weakly_monotone_geodesic,
    radialize,
    section,
)

__all__ = [
    "Error",
    "InputError",
    "InvariantError",
    "analyze",
    "caratheodory_reduce",
    "classify_circle",
    "cone_contains",
    "cone_from_generators",
    "extremal_scale",
    "gnomonic",
    "gnomonic_inv",
    "golden_table",
    "hypotenuse",
    "in_image",
    "is_weakly_monotone_geodesic",
    "radialize",
    "reproduce_table",
    "section",
]


def cone_from_generators(generators, dim=-1):
    """Conic hull as {"dim", "generators", "halfspaces"}."""
    return json.loads(_core.cone_from_generators_json([list(map(float, g)) for g in generators], dim))


def cone_contains(cone, v, tol=1e-9):
    return _core.cone_contains(json.dumps(cone), [float(x) for x in v], tol)


def classify_circle(space):
    """Classify a circle-valued graph map given as a DiscretizedSpace dict."""
    return json.loads(_core.classify_circle_json(json.dumps(space)))


def analyze(family, resolution=512, **params):
    """Analyze an example family, e.g. analyze("Mn", n=1)."""
    spec = {"family": family, "resolution": resolution, **params}
    return json.loads(_core.analyze_json(json.dumps(spec)))


def reproduce_table(table):
    return _core.reproduce_table_csv(table)


def golden_table(table):
    return _core.golden_table_csv(table)
