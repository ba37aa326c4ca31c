"""Invariant laminations of the circle under angle tripling.

Angles and chords are passed as strings ("7/26", "1/3-2/3"); slices are
plain dicts in the same JSON layout the command line tool reads and writes.
"""

import json

from . import _core
from ._core import LamkitError

__all__ = [
    "LamkitError",
    "sigma",
    "orbit",
    "chords_linked",
    "classify_rotational",
    "rotational_sets",
    "gap",
    "canonical_quadgap",
    "canonical_rotational",
    "canonical_quadratic",
    "tune",
    "check_slice",
    "cubioid_check",
    "witness",
    "render_svg",
    "psi_project",
    "psi_lift",
]


def _list(xs):
    return xs if isinstance(xs, str) else ",".join(xs)


def sigma(d, angle):
    return _core.sigma(d, angle)


def orbit(angle, degree=3):
    return json.loads(_core.orbit(degree, angle))


def chords_linked(a, b):
    return _core.chords_linked(a, b)


def classify_rotational(vertices):
    return json.loads(_core.classify_rotational(_list(vertices)))


def rotational_sets(period, degree=3):
    return json.loads(_core.rotational_sets(degree, period))


def gap(spec, depth=4):
    """Fa, Fb, a critical chord or a periodic-type major."""
    return json.loads(_core.gap(spec, depth))


def canonical_quadgap(spec, depth=6):
    return json.loads(_core.canonical_quadgap(spec, depth))


def canonical_rotational(vertices, depth=6):
    return json.loads(_core.canonical_rotational(_list(vertices), depth))


def canonical_quadratic(rotation, depth=8):
    """rotation is "p/q" or "0" for the empty lamination."""
    return json.loads(_core.canonical_quadratic(rotation, depth))


def tune(spec, rotation, depth=6):
    return json.loads(_core.tune(spec, rotation, depth))


def check_slice(slice_):
    return json.loads(_core.check_slice(json.dumps(slice_)))


def cubioid_check(slice_, period_bound=0):
    return json.loads(_core.cubioid_check(json.dumps(slice_), period_bound))


def witness(slice_):
    return json.loads(_core.witness(json.dumps(slice_)))


def render_svg(slice_, size=800, straight=False, fill_gaps=False, highlight=()):
    return _core.render_svg(json.dumps(slice_), size, straight, fill_gaps, list(highlight))


def psi_project(spec, x, vassal=False):
    return _core.psi_project(spec, x, vassal)


def psi_lift(spec, t, vassal=False):
    return _core.psi_lift(spec, t, vassal)
