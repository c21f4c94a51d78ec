"""Exact lattice, index and wall computations for rank-two bundle invariants.

Surfaces are given as a preset name (see ``presets()``) or a dict in the
same shape the command-line tool reads. Classes are lists of integer
coordinates in the surface's basis. Results come back as plain dicts.
"""

import json

from . import _core
from ._core import SpincertError

__all__ = [
    "SpincertError",
    "presets",
    "preset",
    "scenarios",
    "lattice_check",
    "index",
    "walls",
    "simplicity",
    "verdict",
    "scenario",
    "decide_quadratic",
]


_INT64 = 2**63


def _encode(x):
    # The C++ side reads integers outside int64 from decimal strings.
    if isinstance(x, bool):
        return x
    if isinstance(x, int) and not -_INT64 <= x < _INT64:
        return str(x)
    if isinstance(x, dict):
        return {k: _encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_encode(v) for v in x]
    return x


def _call(fn, query):
    return json.loads(fn(json.dumps(_encode(query))))


def _drop_none(d):
    return {k: v for k, v in d.items() if v is not None}


def presets():
    return list(_core.preset_names())


def preset(name):
    return json.loads(_core.preset_json(name))


def scenarios():
    return list(_core.scenario_names())


def lattice_check(description):
    """Validate a lattice (``gram``) or surface description."""
    return _call(_core.lattice_check, description)


def index(surface, c1, c2, C=None):
    """chi_C(E), d, d1, the compactness bound and the extension-space dimensions."""
    return _call(_core.index_report, _drop_none({"surface": surface, "c1": c1, "c2": c2, "C": C}))


def walls(surface, c1, c2, H1, H2=None):
    """Walls separating H1 and H2, or the walls through H1 when H2 is omitted."""
    return _call(_core.walls, _drop_none({"surface": surface, "c1": c1, "c2": c2, "H1": H1, "H2": H2}))


def simplicity(surface, H, c1, nef=False, semisimple_only=False):
    return _call(
        _core.simplicity,
        {"surface": surface, "H": H, "c1": c1, "nef": nef, "semisimple_only": semisimple_only},
    )


def verdict(surface, H, c1, c2, C=None, nef=False):
    """Zero / nonzero / unknown status with the certificates behind it."""
    return _call(_core.verdict, _drop_none({"surface": surface, "H": H, "c1": c1, "c2": c2, "C": C, "nef": nef}))


def scenario(name=None, c2=None, spec=None):
    """Run a named scenario, or a scenario dict with source, target and pullback."""
    if (name is None) == (spec is None):
        raise ValueError("give exactly one of name or spec")
    query = dict(spec) if spec is not None else {"name": name}
    if c2 is not None:
        query["c2"] = c2
    return _call(_core.scenario_report, query)


def decide_quadratic(coefficients, constraints=()):
    """Decide f <= 0 on the integer points of a polyhedral domain.

    ``coefficients`` maps xx, xy, yy, x, y, c to integers; the arity is the
    number of variables that appear (or an explicit ``arity`` key).
    Each constraint ``(a, b, e)`` means a x + b y >= e.
    Returns ``(holds, witness)`` with witness None when the inequality holds.
    """
    q = dict(coefficients)
    if "arity" not in q:
        q["arity"] = 2 if any(q.get(k, 0) for k in ("xy", "yy", "y")) else (1 if any(q.get(k, 0) for k in ("xx", "x")) else 0)
    q["constraints"] = [list(k) for k in constraints]
    out = _call(_core.decide_quadratic, q)
    return out["holds"], out["witness"]
