"""Finite approach spaces over exact rational costs.

Costs are strings such as ``"0"``, ``"3/2"`` or ``"inf"``. Reports come back
as the same dictionaries the ``finapp`` command line tool prints with ``--json``.
"""

import json

from . import _finapp
from ._finapp import (
    CostParseError,
    FormatError,
    InvalidSpace,
    NotAContraction,
    ShapeError,
    Space,
    __version__,
    cost_add,
    cost_join,
    cost_ominus,
    normalize_cost,
)

__all__ = [
    "CostParseError",
    "FormatError",
    "InvalidSpace",
    "NotAContraction",
    "ShapeError",
    "Space",
    "__version__",
    "check_axioms",
    "check_exponentiable",
    "cost_add",
    "cost_join",
    "cost_ominus",
    "exp_d",
    "load_space",
    "normalize_cost",
    "phi",
    "replay",
]


def load_space(source, pseudo=False):
    """A space from JSON text, a path, or an already decoded dict."""
    if isinstance(source, dict):
        text = json.dumps(source)
    elif isinstance(source, str) and source.lstrip().startswith("{"):
        text = source
    else:
        with open(source, encoding="utf-8") as f:
            text = f.read()
    return Space.from_json(text, pseudo)


def check_axioms(source):
    text = json.dumps(source) if isinstance(source, dict) else source
    return json.loads(_finapp.check_axioms(text))


def check_exponentiable(space, method="exact", grid=()):
    return json.loads(space.check_exponentiable(method, [str(g) for g in grid]))


def phi(space, z, u, v):
    return json.loads(space.phi(z, str(u), str(v)))


def exp_d(space, psi, phi_values):
    return space.exp_d({k: str(v) for k, v in psi.items()}, {k: str(v) for k, v in phi_values.items()})


def replay(space, z, x0, u, v):
    return json.loads(space.replay(z, x0, str(u), str(v)))
