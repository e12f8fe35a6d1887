"""Orthogonal Latin squares, net equivalence and CP^2 realizability.

Thin convenience layer over the compiled ``_netforge`` module: structured
reports cross the boundary as JSON and are parsed into plain dicts here.
"""

import json as _json

from ._netforge import (
    LatinSquare,
    are_orthogonal,
    count_latin,
    cyclic_square,
    default_budget,
    has_orthogonal_mate,
    orthogonal_mates,
    transversal_count,
)
from . import _netforge as _core

__all__ = [
    "LatinSquare",
    "are_orthogonal",
    "classify",
    "count_latin",
    "cyclic_square",
    "default_budget",
    "has_orthogonal_mate",
    "hessian_certificate",
    "incidence",
    "orthogonal_mates",
    "realize",
    "transversal_count",
    "verify_certificate",
]


def classify(k, budget=None):
    """Classify OLS_k up to net-equivalence; returns the report dict."""
    return _json.loads(_core.classify_json(k, budget or default_budget()))


def realize(first, second):
    """Decide realizability of an orthogonal pair; returns the verdict dict."""
    return _json.loads(_core.realize_json(first, second))


def incidence(first, second):
    """The chi incidence of an orthogonal pair as a dict."""
    return _json.loads(_core.incidence_json(first, second))


def hessian_certificate():
    """The Hessian line matrix over Q[x]/(x^2+x+1) as a dict."""
    return _json.loads(_core.hessian_certificate_json())


def verify_certificate(certificate, incidence_):
    """Verify a certificate dict against an incidence dict.

    Returns (ok, witness); witness is empty when ok.
    """
    return _core.verify_certificate_json(
        _json.dumps(certificate), _json.dumps(incidence_)
    )
