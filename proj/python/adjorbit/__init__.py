"""Exact adjoint-orbit charts over the rationals.

Matrices go in as nested lists of int, Fraction or "p/q" strings and come
back as nested lists of Fraction. Pipeline stages return the same JSON
documents as the ``orbit`` command, decoded into dicts.
"""

import json
from fractions import Fraction

from . import _core
from ._core import AdjorbitError

__all__ = [
    "AdjorbitError",
    "analyze",
    "chart",
    "verify",
    "classify",
    "jordan_decompose",
    "sl2_triple",
    "centralizer_dim",
    "invariants",
    "kostant_rep",
    "eval_chart",
]


def _encode(matrix):
    return [[str(Fraction(v)) for v in row] for row in matrix]


def _decode(matrix):
    return [[Fraction(v) for v in row] for row in matrix]


def _args(matrix, family):
    rows = _encode(matrix)
    return family, len(rows), rows


def analyze(matrix, family="sl"):
    return json.loads(_core.analyze(*_args(matrix, family)))


def chart(matrix, family="sl", seed=42):
    return json.loads(_core.chart(*_args(matrix, family), seed))


def verify(matrix, family="sl", seed=42, samples=10):
    return json.loads(_core.verify(*_args(matrix, family), seed, samples))


def classify(matrix, family="sl"):
    return json.loads(_core.classify(*_args(matrix, family)))


def jordan_decompose(matrix, family="sl"):
    xs, xn = _core.jordan_decompose(*_args(matrix, family))
    return _decode(xs), _decode(xn)


def sl2_triple(matrix, family="sl"):
    return tuple(_decode(m) for m in _core.sl2_triple(*_args(matrix, family)))


def centralizer_dim(matrix, family="sl"):
    return _core.centralizer_dim(*_args(matrix, family))


def invariants(matrix):
    return tuple(Fraction(c) for c in _core.invariants(*_args(matrix, "sl")))


def kostant_rep(n, class_id):
    return _decode(_core.kostant_rep(n, [str(Fraction(c)) for c in class_id]))


def eval_chart(matrix, params, family="sl", seed=42):
    """Chart value at ``params`` and the Jacobian rank there."""
    value, rank = _core.eval_chart(*_args(matrix, family), [str(Fraction(p)) for p in params], seed)
    return _decode(value), rank
