"""Exact computations with ternary quadratic forms and their rank-4 even
Clifford algebras.

Thin wrapper over the C++ extension: scalars travel as strings in the ring's
literal syntax, structured results come back as plain dicts.
"""

import json as _json

try:
    from . import _tqf
except ImportError:  # running against a build tree, module on sys.path
    import _tqf

evaluate = _tqf.evaluate
half_discriminant = _tqf.half_discriminant
is_semiregular = _tqf.is_semiregular
normalize = _tqf.normalize
act = _tqf.act
azumaya_uniqueness = _tqf.azumaya_uniqueness
selftest = _tqf.selftest


def classify(ring, form):
    return _json.loads(_tqf.classify_json(ring, form))


def clifford(ring, form, t=(), check_table=False):
    return _json.loads(_tqf.clifford_json(ring, form, list(t), check_table))


def census(ring, with_algebra_classes=True):
    return _json.loads(_tqf.census_json(ring, with_algebra_classes))


def lift(ring, q, qp, map16, k=0):
    return _json.loads(_tqf.lift_json(ring, q, qp, list(map16), k))


def similar(ring, q, qp):
    witness = _tqf.similar_json(ring, q, qp)
    return None if witness is None else _json.loads(witness)


__all__ = [
    "evaluate",
    "half_discriminant",
    "is_semiregular",
    "classify",
    "clifford",
    "census",
    "normalize",
    "act",
    "lift",
    "similar",
    "azumaya_uniqueness",
    "selftest",
]
