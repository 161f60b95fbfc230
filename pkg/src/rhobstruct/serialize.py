"""JSON file format for representations and reports.

A representation file looks like::

    {"genus": 1, "punctures": 1, "rank": 2,
     "A": [M, ...], "B": [M, ...], "C": [M, ...]}

where each matrix M is ``{"body": [["1", "2"], ["0", "1"]], "twist": {"k": 0, "n": 1}}``
(the matrix twist * body, twist = e^{2 pi i k/n}) or a bare list of rows.
Rationals are strings such as ``"-1/2"``; integers are accepted, floats are
not.  With a top-level ``"conductor": N`` a matrix may instead be
``{"cyclotomic": rows}`` whose entries are coefficient lists of length
phi(N) in powers of zeta_N; such a matrix must be a root of unity times a
rational matrix.  A direct sum is ``{"sum": [rep, rep, ...]}``.

Output is canonical: sorted keys, two-space indent, reduced fractions.
"""
from __future__ import annotations

import json
from fractions import Fraction

from . import _poly
from .errors import ParseError, PreconditionFailed
from .matrix import Matrix
from .scalars import CyclotomicNumber, UnityRoot
from .surface import DirectSumRepresentation, SurfaceRepresentation
from .twisted import TwistedMatrix


def _rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"rational entries must be strings or integers, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {x!r}") from None


def _int(doc, key) -> int:
    try:
        v = doc[key]
    except (KeyError, TypeError):
        raise ParseError(f"missing field {key!r}") from None
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"field {key!r} must be an integer")
    return v


def _rows(x) -> list:
    if not isinstance(x, list) or not all(isinstance(r, list) for r in x):
        raise ParseError("matrix body must be a list of rows")
    return x


def untwist(m: Matrix, conductor: int) -> TwistedMatrix:
    """Write a cyclotomic matrix as root of unity times rational matrix."""
    order = conductor if conductor % 2 == 0 else 2 * conductor
    lifted = m.to_cyclotomic(order)
    for j in range(order):
        z = CyclotomicNumber.zeta(-j, order)
        scaled = [[x * z for x in row] for row in lifted.rows]
        if all(x.is_rational() for row in scaled for x in row):
            body = Matrix([[x.rational_value() for x in row] for row in scaled])
            return TwistedMatrix(body, UnityRoot(j, order))
    raise PreconditionFailed("matrix is not a root of unity times a rational matrix")


def parse_matrix(x, conductor: int | None = None) -> TwistedMatrix:
    if isinstance(x, list):
        return TwistedMatrix(Matrix([[_rational(e) for e in row] for row in _rows(x)]))
    if not isinstance(x, dict):
        raise ParseError(f"cannot read matrix from {x!r}")
    if "cyclotomic" in x:
        if conductor is None:
            raise ParseError("cyclotomic entries need a top-level conductor")
        phi = _poly.totient(conductor)
        rows = []
        for row in _rows(x["cyclotomic"]):
            out = []
            for e in row:
                if not isinstance(e, list) or len(e) != phi:
                    raise ParseError(f"cyclotomic entries need {phi} coefficients")
                out.append(CyclotomicNumber(conductor, [_rational(c) for c in e]))
            rows.append(out)
        return untwist(Matrix(rows), conductor)
    if "body" not in x:
        raise ParseError("matrix object needs a 'body'")
    body = Matrix([[_rational(e) for e in row] for row in _rows(x["body"])])
    twist = x.get("twist", {"k": 0, "n": 1})
    k, n = _int(twist, "k"), _int(twist, "n")
    if n <= 0:
        raise ParseError("twist order must be positive")
    return TwistedMatrix(body, UnityRoot(k, n))


def representation_from_dict(doc) -> SurfaceRepresentation | DirectSumRepresentation:
    if not isinstance(doc, dict):
        raise ParseError("representation must be a JSON object")
    if "sum" in doc:
        parts = doc["sum"]
        if not isinstance(parts, list):
            raise ParseError("'sum' must be a list of representations")
        return DirectSumRepresentation(tuple(representation_from_dict(p) for p in parts))
    g, m, n = _int(doc, "genus"), _int(doc, "punctures"), _int(doc, "rank")
    conductor = doc.get("conductor")
    if conductor is not None and (isinstance(conductor, bool) or not isinstance(conductor, int) or conductor < 1):
        raise ParseError("conductor must be a positive integer")
    lists = {}
    for key in ("A", "B", "C"):
        value = doc.get(key, [])
        if not isinstance(value, list):
            raise ParseError(f"field {key!r} must be a list of matrices")
        lists[key] = tuple(parse_matrix(x, conductor) for x in value)
    return SurfaceRepresentation(g, m, n, lists["A"], lists["B"], lists["C"])


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return representation_from_dict(doc)


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text)


def unity_to_dict(u: UnityRoot) -> dict:
    return {"k": u.k, "n": u.n}


def matrix_to_dict(m: TwistedMatrix) -> dict:
    return {
        "body": [[str(x) for x in row] for row in m.body.rows],
        "twist": unity_to_dict(m.twist),
    }


def representation_to_dict(rep) -> dict:
    if isinstance(rep, DirectSumRepresentation):
        return {"sum": [representation_to_dict(s) for s in rep.summands]}
    return {
        "genus": rep.genus,
        "punctures": rep.punctures,
        "rank": rep.rank,
        "A": [matrix_to_dict(x) for x in rep.A],
        "B": [matrix_to_dict(x) for x in rep.B],
        "C": [matrix_to_dict(x) for x in rep.C],
    }


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def dumps(rep) -> str:
    return canonical_json(representation_to_dict(rep))
