"""JSON documents for representations.

Layout::

    {"schemaVersion": 1, "kind": "mrep",
     "start": [1, 2], "basis": [[-2, 0], [1, -2]],
     "exponents": [[{"block": "L", "rows": 2, "cols": 2}]]}

Rationals are written as ints when integral and as ``"num/den"`` strings
otherwise. ``basis`` and ``generators`` are lists of columns. Exponent
matrices are lists of block rows in grid order; dense blocks carry
``bits`` as a list of rows.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .errors import DimensionMismatch, EmptyInput, InvalidArgument, ParseError
from .representations import (
    Block,
    CRep,
    ExponentMatrix,
    MRep,
    VRep,
    ZRep,
    as_matrix,
)

SCHEMA_VERSION = 1
KINDS = ("vrep", "mrep", "crep", "zrep")
_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"expected an integer or a 'num/den' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if m:
            num, den = m.groups()
            if den is not None and int(den) == 0:
                raise ParseError(f"zero denominator in {value!r}")
            return Fraction(int(num), int(den) if den else 1)
    raise ParseError(f"not a rational: {value!r}")


def format_rational(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vector(value, what: str):
    if not isinstance(value, list):
        raise ParseError(f"{what} must be a list")
    return tuple(parse_rational(v) for v in value)


def _vectors(value, what: str):
    if not isinstance(value, list):
        raise ParseError(f"{what} must be a list of vectors")
    return tuple(_vector(v, what) for v in value)


def _block_to_json(b: Block) -> dict:
    out = {"block": b.kind, "rows": b.rows, "cols": b.cols}
    if b.kind == "dense":
        out["bits"] = [list(r) for r in b.bits]
    return out


def _block_from_json(obj) -> Block:
    try:
        kind = obj["block"]
        rows, cols = obj["rows"], obj["cols"]
        bits = obj.get("bits")
        if not isinstance(rows, int) or not isinstance(cols, int):
            raise ParseError("block sizes must be integers")
        if bits is not None:
            bits = tuple(tuple(int(b) for b in r) for r in bits)
        return Block(kind, rows, cols, bits)
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed exponent block: {obj!r}") from exc
    except InvalidArgument as exc:
        raise ParseError(str(exc)) from exc


def exponents_to_json(e: ExponentMatrix) -> list:
    return [[_block_to_json(b) for b in row] for row in e.grid]


def exponents_from_json(obj, cols: int) -> ExponentMatrix:
    if obj is None:
        return ExponentMatrix.empty(cols)
    if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
        raise ParseError("exponents must be a list of block rows")
    try:
        return ExponentMatrix(tuple(tuple(_block_from_json(b) for b in row) for row in obj))
    except InvalidArgument as exc:
        raise ParseError(str(exc)) from exc


def to_document(rep) -> dict:
    fmt = lambda v: [format_rational(x) for x in v]  # noqa: E731
    if isinstance(rep, VRep):
        return {"schemaVersion": SCHEMA_VERSION, "kind": "vrep", "points": [fmt(p) for p in rep.points]}
    if isinstance(rep, MRep):
        return {
            "schemaVersion": SCHEMA_VERSION,
            "kind": "mrep",
            "start": fmt(rep.start),
            "basis": [fmt(b) for b in rep.basis],
            "exponents": exponents_to_json(rep.exponents),
        }
    if isinstance(rep, CRep):
        return {
            "schemaVersion": SCHEMA_VERSION,
            "kind": "crep",
            "start": fmt(rep.start),
            "basis": [fmt(b) for b in rep.basis],
            "end": fmt(rep.end),
        }
    if isinstance(rep, ZRep):
        return {
            "schemaVersion": SCHEMA_VERSION,
            "kind": "zrep",
            "center": fmt(rep.center),
            "generators": [fmt(g) for g in rep.generators],
            "exponents": exponents_to_json(rep.exponents),
        }
    raise TypeError(f"cannot serialize {type(rep).__name__}")


def from_document(doc: dict):
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    version = doc.get("schemaVersion", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ParseError(f"unsupported schemaVersion {version!r}")
    kind = doc.get("kind")
    try:
        if kind == "vrep":
            return VRep(_vectors(doc.get("points"), "points"))
        if kind == "mrep":
            basis = _vectors(doc.get("basis", []), "basis")
            return MRep(
                _vector(doc.get("start"), "start"),
                basis,
                exponents_from_json(doc.get("exponents"), len(basis)),
            )
        if kind == "crep":
            basis = _vectors(doc.get("basis", []), "basis")
            start = _vector(doc.get("start"), "start")
            return CRep(start, basis, _vector(doc.get("end"), "end"))
        if kind == "zrep":
            gens = _vectors(doc.get("generators", []), "generators")
            return ZRep(
                _vector(doc.get("center"), "center"),
                gens,
                exponents_from_json(doc.get("exponents"), len(gens)),
            )
    except InvalidArgument as exc:
        raise ParseError(str(exc)) from exc
    except DimensionMismatch as exc:
        raise ParseError(f"inconsistent dimensions: {exc}") from exc
    except EmptyInput:
        raise
    raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def dumps(rep) -> str:
    return json.dumps(to_document(rep), indent=2) + "\n"


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def save(rep, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(rep))


def load_matrix(path):
    """Read a linear map: either ``{"kind": "matrix", "rows": [...]}`` or a bare list of rows."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    rows = doc.get("rows") if isinstance(doc, dict) else doc
    if not isinstance(rows, list) or not rows or any(not isinstance(r, list) for r in rows):
        raise ParseError("matrix must be a non-empty list of rows")
    try:
        return as_matrix(tuple(parse_rational(x) for x in r) for r in rows)
    except DimensionMismatch as exc:
        raise ParseError(str(exc)) from exc
