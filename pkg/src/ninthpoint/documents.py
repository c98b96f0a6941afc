"""Wire formats: the points document and the compute response.

A points document is JSON of the shape

    {"points": [["x1", "y1", "z1"], ..., ["x8", "y8", "z8"]]}

where every coordinate is a string holding an exact rational: a decimal
integer ("7", "-12"), a fraction ("22/7"), or a finite decimal ("3.25",
parsed exactly in base ten).  Floats never enter the pipeline; clients
with binary-float coordinates are expected to serialize them exactly.

Responses separate a deterministic `result` payload (canonical for
byte-identical replay) from a `meta` block holding wall-clock timings.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import right_nullspace
from .ninth import METHODS, certify_p9, degeneracy_report, ninth_point
from .projective import Config8, cubic_row

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+|\.\d+)?$")


class DocumentError(ValueError):
    """Malformed points document; `field` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message


def parse_rational(text: str, field: str) -> Fraction:
    if not isinstance(text, str):
        raise DocumentError(field, f"coordinate must be a string, got {type(text).__name__}")
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise DocumentError(field, f"not an exact rational literal: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(field, str(exc)) from exc


def parse_points_document(doc: object) -> Config8:
    if not isinstance(doc, dict):
        raise DocumentError("$", "document must be a JSON object")
    points = doc.get("points")
    if not isinstance(points, list):
        raise DocumentError("points", "missing or not an array")
    if len(points) != 8:
        raise DocumentError("points", f"exactly 8 points required, got {len(points)}")
    coords = []
    for i, triple in enumerate(points, start=1):
        if not isinstance(triple, list) or len(triple) != 3:
            raise DocumentError(f"points[{i}]", "each point is an array of 3 strings")
        parsed = tuple(
            parse_rational(v, f"points[{i}][{axis}]")
            for v, axis in zip(triple, "xyz")
        )
        if all(v == 0 for v in parsed):
            raise DocumentError(f"points[{i}]", "the zero triple is not a projective point")
        coords.append(parsed)
    return Config8.from_coords(coords)


def serialize_points_document(c: Config8) -> dict:
    return {"points": [[str(v) for v in p.coords()] for p in c.points]}


def _point_json(p) -> list[str]:
    return [str(v) for v in p.coords()]


def handle_compute(
    c: Config8, method: str = "det", triple: Optional[Sequence[int]] = None
) -> dict:
    """Deterministic compute payload for one configuration.

    Degenerate geometry is an answer, not an error: the payload then omits
    p9 (and the cubic basis if the pencil itself degenerates) and the
    degeneracy report says why.
    """
    if method not in METHODS:
        raise DocumentError("method", f"unknown method {method!r}, expected one of {METHODS}")
    report = degeneracy_report(c)
    basis_vectors = right_nullspace([cubic_row(p) for p in c.points])
    pencil_ok = len(basis_vectors) == 2
    result: dict = {
        "method": method,
        "method_used": None,
        "triple": None,
        "degeneracy": report.to_json(),
        "pencil_nullity": len(basis_vectors),
        "cubic_basis": [[str(x) for x in v] for v in basis_vectors] if pencil_ok else None,
        "p9": None,
        "zero_vector": False,
        "certification": None,
        "counters": {},
    }

    outcome = ninth_point(c, method, triple)
    result["method_used"] = outcome.method_used
    result["triple"] = list(outcome.triple) if outcome.triple else None
    result["zero_vector"] = outcome.zero_vector
    if outcome.fano_evaluations is not None:
        result["counters"]["fano_evaluations"] = outcome.fano_evaluations
    # A point is only claimed when the pencil is an honest pencil; it is
    # then certified against that pencil.
    if outcome.point is not None and pencil_ok:
        result["p9"] = _point_json(outcome.point)
        result["certification"] = certify_p9(c, outcome.point).to_json()
    return result


def handle_degeneracy(c: Config8) -> dict:
    return {"degeneracy": degeneracy_report(c).to_json()}


def canonical_json(obj: object) -> str:
    """Canonical serialization: sorted keys, fixed separators, newline end."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"
