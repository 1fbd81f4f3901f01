"""JSON matrix-file schema shared by the CLI and the suite reports.

Real entries are plain numbers; complex entries are [re, im] pairs.
Serialization goes through ``repr``-style shortest round-trip floats, so
a write-then-read cycle reproduces entries bit-exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .linalg import Field, Matrix
from .norms import NormDescriptor, NormedElement, NormKind, operator_two, vector_p


def matrix_to_obj(m: Matrix) -> dict:
    if m.field is Field.REAL:
        entries = [[float(v) for v in row] for row in m.data]
    else:
        entries = [[[float(v.real), float(v.imag)] for v in row] for row in m.data]
    return {
        "field": m.field.value,
        "rows": m.rows,
        "cols": m.cols,
        "entries": entries,
    }


def matrix_from_obj(obj: dict) -> Matrix:
    field = Field(obj["field"])
    entries = obj["entries"]
    if field is Field.REAL:
        data = np.array(entries, dtype=np.float64)
    else:
        raw = np.array(entries, dtype=np.float64)
        if raw.ndim != 3 or raw.shape[2] != 2:
            raise ValueError("complex entries must be [re, im] pairs")
        data = raw[..., 0] + 1j * raw[..., 1]
    if data.ndim != 2 or data.shape != (obj["rows"], obj["cols"]):
        raise ValueError("entry grid does not match the declared dimensions")
    return Matrix(data, field)


def norm_to_obj(n: NormDescriptor) -> dict:
    obj: dict = {"kind": n.kind.value}
    if n.p is not None:
        obj["p"] = n.p
    return obj


def norm_from_obj(obj: dict) -> NormDescriptor:
    kind = NormKind(obj["kind"])
    return NormDescriptor(kind, obj.get("p"))


def element_to_obj(e: NormedElement) -> dict:
    obj = matrix_to_obj(e.value)
    obj["norm"] = norm_to_obj(e.norm)
    return obj


def element_from_obj(obj: dict, default_norm: NormDescriptor | None = None) -> NormedElement:
    """Matrix plus norm; a missing norm defaults to the operator norm for
    square matrices and the Euclidean vector norm for columns."""
    m = matrix_from_obj(obj)
    if "norm" in obj:
        descriptor = norm_from_obj(obj["norm"])
    elif default_norm is not None:
        descriptor = default_norm
    elif m.cols == 1:
        descriptor = vector_p(2.0)
    else:
        descriptor = operator_two()
    return NormedElement(m, descriptor)


def dumps(obj) -> str:
    """Deterministic JSON text (fixed separators, insertion order kept)."""
    return json.dumps(obj, separators=(", ", ": "), allow_nan=False)
