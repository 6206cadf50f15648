"""JSON file formats for matrices, colorings and quantum colorings.

Complex entries are ``[re, im]`` pairs; matrices are row-major lists of rows.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .chromatic import Coloring
from .quantum import QuantumColoring


class FormatError(ValueError):
    pass


def encode_matrix(m) -> list:
    a = np.asarray(m, dtype=complex)
    return [[[float(x.real), float(x.imag)] for x in row] for row in a]


def decode_matrix(entries, order: int | None = None) -> np.ndarray:
    try:
        a = np.asarray(entries, dtype=float)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad matrix entries: {exc}") from None
    if a.ndim != 3 or a.shape[2] != 2 or a.shape[0] != a.shape[1]:
        raise FormatError(f"matrix entries must have shape (n, n, 2), got {a.shape}")
    if order is not None and a.shape[0] != order:
        raise FormatError(f"declared order {order} but entries have order {a.shape[0]}")
    return a[..., 0] + 1j * a[..., 1]


def matrix_to_json(m) -> dict:
    a = np.asarray(m)
    return {"order": int(a.shape[0]), "entries": encode_matrix(a)}


def matrix_from_json(obj: dict) -> np.ndarray:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise FormatError("matrix object needs an 'entries' field")
    m = decode_matrix(obj["entries"], obj.get("order"))
    if not m.imag.any():
        return m.real
    return m


def coloring_to_json(col: Coloring) -> dict:
    return {"c": col.c, "assignment": list(col.assignment)}


def coloring_from_json(obj: dict) -> Coloring:
    if not isinstance(obj, dict) or "assignment" not in obj:
        raise FormatError("coloring object needs an 'assignment' field")
    assignment = obj["assignment"]
    if not isinstance(assignment, list):
        raise FormatError("'assignment' must be a list")
    for k in assignment:
        if k is not None and (not isinstance(k, int) or isinstance(k, bool)):
            raise FormatError(f"color {k!r} is not an integer")
    col = Coloring.from_assignment(assignment)
    c = obj.get("c", col.c)
    if not isinstance(c, int) or c < col.c:
        raise FormatError(f"declared c={c!r} is smaller than the colors used ({col.c})")
    return Coloring(col.assignment, c)


def quantum_to_json(qc: QuantumColoring) -> dict:
    return {
        "n": qc.n,
        "c": qc.c,
        "d": qc.d,
        "projectors": [[encode_matrix(p) for p in row] for row in qc.projectors],
    }


def quantum_from_json(obj: dict) -> QuantumColoring:
    if not isinstance(obj, dict) or "projectors" not in obj:
        raise FormatError("quantum coloring object needs a 'projectors' field")
    try:
        raw = np.asarray(obj["projectors"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad projector entries: {exc}") from None
    if raw.ndim != 5 or raw.shape[-1] != 2 or raw.shape[2] != raw.shape[3]:
        raise FormatError(f"projectors must have shape (n, c, d, d, 2), got {raw.shape}")
    n, c, d = raw.shape[:3]
    for key, actual in (("n", n), ("c", c), ("d", d)):
        if key in obj and obj[key] != actual:
            raise FormatError(f"declared {key}={obj[key]} but projectors give {actual}")
    return QuantumColoring(raw[..., 0] + 1j * raw[..., 1])


def is_quantum_json(obj) -> bool:
    return isinstance(obj, dict) and "projectors" in obj


def read_json(path: str | Path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def write_json(obj, path: str | Path | None = None) -> str:
    text = json.dumps(obj, separators=(",", ":")) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
