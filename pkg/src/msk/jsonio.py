"""JSON codecs for zeros, matrices, instances and certificates.

Matrices are serialized as row-major [re, im] pairs.  Python's float repr
is shortest-round-trip, so every float64 survives write/read bit-exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .blaschke import BlaschkeProduct, zeros_from_json, zeros_to_json
from .errors import ParseError
from .modelspace import C0Instance, ModelOperator

FORMAT_VERSION = "1"


def matrix_to_json(a: np.ndarray) -> dict:
    a = np.asarray(a, dtype=complex)
    n, m = a.shape
    flat = a.reshape(-1)
    return {
        "rows": n,
        "cols": m,
        "entries": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    try:
        n, m = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed matrix record: {exc}") from exc
    if len(entries) != n * m:
        raise ParseError(f"matrix record claims {n}x{m} but has {len(entries)} entries")
    flat = np.array([complex(re, im) for re, im in entries], dtype=complex)
    return flat.reshape(n, m)


def instance_to_json(inst: C0Instance) -> dict:
    return {
        "formatVersion": FORMAT_VERSION,
        "theta": zeros_to_json(inst.theta),
        "matrix": matrix_to_json(inst.matrix),
        "provenance": inst.provenance,
    }


def instance_from_json(obj: dict) -> C0Instance:
    try:
        theta = zeros_from_json(obj["theta"])
        matrix = matrix_from_json(obj["matrix"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed instance record: {exc}") from exc
    return C0Instance(matrix=matrix, theta=theta, provenance=dict(obj.get("provenance", {})))


def model_to_json(op: ModelOperator) -> dict:
    return {
        "formatVersion": FORMAT_VERSION,
        "theta": zeros_to_json(op.theta),
        "basis": op.basis,
        "matrix": matrix_to_json(op.matrix),
    }


def zeros_file_to_product(path) -> BlaschkeProduct:
    """Read a zeros JSON file: a list of {re, im, mult} records."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read zeros file {path}: {exc}") from exc
    if not isinstance(data, list):
        raise ParseError(f"zeros file {path} must hold a JSON array")
    try:
        return zeros_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed zeros file {path}: {exc}") from exc


def family_file_to_products(path) -> list[BlaschkeProduct]:
    """Read a family JSON file: an array of zero-arrays."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read family file {path}: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(x, list) for x in data):
        raise ParseError(f"family file {path} must hold an array of zero-arrays")
    try:
        return [zeros_from_json(rec) for rec in data]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed family file {path}: {exc}") from exc


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def dump_json(obj, path=None, indent: int = 2) -> str:
    text = json.dumps(obj, indent=indent, sort_keys=False, allow_nan=False)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
