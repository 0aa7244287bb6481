"""JSON formats: tuple files, witness files and result files (schema 1).

Tuple file::

    {"schema": 1, "field": {"kind": "rational"} | {"kind": "prime", "p": 101},
     "n": 2, "m": 1, "matrices": [[["1", "0"], ["0", "1/2"]]]}

Scalars are strings ("a/b", "-3") or JSON integers; floats are rejected.
Over GF(p) only canonical residues 0 <= x < p are accepted.
"""

from __future__ import annotations

import enum
import hashlib
import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .field import Field
from .nullcone import NullConeReport
from .tuples import MatTuple
from .witness import Witness, witness_from_json

SCHEMA = 1


class InputError(ValueError):
    """Malformed or inconsistent input file."""


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def tuple_to_json(X: MatTuple) -> dict:
    return {"schema": SCHEMA, "field": X.field.to_json(), "n": X.n, "m": X.m, "matrices": X.to_lists()}


def tuple_from_json(obj, field_override: Field | None = None, source: str = "<input>") -> MatTuple:
    if not isinstance(obj, dict):
        raise InputError(f"{source}: expected a JSON object")
    if obj.get("schema", SCHEMA) != SCHEMA:
        raise InputError(f"{source}: unsupported schema {obj.get('schema')!r}")
    try:
        declared = Field.from_json(obj["field"]) if "field" in obj else field_override
        if declared is None:
            raise InputError(f"{source}: no field given")
        mats = obj["matrices"]
        n = int(obj["n"])
        m = int(obj.get("m", len(mats)))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{source}: {exc}") from None
    if not isinstance(mats, list) or len(mats) != m:
        raise InputError(f"{source}: expected {m} matrices, found {len(mats) if isinstance(mats, list) else mats!r}")
    target = field_override or declared
    out = []
    for idx, M in enumerate(mats):
        if not isinstance(M, list) or len(M) != n or any(not isinstance(r, list) or len(r) != n for r in M):
            raise InputError(f"{source}: matrix {idx + 1} is not {n}x{n}")
        try:
            vals = [[declared.parse_scalar(x) for x in row] for row in M]
            out.append(target.array([[target(x) for x in row] for row in vals]))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{source}: matrix {idx + 1}: {exc}") from None
    return MatTuple(target, n, tuple(out))


def load_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON: {exc}") from None


def load_tuple(path, field_override: Field | None = None) -> MatTuple:
    return tuple_from_json(load_json(path), field_override, source=str(path))


def save_tuple(X: MatTuple, path):
    Path(path).write_text(dumps(tuple_to_json(X)))


def tuple_hash(X: MatTuple) -> str:
    """sha256 of the canonical serialisation, independent of file formatting."""
    return hashlib.sha256(json.dumps(tuple_to_json(X), sort_keys=True).encode()).hexdigest()


def load_witness(path) -> Witness:
    """Read a bare witness or the ``witness`` entry of a result file."""
    obj = load_json(path)
    if isinstance(obj, dict) and "variant" not in obj and "witness" in obj:
        obj = obj["witness"]
        if obj is None:
            raise InputError(f"{path}: result file carries no witness")
    try:
        return witness_from_json(obj)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def jsonable(obj, F: Field):
    """Convert library objects (arrays, witnesses, reports, scalars) into JSON data."""
    if isinstance(obj, Witness):
        return obj.to_json()
    if isinstance(obj, NullConeReport):
        return obj.to_json()
    if isinstance(obj, MatTuple):
        return obj.to_lists()
    if isinstance(obj, np.ndarray):
        return F.to_lists(obj) if obj.ndim == 2 else [jsonable(x, F) for x in obj]
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): jsonable(v, F) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x, F) for x in obj]
    if isinstance(obj, (bool, str)) or obj is None:
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")
