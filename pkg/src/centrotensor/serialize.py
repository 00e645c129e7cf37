"""JSON interchange for tensors, vectors and generating-vector specs.

Formats:

* tensor  {"order": m, "dim": n, "entries": [n^m reals, row-major,
  last index fastest]}
* vector  {"dim": n, "components": [n reals]}
* cauchy spec  {"order": m, "generating": [n reals]}

Output numbers are printed with 17 significant digits, which is
round-trip safe for float64 and makes repeated runs byte-identical.
"""

from __future__ import annotations

import json

import numpy as np

from .cauchy import CauchySpec
from .core import DenseTensor

__all__ = [
    "dumps",
    "tensor_to_obj",
    "tensor_from_obj",
    "vector_to_obj",
    "vector_from_obj",
    "spec_to_obj",
    "spec_from_obj",
]


def _format_value(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple, np.ndarray)):
        items = ", ".join(_format_value(v) for v in value)
        return f"[{items}]"
    if isinstance(value, dict):
        items = ", ".join(
            f"{json.dumps(str(k))}: {_format_value(v)}" for k, v in value.items()
        )
        return "{" + items + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(obj) -> str:
    """Deterministic JSON text with fixed-precision floats."""
    return _format_value(obj)


def tensor_to_obj(a: DenseTensor) -> dict:
    return {"order": a.order, "dim": a.dim, "entries": a.entries.tolist()}


def _require_int(obj: dict, key: str) -> int:
    if key not in obj:
        raise ValueError(f"missing key {key!r}")
    value = obj[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"key {key!r} must be a positive integer")
    return value


def _require_numbers(obj: dict, key: str) -> list:
    if key not in obj:
        raise ValueError(f"missing key {key!r}")
    values = obj[key]
    if not isinstance(values, list) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in values
    ):
        raise ValueError(f"key {key!r} must be a list of numbers")
    return values


def tensor_from_obj(obj) -> DenseTensor:
    if not isinstance(obj, dict):
        raise ValueError("tensor JSON must be an object")
    order = _require_int(obj, "order")
    dim = _require_int(obj, "dim")
    entries = _require_numbers(obj, "entries")
    return DenseTensor.from_entries(order, dim, entries)


def vector_to_obj(x) -> dict:
    x = np.asarray(x, dtype=float)
    return {"dim": int(x.size), "components": x.tolist()}


def vector_from_obj(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise ValueError("vector JSON must be an object")
    dim = _require_int(obj, "dim")
    components = _require_numbers(obj, "components")
    if len(components) != dim:
        raise ValueError(f"expected {dim} components, got {len(components)}")
    return np.asarray(components, dtype=float)


def spec_to_obj(spec: CauchySpec) -> dict:
    return {"order": spec.order, "generating": spec.generating.tolist()}


def spec_from_obj(obj) -> CauchySpec:
    if not isinstance(obj, dict):
        raise ValueError("cauchy spec JSON must be an object")
    order = _require_int(obj, "order")
    generating = _require_numbers(obj, "generating")
    return CauchySpec(np.asarray(generating, dtype=float), order)
