"""Dense hypercubic tensors and the contraction/elementwise algebra on them.

An order-m dimension-n tensor is stored as an ndarray of shape (n,)*m in
C order, so the flat entry layout has the last index varying fastest.
Indices are 1-based in documentation and reports, 0-based internally.

All operations are pure: they never mutate their inputs and return fresh
values, so tensors are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DenseTensor",
    "DomainError",
    "ResourceLimitError",
    "ConsistencyError",
    "flip_vector",
    "reverse_tensor",
    "apply",
    "poly_eval",
    "power_vector",
    "hadamard",
    "row_sums",
    "add",
    "sub",
    "scale",
    "max_abs",
    "entry_scale",
]


class DomainError(Exception):
    """An operation is well-posed but has no valid answer for this input."""


class ResourceLimitError(DomainError):
    """A result would exceed the configured memory budget."""


class ConsistencyError(DomainError):
    """An identity that must hold by construction failed verification."""


@dataclass(frozen=True, eq=False)
class DenseTensor:
    """Immutable order-m dimension-n real tensor backed by a dense ndarray.

    Construction validates that the array is hypercubic (every axis has
    the same length) and that all entries are finite; every downstream
    check is tolerance-based, so NaN/Inf entries are rejected outright.
    """

    data: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.data, dtype=float)
        if arr.ndim < 1:
            raise ValueError("tensor order must be at least 1")
        n = arr.shape[0]
        if n < 1 or any(s != n for s in arr.shape):
            raise ValueError(f"tensor must be hypercubic, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("tensor entries must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    @property
    def order(self) -> int:
        return self.data.ndim

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Flat row-major view (last index fastest), read-only."""
        return self.data.reshape(-1)

    @classmethod
    def from_entries(cls, order: int, dim: int, entries) -> "DenseTensor":
        flat = np.asarray(entries, dtype=float).reshape(-1)
        if flat.size != dim**order:
            raise ValueError(
                f"expected {dim**order} entries for order {order} dim {dim}, got {flat.size}"
            )
        return cls(flat.reshape((dim,) * order))

    @classmethod
    def zeros(cls, order: int, dim: int) -> "DenseTensor":
        return cls(np.zeros((dim,) * order))

    @classmethod
    def identity(cls, order: int, dim: int) -> "DenseTensor":
        """Delta tensor: 1 where all indices coincide, 0 elsewhere."""
        data = np.zeros((dim,) * order)
        data[(np.arange(dim),) * order] = 1.0
        return cls(data)

    def __repr__(self):
        return f"DenseTensor(order={self.order}, dim={self.dim})"


def _check_same_shape(a: DenseTensor, b: DenseTensor):
    if a.order != b.order or a.dim != b.dim:
        raise ValueError(
            f"shape mismatch: order {a.order} dim {a.dim} vs order {b.order} dim {b.dim}"
        )


def _check_vector(a: DenseTensor, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size != a.dim:
        raise ValueError(f"vector of length {a.dim} required, got shape {x.shape}")
    return x


def flip_vector(x) -> np.ndarray:
    """Reverse the component order of a vector. Exact involution."""
    x = np.asarray(x, dtype=float)
    return x[::-1].copy()


def reverse_tensor(a: DenseTensor) -> DenseTensor:
    """Replace every index i_j by n-i_j+1.

    On the flat row-major layout the full index reversal is exactly a
    reversal of the entry array, so this is a bit-identical involution.
    """
    return DenseTensor(a.entries[::-1].reshape(a.data.shape))


def apply(a: DenseTensor, x) -> np.ndarray:
    """Contract all trailing slots with x: result_i = sum a[i,i2..im] x_i2...x_im."""
    if a.order < 2:
        raise ValueError("apply requires tensor order >= 2")
    x = _check_vector(a, x)
    out = a.data
    for _ in range(a.order - 1):
        out = out.dot(x)
    return out


def poly_eval(a: DenseTensor, x) -> float:
    """Evaluate the homogeneous form sum a[i1..im] x_i1...x_im."""
    x = _check_vector(a, x)
    out = a.data
    for _ in range(a.order):
        out = out.dot(x)
    return float(out)


def power_vector(x, p: int) -> np.ndarray:
    """Componentwise p-th power."""
    return np.asarray(x, dtype=float) ** p


def hadamard(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    """Entrywise product of same-shape tensors."""
    _check_same_shape(a, b)
    return DenseTensor(a.data * b.data)


def row_sums(a: DenseTensor) -> np.ndarray:
    """r_i = sum of all entries whose leading index is i."""
    return a.data.reshape(a.dim, -1).sum(axis=1)


def add(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    _check_same_shape(a, b)
    return DenseTensor(a.data + b.data)


def sub(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    _check_same_shape(a, b)
    return DenseTensor(a.data - b.data)


def scale(a: DenseTensor, t: float) -> DenseTensor:
    return DenseTensor(a.data * float(t))


def max_abs(a: DenseTensor) -> float:
    return float(np.max(np.abs(a.data)))


def entry_scale(a: DenseTensor) -> float:
    """Tolerance scale: max(1, largest entry magnitude)."""
    return max(1.0, max_abs(a))
