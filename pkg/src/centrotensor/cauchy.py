"""Cauchy tensors built from a generating vector.

An order-m Cauchy tensor over c in R^n has entries
1 / (c_{i1} + ... + c_{im}).  The entry exists only when no m-fold index
sum of c vanishes; construction scans every multiset of m components and
fails loudly on a (near-)zero sum instead of emitting huge entries.

Structure facts encoded here: the tensor is centrosymmetric exactly when
c is a palindrome, skew-centrosymmetric (even n only) exactly when c is
an anti-palindrome, and there is no odd-dimension skew case because the
central entry would have to be zero while being a reciprocal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement

import numpy as np

from .core import DenseTensor, DomainError, entry_scale, flip_vector
from .product import exchange_matrix, shao_product
from .structure import DEFAULT_TOL_FACTOR

__all__ = [
    "CauchySpecError",
    "CauchySpec",
    "NEAR_ZERO_FACTOR",
    "validate_spec",
    "materialize",
    "cauchy_is_centro",
    "cauchy_is_skew",
    "cauchy_check_JC",
    "palindromize",
]

# An index sum smaller than this (times the component scale) is treated
# as a vanishing denominator.
NEAR_ZERO_FACTOR = 1e-14


class CauchySpecError(DomainError):
    """The generating vector has a vanishing m-fold index sum."""


@dataclass(frozen=True, eq=False)
class CauchySpec:
    """Generating vector plus tensor order; the tensor itself stays lazy."""

    generating: np.ndarray
    order: int

    def __post_init__(self):
        c = np.ascontiguousarray(self.generating, dtype=float)
        if c.ndim != 1 or c.size < 1:
            raise ValueError("generating vector must be a nonempty 1-D array")
        if not np.all(np.isfinite(c)):
            raise ValueError("generating vector must be finite")
        if self.order < 1:
            raise ValueError("order must be positive")
        c.flags.writeable = False
        object.__setattr__(self, "generating", c)

    @property
    def dim(self) -> int:
        return self.generating.size


def _component_scale(c: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(c))))


def validate_spec(spec: CauchySpec) -> None:
    """Scan all multisets of m components; reject any near-zero sum.

    The sum of an index tuple depends only on its multiset, so scanning
    combinations with replacement covers every entry.
    """
    c = spec.generating
    threshold = NEAR_ZERO_FACTOR * _component_scale(c)
    for combo in combinations_with_replacement(range(spec.dim), spec.order):
        s = float(c[list(combo)].sum())
        if abs(s) < threshold:
            ones_based = tuple(i + 1 for i in combo)
            raise CauchySpecError(
                f"index sum {s!r} for multiset {ones_based} is below "
                f"threshold {threshold!r}; entries do not exist"
            )


def materialize(spec: CauchySpec) -> DenseTensor:
    """Build the dense tensor of reciprocals of m-fold component sums.

    The result is fully symmetric (invariant under any index
    permutation) since each entry depends only on the index multiset.
    """
    validate_spec(spec)
    sums = reduce(np.add.outer, [spec.generating] * spec.order)
    return DenseTensor(1.0 / sums)


def cauchy_is_centro(spec: CauchySpec, tol: float | None = None) -> bool:
    """Vector-level test: the tensor is centro iff c is a palindrome."""
    c = spec.generating
    if tol is None:
        tol = DEFAULT_TOL_FACTOR * _component_scale(c)
    return float(np.max(np.abs(c - flip_vector(c)))) <= tol


def cauchy_is_skew(spec: CauchySpec, tol: float | None = None) -> bool:
    """Vector-level test: skew iff c is an anti-palindrome and n is even.

    Odd n returns False unconditionally (the central entry 1/(m c_i)
    would have to vanish).  A passing vector test does not guarantee the
    tensor exists; materialize() still scans for vanishing sums.
    """
    c = spec.generating
    if spec.dim % 2 == 1:
        return False
    if tol is None:
        tol = DEFAULT_TOL_FACTOR * _component_scale(c)
    return float(np.max(np.abs(c + flip_vector(c)))) <= tol


def cauchy_check_JC(spec: CauchySpec, tol: float | None = None) -> bool:
    """Product-level centro test: both J*C and C*J reproduce C.

    Materializes the tensor, so construction errors propagate.  Agrees
    with cauchy_is_centro on every valid spec.
    """
    c_tensor = materialize(spec)
    if tol is None:
        tol = DEFAULT_TOL_FACTOR * entry_scale(c_tensor)
    j = exchange_matrix(spec.dim)
    jc = shao_product(j, c_tensor)
    cj = shao_product(c_tensor, j)
    dev = max(
        float(np.max(np.abs(jc.data - c_tensor.data))),
        float(np.max(np.abs(cj.data - c_tensor.data))),
    )
    return dev <= tol


def palindromize(c) -> np.ndarray:
    """Mirror the first half of a vector onto the second, making Jc = c."""
    out = np.asarray(c, dtype=float).copy()
    n = out.size
    for i in range(n // 2):
        out[n - 1 - i] = out[i]
    return out
