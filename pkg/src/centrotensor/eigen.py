"""Real H-eigenpairs of small dense tensors.

A pair (lambda, x) with x != 0 is an H-eigenpair of an order-m tensor A
when A x^{m-1} = lambda * x^{[m-1]} componentwise, where x^{[p]} is the
componentwise power.  Both sides scale like t^{m-1} under x -> t*x, so
eigenvectors are canonicalized to unit Euclidean norm with the first
significant component positive.

Contents:

* residual and vector-symmetry classification,
* closed-form pairs for centrosymmetric tensors of dimension 2 (both
  the all-ones and the alternating-sign eigenvector) and of dimension 3
  with even order (the (1, 0, -1) eigenvector),
* a multistart damped-Newton solver for general desk-scale tensors,
* reflection of a pair through the exchange matrix: for a centro tensor
  (lambda, Jx) is again a pair, for a skew tensor (-lambda, Jx) is.

The solver gives no completeness guarantee: multistart Newton can miss
pairs, which is why EigenSet carries solver statistics and why tests
phrase coverage as a success-rate floor rather than totality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .core import ConsistencyError, DenseTensor, apply, flip_vector, power_vector
from .structure import NEITHER, check_structure

__all__ = [
    "SYMMETRIC",
    "SKEW_SYMMETRIC",
    "ABS_SYMMETRIC",
    "NEITHER_CLASS",
    "DEFAULT_CLASS_TOL",
    "DEFAULT_SOLVER_TOL",
    "EigenPair",
    "SolverStats",
    "EigenSet",
    "residual",
    "classify_vector",
    "normalize_eigenvector",
    "closed_form_dim2",
    "closed_form_dim3_even",
    "solve_eigen",
    "reflect_pair",
]

SYMMETRIC = "symmetric"
SKEW_SYMMETRIC = "skew-symmetric"
ABS_SYMMETRIC = "abs-symmetric"
NEITHER_CLASS = "neither"

DEFAULT_CLASS_TOL = 1e-8
DEFAULT_SOLVER_TOL = 1e-10
DEDUP_VALUE_TOL = 1e-8
DEDUP_VECTOR_TOL = 1e-6

# Desk-scale bounds for the dense multistart solver.
MAX_SOLVER_DIM = 8
MAX_SOLVER_ORDER = 5

_SIGN_EPS = 1e-10


@dataclass(frozen=True, eq=False)
class EigenPair:
    value: float
    vector: np.ndarray
    residual: float
    classification: str

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "vector": self.vector.tolist(),
            "residual": self.residual,
            "classification": self.classification,
        }


@dataclass(frozen=True)
class SolverStats:
    attempted: int
    converged: int
    deduplicated: int

    def as_dict(self) -> dict:
        return {
            "attempted": self.attempted,
            "converged": self.converged,
            "deduplicated": self.deduplicated,
        }


@dataclass(frozen=True, eq=False)
class EigenSet:
    pairs: list
    stats: SolverStats

    def values(self) -> list:
        return [p.value for p in self.pairs]

    def as_dict(self) -> dict:
        return {
            "pairs": [p.as_dict() for p in self.pairs],
            "stats": self.stats.as_dict(),
        }


def residual(a: DenseTensor, value: float, x) -> float:
    """Max componentwise deviation of A x^{m-1} from value * x^{[m-1]}."""
    x = np.asarray(x, dtype=float)
    if not np.any(x):
        raise ValueError("eigenvector must be nonzero")
    return float(np.max(np.abs(apply(a, x) - value * power_vector(x, a.order - 1))))


def classify_vector(x, tol: float = DEFAULT_CLASS_TOL) -> str:
    """Symmetry class of a vector under component reversal.

    Tests Jx = x, Jx = -x, then J|x| = |x|, in that priority.
    """
    x = np.asarray(x, dtype=float)
    if not np.any(x):
        raise ValueError("cannot classify the zero vector")
    jx = x[::-1]
    if float(np.max(np.abs(x - jx))) <= tol:
        return SYMMETRIC
    if float(np.max(np.abs(x + jx))) <= tol:
        return SKEW_SYMMETRIC
    ax = np.abs(x)
    if float(np.max(np.abs(ax - ax[::-1]))) <= tol:
        return ABS_SYMMETRIC
    return NEITHER_CLASS


def normalize_eigenvector(x) -> np.ndarray:
    """Unit Euclidean norm, first significant component positive."""
    x = np.asarray(x, dtype=float)
    nrm = float(np.linalg.norm(x))
    if nrm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    x = x / nrm
    for comp in x:
        if abs(comp) > _SIGN_EPS:
            if comp < 0:
                x = -x
            break
    return x


def _make_pair(a: DenseTensor, value: float, x: np.ndarray, class_tol: float) -> EigenPair:
    x = normalize_eigenvector(x)
    return EigenPair(float(value), x, residual(a, value, x), classify_vector(x, class_tol))


def _require_centro(a: DenseTensor):
    if not check_structure(a).is_centro:
        raise ValueError("tensor is not centrosymmetric")


def _sign_weights(u: np.ndarray, count: int) -> np.ndarray:
    return reduce(np.multiply.outer, [u] * count)


def closed_form_dim2(a: DenseTensor, class_tol: float = DEFAULT_CLASS_TOL):
    """Two guaranteed pairs of a centro tensor with dimension 2.

    The leading-slice sum is an eigenvalue with eigenvector (1, 1), and
    the alternating-sign leading-slice sum is one with eigenvector
    (1, -1).  Returns (symmetric pair, skew-symmetric pair).
    """
    if a.dim != 2:
        raise ValueError("closed form requires dimension 2")
    if a.order < 2:
        raise ValueError("tensor order must be >= 2")
    _require_centro(a)
    lead = a.data[0]
    lam_e = float(lead.sum())
    alt = _sign_weights(np.array([1.0, -1.0]), a.order - 1)
    lam_u = float((lead * alt).sum())
    pair_e = _make_pair(a, lam_e, np.array([1.0, 1.0]), class_tol)
    pair_u = _make_pair(a, lam_u, np.array([1.0, -1.0]), class_tol)
    return pair_e, pair_u


def closed_form_dim3_even(a: DenseTensor, class_tol: float = DEFAULT_CLASS_TOL) -> EigenPair:
    """Guaranteed skew-symmetric pair of an even-order centro tensor, dim 3.

    The eigenvector is (1, 0, -1); its eigenvalue is the signed sum of
    the leading-slice entries whose trailing indices avoid the middle,
    each weighted by (-1) to the number of indices hitting the last
    position.
    """
    if a.dim != 3:
        raise ValueError("closed form requires dimension 3")
    if a.order < 2 or a.order % 2 == 1:
        raise ValueError("closed form requires even tensor order")
    _require_centro(a)
    weights = _sign_weights(np.array([1.0, 0.0, -1.0]), a.order - 1)
    lam = float((a.data[0] * weights).sum())
    return _make_pair(a, lam, np.array([1.0, 0.0, -1.0]), class_tol)


def _apply_raw(data: np.ndarray, x: np.ndarray, order: int) -> np.ndarray:
    out = data
    for _ in range(order - 1):
        out = out.dot(x)
    return out


def _apply_jacobian(data: np.ndarray, x: np.ndarray, order: int) -> np.ndarray:
    """Jacobian of x -> A x^{m-1}: sum over which trailing slot stays free."""
    total = None
    for t in range(1, order):
        part = data
        for _ in range(order - 1 - t):
            part = part.dot(x)
        for _ in range(t - 1):
            part = np.tensordot(part, x, axes=(1, 0))
        total = part if total is None else total + part
    return total


def solve_eigen(
    a: DenseTensor,
    starts: int = 100,
    seed=0,
    tol: float = DEFAULT_SOLVER_TOL,
    max_iter: int = 100,
    class_tol: float = DEFAULT_CLASS_TOL,
    value_tol: float = DEDUP_VALUE_TOL,
    vector_tol: float = DEDUP_VECTOR_TOL,
) -> EigenSet:
    """Multistart damped Newton on the eigenpair system.

    Solves F(x, lambda) = (A x^{m-1} - lambda x^{[m-1]}, |x|^2 - 1) = 0
    from `starts` random unit starting vectors.  Steps are halved while
    they fail to decrease the sup-norm of F; convergence is declared at
    max|F| <= tol.  Converged pairs are canonicalized, re-verified
    against the residual bound, sorted by (value, components) and
    deduplicated: two pairs merge when their values differ by at most
    value_tol and their vectors agree up to sign within vector_tol.

    An empty result is legal; completeness is not guaranteed.
    """
    n, m = a.dim, a.order
    if m < 2:
        raise ValueError("eigen solving requires tensor order >= 2")
    if n > MAX_SOLVER_DIM or m > MAX_SOLVER_ORDER:
        raise ValueError(
            f"solver is desk-scale only (dim <= {MAX_SOLVER_DIM}, order <= {MAX_SOLVER_ORDER})"
        )
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    data = a.data

    def residual_vec(x, lam):
        return np.append(_apply_raw(data, x, m) - lam * x ** (m - 1), x @ x - 1.0)

    raw = []
    converged = 0
    for _ in range(starts):
        x = rng.normal(size=n)
        x /= np.linalg.norm(x)
        xp = x ** (m - 1)
        lam = float(xp @ _apply_raw(data, x, m)) / float(xp @ xp)
        f = residual_vec(x, lam)
        best = float(np.max(np.abs(f)))
        ok = best <= tol
        for _ in range(max_iter):
            if ok:
                break
            jac = np.zeros((n + 1, n + 1))
            jac[:n, :n] = _apply_jacobian(data, x, m)
            jac[:n, :n] -= lam * (m - 1) * np.diag(x ** (m - 2))
            jac[:n, n] = -(x ** (m - 1))
            jac[n, :n] = 2.0 * x
            try:
                step = np.linalg.solve(jac, -f)
            except np.linalg.LinAlgError:
                step = np.linalg.lstsq(jac, -f, rcond=None)[0]
            if not np.all(np.isfinite(step)):
                break
            damp = 1.0
            accepted = False
            while damp >= 2.0**-16:
                x_new = x + damp * step[:n]
                lam_new = lam + damp * step[n]
                f_new = residual_vec(x_new, lam_new)
                norm_new = float(np.max(np.abs(f_new)))
                if norm_new < best:
                    x, lam, f, best = x_new, lam_new, f_new, norm_new
                    accepted = True
                    break
                damp *= 0.5
            if not accepted:
                break
            ok = best <= tol
        if not ok:
            continue
        try:
            x = normalize_eigenvector(x)
        except ValueError:
            continue
        res = residual(a, lam, x)
        if res <= tol:
            converged += 1
            raw.append((float(lam), x, res))

    raw.sort(key=lambda item: (item[0], tuple(item[1])))
    kept = []
    for lam, x, res in raw:
        merged = False
        for i, (klam, kx, kres) in enumerate(kept):
            if abs(lam - klam) <= value_tol and (
                min(np.linalg.norm(x - kx), np.linalg.norm(x + kx)) <= vector_tol
            ):
                if res < kres:
                    kept[i] = (lam, x, res)
                merged = True
                break
        if not merged:
            kept.append((lam, x, res))

    pairs = [
        EigenPair(lam, x, res, classify_vector(x, class_tol)) for lam, x, res in kept
    ]
    stats = SolverStats(attempted=starts, converged=converged, deduplicated=converged - len(kept))
    return EigenSet(pairs=pairs, stats=stats)


def reflect_pair(a: DenseTensor, pair: EigenPair, tol: float = DEFAULT_SOLVER_TOL) -> EigenPair:
    """Mirror an eigenpair through the exchange matrix.

    For a centro tensor the reflected vector keeps the eigenvalue; for a
    skew tensor it carries the negated one.  The returned pair is
    re-verified, and a failure raises ConsistencyError since it would
    contradict an identity that holds exactly in real arithmetic.
    """
    report = check_structure(a)
    if report.verdict == NEITHER:
        raise ValueError("tensor is neither centro nor skew")
    value = pair.value if report.is_centro else -pair.value
    jx = normalize_eigenvector(flip_vector(pair.vector))
    res = residual(a, value, jx)
    if res > tol:
        raise ConsistencyError(
            f"reflected pair has residual {res:.3e} > tol {tol:.3e}; "
            "the structure reflection identity failed"
        )
    return EigenPair(float(value), jx, res, classify_vector(jx))
