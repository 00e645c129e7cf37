"""Batch property suite: every structural identity run as a seeded check.

verify_all draws random instances per check and confirms the library's
structural identities hold at their declared tolerances: predicate
agreement, product and Hadamard parity, the centro/skew split, row-sum
and polynomial reflection, the Cauchy equivalences, inverse round trips
and eigenpair reflections.  Each check yields a pass/fail record with a
counterexample payload on failure.

The `corrupt` flag names one check whose outcome is deliberately
inverted.  It exists as a harness self-test: a corrupted run must report
a failure for exactly that check, proving that violations are detected
and propagated rather than silently swallowed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cauchy import (
    CauchySpec,
    CauchySpecError,
    cauchy_check_JC,
    cauchy_is_centro,
    cauchy_is_skew,
    materialize,
    palindromize,
)
from .core import ConsistencyError, DenseTensor, entry_scale, hadamard
from .eigen import (
    NEITHER_CLASS,
    SYMMETRIC,
    closed_form_dim2,
    closed_form_dim3_even,
    reflect_pair,
    solve_eigen,
)
from .inverse import (
    InverseResult,
    diagonal_left_inverse,
    diagonal_right_inverse,
    recover_order2_left_inverse,
    recover_order2_right_inverse,
)
from .product import shao_product, product_parity
from .serialize import tensor_to_obj
from .structure import (
    check_commutation,
    check_structure,
    check_via_J,
    decompose,
    random_structured,
    verify_poly_reflection,
    verify_row_sum_symmetry,
)

__all__ = ["CheckResult", "SuiteReport", "CHECK_NAMES", "verify_all"]

DEFAULT_TRIALS = 40


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    trials: int
    detail: str = ""
    counterexample: dict | None = None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "trials": self.trials,
            "detail": self.detail,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class SuiteReport:
    seed: int
    trials: int
    checks: list = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "all_passed": self.all_passed,
            "checks": [c.as_dict() for c in self.checks],
        }


def _fail(detail: str, **payload) -> tuple[bool, str, dict]:
    return False, detail, payload


def _counterexample_tensor(a: DenseTensor) -> dict:
    return {"tensor": tensor_to_obj(a)}


def _check_structure_agreement(rng, trials):
    kinds = ("centro", "skew", "general")
    for t in range(trials):
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 6))
        a = random_structured(order, dim, kinds[t % 3], rng)
        verdicts = {
            "direct": check_structure(a).verdict,
            "sandwich": check_via_J(a).verdict,
            "commutation": check_commutation(a).verdict,
        }
        if len(set(verdicts.values())) != 1:
            return _fail(f"verdicts disagree: {verdicts}", **_counterexample_tensor(a))
    return True, "", None


def _check_product_parity(rng, trials):
    kinds = ("centro", "skew")
    for t in range(trials):
        kind_a = kinds[int(rng.integers(0, 2))]
        kind_b = kinds[int(rng.integers(0, 2))]
        m = int(rng.integers(2, 5))
        k = int(rng.integers(2, 4))
        n = int(rng.integers(2, 5))
        a = random_structured(m, n, kind_a, rng)
        b = random_structured(k, n, kind_b, rng)
        prod = shao_product(a, b)
        expected = product_parity(kind_a, kind_b, m)
        report = check_structure(prod, 1e-10 * entry_scale(prod))
        got_ok = report.is_centro if expected == "centro" else report.is_skew
        if not got_ok:
            return _fail(
                f"product of {kind_a}(m={m}) and {kind_b}(k={k}) expected {expected}, "
                f"verdict {report.verdict}",
                left=tensor_to_obj(a),
                right=tensor_to_obj(b),
            )
    return True, "", None


def _check_hadamard_parity(rng, trials):
    kinds = ("centro", "skew")
    for t in range(trials):
        kind_a = kinds[int(rng.integers(0, 2))]
        kind_b = kinds[int(rng.integers(0, 2))]
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 6))
        a = random_structured(order, dim, kind_a, rng)
        b = random_structured(order, dim, kind_b, rng)
        expected = "centro" if kind_a == kind_b else "skew"
        report = check_structure(hadamard(a, b))
        got_ok = report.is_centro if expected == "centro" else report.is_skew
        if not got_ok:
            return _fail(
                f"entrywise product of {kind_a} and {kind_b} expected {expected}, "
                f"verdict {report.verdict}",
                left=tensor_to_obj(a),
                right=tensor_to_obj(b),
            )
    return True, "", None


def _check_decomposition(rng, trials):
    for t in range(trials):
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 6))
        a = random_structured(order, dim, "general", rng)
        parts = decompose(a)
        scale_a = entry_scale(a)
        if not check_structure(parts.centro, 1e-13 * scale_a).is_centro:
            return _fail("centro part fails its check", **_counterexample_tensor(a))
        if not check_structure(parts.skew, 1e-13 * scale_a).is_skew:
            return _fail("skew part fails its check", **_counterexample_tensor(a))
        err = float(np.max(np.abs(parts.reconstruct().data - a.data)))
        if err > 1e-14 * scale_a:
            return _fail(f"reconstruction error {err:.3e}", **_counterexample_tensor(a))
    return True, "", None


def _check_row_sums(rng, trials):
    for t in range(trials):
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 6))
        kind = "centro" if t % 2 == 0 else "skew"
        a = random_structured(order, dim, kind, rng)
        ok, witness = verify_row_sum_symmetry(a, assume=kind)
        if not ok:
            return _fail(f"row-sum reflection failed at row {witness}", **_counterexample_tensor(a))
    return True, "", None


def _check_poly_reflection(rng, trials):
    for t in range(trials):
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 6))
        kind = "centro" if t % 2 == 0 else "skew"
        a = random_structured(order, dim, kind, rng)
        if not verify_poly_reflection(a, trials=10, seed=rng):
            return _fail("polynomial reflection failed", **_counterexample_tensor(a))
    return True, "", None


def _random_spec(rng, flavor: str):
    order = int(rng.integers(2, 5))
    if flavor == "skew":
        half = rng.uniform(0.2, 3.0, size=int(rng.integers(1, 3)))
        c = np.concatenate([half, -half[::-1]])
        if order % 2 == 0:
            order += 1  # even orders force vanishing pair sums
    else:
        dim = int(rng.integers(2, 6))
        c = rng.uniform(0.2, 3.0, size=dim)
        if flavor == "centro":
            c = palindromize(c)
    return CauchySpec(c, order)


def _check_cauchy_equivalence(rng, trials):
    flavors = ("centro", "general", "skew")
    for t in range(trials):
        spec = _random_spec(rng, flavors[t % 3])
        p_centro = cauchy_is_centro(spec)
        p_skew = cauchy_is_skew(spec)
        if spec.dim % 2 == 1 and p_skew:
            return _fail("odd-dimension spec classified skew", generating=spec.generating.tolist())
        try:
            tensor = materialize(spec)
        except CauchySpecError:
            continue
        report = check_structure(tensor)
        if p_centro != report.is_centro or p_skew != report.is_skew:
            return _fail(
                f"vector predicates (centro={p_centro}, skew={p_skew}) disagree "
                f"with tensor verdict {report.verdict}",
                generating=spec.generating.tolist(),
                order=spec.order,
            )
        if cauchy_check_JC(spec) != p_centro:
            return _fail(
                "exchange-product test disagrees with the vector predicate",
                generating=spec.generating.tolist(),
                order=spec.order,
            )
    return True, "", None


def _diagonal_centro(rng, order, dim):
    diag = palindromize(rng.uniform(0.5, 4.0, size=dim))
    data = np.zeros((dim,) * order)
    data[(np.arange(dim),) * order] = diag
    return DenseTensor(data)


def _check_diagonal_inverse(rng, trials):
    for t in range(trials):
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 5))
        k = int(rng.integers(2, 4))
        a = _diagonal_centro(rng, order, dim)
        left = diagonal_left_inverse(a, k)
        right = diagonal_right_inverse(a, k)
        for result in (left, right):
            if result.residual > 1e-13 or not result.centro_verdict:
                return _fail(
                    f"{result.side} diagonal inverse residual {result.residual:.3e}",
                    **_counterexample_tensor(a),
                )
    return True, "", None


def _well_conditioned_centro_matrix(rng, dim):
    for _ in range(64):
        c = random_structured(2, dim, "centro", rng)
        if np.linalg.cond(c.data) <= 1e3:
            return c
    raise ConsistencyError("could not draw a well-conditioned centro matrix")


def _check_matrix_recovery(rng, trials):
    for t in range(trials):
        dim = int(rng.integers(2, 5))
        c = _well_conditioned_centro_matrix(rng, dim)
        c_inv = np.linalg.inv(c.data)

        m_left = int(rng.integers(2, 5))
        planted = shao_product(c, DenseTensor.identity(m_left, dim))
        result = recover_order2_left_inverse(planted)
        if not isinstance(result, InverseResult):
            return _fail(f"left recovery reported no inverse: {result.reason}",
                         **_counterexample_tensor(planted))
        err = float(np.max(np.abs(result.inverse.data - c_inv)))
        if err > 1e-9 or not result.centro_verdict:
            return _fail(f"left recovery error {err:.3e}", **_counterexample_tensor(planted))

        m_right = 2 * int(rng.integers(1, 3))
        planted = shao_product(DenseTensor.identity(m_right, dim), DenseTensor(c_inv))
        result = recover_order2_right_inverse(planted)
        if not isinstance(result, InverseResult):
            return _fail(f"right recovery reported no inverse: {result.reason}",
                         **_counterexample_tensor(planted))
        err = float(np.max(np.abs(result.inverse.data - c.data)))
        if err > 1e-9 or not result.centro_verdict:
            return _fail(f"right recovery error {err:.3e}", **_counterexample_tensor(planted))
    return True, "", None


def _check_closed_form_eigen(rng, trials):
    for t in range(trials):
        m2 = int(rng.integers(2, 6))
        a = random_structured(m2, 2, "centro", rng)
        bound = 1e-12 * entry_scale(a)
        pair_e, pair_u = closed_form_dim2(a)
        if pair_e.residual > bound or pair_u.residual > bound:
            return _fail("dimension-2 closed form residual too large", **_counterexample_tensor(a))
        m3 = 2 * int(rng.integers(1, 3))
        b = random_structured(m3, 3, "centro", rng)
        pair = closed_form_dim3_even(b)
        if pair.residual > 1e-12 * entry_scale(b) or pair.vector[1] != 0.0:
            return _fail("dimension-3 closed form residual too large", **_counterexample_tensor(b))
    return True, "", None


def _check_eigen_reflection(rng, trials):
    for t in range(trials):
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 5))
        kind = "centro" if t % 2 == 0 else "skew"
        a = random_structured(order, dim, kind, rng)
        pairs = solve_eigen(a, starts=12, seed=rng).pairs
        for pair in pairs:
            if kind == "skew" and abs(pair.value) <= 1e-8:
                continue
            try:
                mirrored = reflect_pair(a, pair)
            except ConsistencyError as exc:
                return _fail(str(exc), **_counterexample_tensor(a))
            expected = pair.value if kind == "centro" else -pair.value
            if abs(mirrored.value - expected) > 1e-9:
                return _fail("reflected eigenvalue mismatch", **_counterexample_tensor(a))
    return True, "", None


def _check_cauchy_eigen_symmetry(rng, trials):
    for t in range(trials):
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 5))
        spec = CauchySpec(palindromize(rng.uniform(0.2, 3.0, size=dim)), order)
        tensor = materialize(spec)
        for pair in solve_eigen(tensor, starts=12, seed=rng).pairs:
            if abs(pair.value) <= 1e-8:
                continue
            if order % 2 == 0 and pair.classification != SYMMETRIC:
                return _fail(
                    f"even-order pair classified {pair.classification}",
                    generating=spec.generating.tolist(),
                    value=pair.value,
                )
            if order % 2 == 1 and pair.classification == NEITHER_CLASS:
                return _fail(
                    "odd-order pair has non-symmetric magnitude vector",
                    generating=spec.generating.tolist(),
                    value=pair.value,
                )
    return True, "", None


_CHECKS = (
    ("structure-check-agreement", _check_structure_agreement, 1),
    ("product-parity", _check_product_parity, 1),
    ("hadamard-parity", _check_hadamard_parity, 1),
    ("decomposition-roundtrip", _check_decomposition, 1),
    ("row-sum-reflection", _check_row_sums, 1),
    ("poly-reflection", _check_poly_reflection, 1),
    ("cauchy-equivalence", _check_cauchy_equivalence, 1),
    ("diagonal-inverse-roundtrip", _check_diagonal_inverse, 1),
    ("matrix-inverse-recovery", _check_matrix_recovery, 1),
    ("closed-form-eigen", _check_closed_form_eigen, 1),
    ("eigen-reflection", _check_eigen_reflection, 8),
    ("cauchy-eigen-symmetry", _check_cauchy_eigen_symmetry, 8),
)

CHECK_NAMES = tuple(name for name, _, _ in _CHECKS)


def verify_all(seed: int = 0, trials: int = DEFAULT_TRIALS, corrupt: str | None = None) -> SuiteReport:
    """Run every structural check on `trials` random instances each.

    Eigen-solver-backed checks divide the trial count down since each
    trial runs a multistart solve.  trials=0 produces an empty report.
    `corrupt` inverts the outcome of the named check (harness self-test).
    """
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    if corrupt is not None and corrupt not in CHECK_NAMES:
        raise ValueError(f"unknown check {corrupt!r}; expected one of {CHECK_NAMES}")
    checks = []
    if trials > 0:
        streams = np.random.SeedSequence(seed).spawn(len(_CHECKS))
        for (name, func, divisor), stream in zip(_CHECKS, streams):
            count = max(1, trials // divisor)
            rng = np.random.default_rng(stream)
            passed, detail, payload = func(rng, count)
            if corrupt == name:
                passed = not passed
                detail = (detail + " " if detail else "") + "(self-test corruption applied)"
            checks.append(
                CheckResult(
                    name=name,
                    passed=passed,
                    trials=count,
                    detail=detail,
                    counterexample=payload if not passed and payload else None,
                )
            )
    return SuiteReport(seed=seed, trials=trials, checks=checks)
