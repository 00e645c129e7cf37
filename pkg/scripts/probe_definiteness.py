#!/usr/bin/env python3
"""Empirical probe: how far are random even-order centro tensors from
positive definite?

Positive definiteness of an even-order tensor means f(x) = A x^m > 0 for
every nonzero x.  This script estimates, per trial, the minimum of f over
random unit vectors and the smallest eigenvalue the multistart solver
finds, then reports how large a multiple of the identity tensor must be
added before both probes turn positive.  Purely exploratory; no claim
beyond the sampled evidence.
"""

import argparse

import numpy as np

from centrotensor import (
    DenseTensor,
    add,
    poly_eval,
    random_structured,
    scale,
    solve_eigen,
)


def min_form_on_sphere(a, samples, rng):
    best = np.inf
    for _ in range(samples):
        x = rng.normal(size=a.dim)
        x /= np.linalg.norm(x)
        best = min(best, poly_eval(a, x))
    return best


def probe(order, dim, rng, samples, starts):
    a = random_structured(order, dim, "centro", rng)
    fmin = min_form_on_sphere(a, samples, rng)
    values = solve_eigen(a, starts=starts, seed=rng).values()
    lam_min = min(values) if values else np.nan
    shift = None
    if fmin <= 0.0:
        # on the unit sphere the identity form sum x_i^m dips to n^(1-m/2)
        shift = (0.1 - fmin) * dim ** (order / 2 - 1)
        shifted = add(a, scale(DenseTensor.identity(order, dim), shift))
        if min_form_on_sphere(shifted, samples, rng) <= 0.0:
            shift = np.nan  # sampled estimate was not enough
    return fmin, lam_min, shift


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=8, help="tensors per cell")
    parser.add_argument("--samples", type=int, default=400, help="unit vectors per tensor")
    parser.add_argument("--starts", type=int, default=30)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'m':>2} {'n':>2} {'definite':>9} {'min f':>10} {'min lambda':>11} {'avg shift':>10}")
    for order in (2, 4):
        for dim in (2, 3, 4):
            definite = 0
            fmins, lmins, shifts = [], [], []
            for _ in range(args.trials):
                fmin, lam_min, shift = probe(order, dim, rng, args.samples, args.starts)
                fmins.append(fmin)
                lmins.append(lam_min)
                if shift is not None:
                    shifts.append(shift)
                if fmin > 0.0:
                    definite += 1
            avg_shift = f"{np.nanmean(shifts):>10.4f}" if shifts else f"{'-':>10}"
            print(
                f"{order:>2} {dim:>2} {definite:>6}/{args.trials:<2} "
                f"{np.min(fmins):>10.4f} {np.nanmin(lmins):>11.4f} {avg_shift}"
            )


if __name__ == "__main__":
    main()
