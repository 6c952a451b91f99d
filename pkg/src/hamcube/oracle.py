"""Floating-point check of M(X) straight from its definition.

Maximises I(mu) = mu^T D mu over the mass-one hyperplane by projected
gradient ascent. Verification only: nothing here feeds back into the exact
routes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hamming import DistMatrix, HammingPointSet, distance_matrix
from .mconst import mconst_solveb_route

DEFAULT_MAX_ITERS = 200_000
DEFAULT_TOL = 1e-9
MONOTONE_SLACK = 1e-12


@dataclass
class OracleResult:
    approx_m: float
    approx_measure: np.ndarray
    iterations: int
    converged: bool
    gradient_residual: float
    monotone: bool = True
    energies: list = field(default_factory=list, repr=False)


def to_float(D: DistMatrix) -> np.ndarray:
    m = D.m
    return np.array([float(e) for e in D.matrix.entries]).reshape(m, m)


def maximize_energy(D: DistMatrix, seed: int = 0, max_iters: int = DEFAULT_MAX_ITERS,
                    tol: float = DEFAULT_TOL, keep_trace: bool = False) -> OracleResult:
    A = to_float(D)
    m = A.shape[0]
    rng = np.random.default_rng(seed)
    # uniform start nudged by a small sum-zero perturbation
    noise = rng.normal(scale=1e-3 / m, size=m)
    mu = np.full(m, 1.0 / m) + (noise - noise.mean())
    eta = 1.0 / (2.0 * np.abs(A).sum(axis=1).max())

    Amu = A @ mu
    e = float(mu @ Amu)
    energies = [e] if keep_trace else []
    monotone = True
    it = 0
    while True:
        g = 2.0 * Amu
        g -= g.mean()
        resid = float(np.linalg.norm(g))
        if resid <= tol or it >= max_iters:
            break
        mu = mu + eta * g
        Amu = A @ mu
        e_new = float(mu @ Amu)
        if e_new < e - MONOTONE_SLACK:
            monotone = False
        e = e_new
        if keep_trace:
            energies.append(e)
        it += 1
    assert abs(mu.sum() - 1.0) <= 1e-12
    return OracleResult(e, mu, it, resid <= tol, resid, monotone, energies)


def cross_validate(X: HammingPointSet, tol: float = 1e-6, seed: int = 0) -> bool:
    """Compare the oracle against the exact solve-b value of M(X)."""
    D = distance_matrix(X)
    exact = float(mconst_solveb_route(D).value)
    res = maximize_energy(D, seed=seed)
    pot = to_float(D) @ res.approx_measure
    return (res.converged
            and res.monotone
            and abs(res.approx_m - exact) <= tol
            and float(pot.max() - pot.min()) <= 10 * tol)
