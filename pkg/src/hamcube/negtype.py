"""Exact certification of (strict) 1-negative type for distance matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactla import RatMatrix, determinant, dot, inverse, nullspace, ones, psd_certificate, rank
from .hamming import DistMatrix, HammingPointSet, distance_matrix


@dataclass(frozen=True)
class NegTypeVerdict:
    is_neg_type: bool
    is_strict: bool
    witness: Optional[tuple] = None

    def __post_init__(self):
        if self.is_strict and not self.is_neg_type:
            raise ValueError("strict negative type implies negative type")


def _sum_zero_basis(m: int) -> RatMatrix:
    """m x (m-1) matrix whose columns are e_i - e_m."""
    return RatMatrix(m, m - 1, (
        (1 if i == j else -1 if i == m - 1 else 0)
        for i in range(m) for j in range(m - 1)))


def quadratic_form(D: DistMatrix, xi) -> Fraction:
    return dot(D.matrix @ xi, xi)


def check_negative_type(D: DistMatrix) -> NegTypeVerdict:
    """Restrict the form of D to sum-zero vectors and test it exactly.

    The witness, when present, is a nonzero sum-zero vector with
    ``xi^T D xi > 0`` (negative type fails) or ``= 0`` (strictness fails).
    """
    m = D.m
    B = _sum_zero_basis(m)
    Q = B.T @ D.matrix @ B
    # -Q is PSD exactly when Q is negative semidefinite
    psd, y = psd_certificate(-Q)
    if not psd:
        xi = B @ y
        assert sum(xi) == 0 and quadratic_form(D, xi) > 0
        return NegTypeVerdict(False, False, xi)
    kernel = nullspace(Q)
    if not kernel:
        return NegTypeVerdict(True, True, None)
    xi = B @ kernel[0]
    assert sum(xi) == 0 and any(xi) and quadratic_form(D, xi) == 0
    return NegTypeVerdict(True, False, xi)


def affinely_independent(X: HammingPointSet) -> bool:
    base = X.points[0].bits
    diffs = RatMatrix.from_rows([[a - b for a, b in zip(p.bits, base)] for p in X.points[1:]])
    return rank(diffs) == X.m - 1


def strict_by_inverse(D: DistMatrix) -> bool:
    """The alternative characterisation: D nonsingular and <D^-1 1, 1> != 0."""
    if determinant(D.matrix) == 0:
        return False
    return sum(inverse(D.matrix) @ ones(D.m)) != 0


def verify_hnstrict_equivalence(X: HammingPointSet) -> bool:
    """Strict 1-negative type, affine independence and det(D) != 0 must
    all agree for any subset of the cube."""
    D = distance_matrix(X)
    strict = check_negative_type(D).is_strict
    indep = affinely_independent(X)
    nonsingular = determinant(D.matrix) != 0
    return strict == indep == nonsingular
