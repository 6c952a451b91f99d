"""Euclidean picture of cube subsets: affine hulls, spheres and the cube centre.

The inclusion H_n -> R^n turns Hamming distance into squared Euclidean
distance, so every quantity below (squared distances, squared radii,
affine coefficients) stays rational. Radii are only ever handled squared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactla import (DimensionError, RatMatrix, Unique, add, combination, dot, norm_sq,
                      rank, solve, sub, vector)
from .hamming import HammingPointSet, distance_matrix
from .mconst import (MConstResult, Measure, Route, energy, extract_affine_basis,
                     verify_maximality)


class NotMaximalError(ValueError):
    pass


class DependentVectorsError(ValueError):
    pass


@dataclass(frozen=True)
class AffineSubspace:
    base: tuple
    directions: tuple

    def __post_init__(self):
        if self.directions and rank(RatMatrix.from_rows(self.directions)) != len(self.directions):
            raise DependentVectorsError("directions are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.directions)


@dataclass(frozen=True)
class SphereWitness:
    center: tuple
    radius_sq: Fraction
    center_coefficients: tuple


def cube_center(n: int) -> tuple:
    return (Fraction(1, 2),) * n


def s_embedding_check(X: HammingPointSet) -> bool:
    """Hamming distance equals squared Euclidean distance for every pair."""
    D = distance_matrix(X)
    vecs = X.vectors()
    return all(D[i, j] == norm_sq(sub(vecs[i], vecs[j]))
               for i in range(X.m) for j in range(X.m))


def lemma1_identity(u_list: Sequence, alpha: Sequence, u: Sequence) -> bool:
    """sum a_i |u_i - u|^2 == |sum a_i u_i - u|^2 + 1/2 sum a_i a_j |u_i - u_j|^2"""
    alpha = vector(alpha)
    if sum(alpha) != 1:
        raise ValueError("weights must sum to 1")
    if len(alpha) != len(u_list) or any(len(v) != len(u) for v in u_list):
        raise DimensionError("dimension mismatch")
    lhs = sum(a * norm_sq(sub(ui, u)) for a, ui in zip(alpha, u_list))
    bary = combination(alpha, u_list)
    pair = sum(ai * aj * norm_sq(sub(ui, uj))
               for ai, ui in zip(alpha, u_list) for aj, uj in zip(alpha, u_list))
    return lhs == norm_sq(sub(bary, u)) + pair / 2


def potential_decomposition(X: HammingPointSet, mu: Measure, i: int) -> tuple:
    """Split d_mu(x_i) into |barycentre - x_i|^2 and I(mu)/2."""
    if len(mu) != X.m:
        raise DimensionError(f"measure has {len(mu)} weights for {X.m} points")
    vecs = X.vectors()
    bary = combination(mu.weights, vecs)
    return norm_sq(sub(bary, vecs[i])), energy(distance_matrix(X), mu) / 2


def energy_via_center(X: HammingPointSet, mu: Measure) -> Fraction:
    """I(mu) computed as n/2 - 2 |sum a_i x_i - h|^2, without D."""
    if len(mu) != X.m:
        raise DimensionError(f"measure has {len(mu)} weights for {X.m} points")
    bary = combination(mu.weights, X.vectors())
    return Fraction(X.n, 2) - 2 * norm_sq(sub(bary, cube_center(X.n)))


def affine_hull(X: HammingPointSet) -> AffineSubspace:
    vecs = X.vectors()
    base = vecs[0]
    dirs = []
    for v in vecs[1:]:
        cand = dirs + [sub(v, base)]
        if rank(RatMatrix.from_rows(cand)) == len(cand):
            dirs = cand
    return AffineSubspace(base, tuple(dirs))


def _project_coefficients(p: Sequence, Z: AffineSubspace) -> tuple:
    """Coefficients c with foot = base + sum c_k dir_k (normal equations)."""
    if not Z.directions:
        return ()
    gram = RatMatrix.from_rows([[dot(u, v) for v in Z.directions] for u in Z.directions])
    rhs = [dot(d, sub(p, Z.base)) for d in Z.directions]
    sol = solve(gram, rhs)
    assert isinstance(sol, Unique)
    return sol.x


def project_onto_affine(p: Sequence, Z: AffineSubspace) -> tuple:
    """Orthogonal projection of p onto Z. Returns ``(foot, dist_sq)``."""
    p = vector(p)
    if len(p) != len(Z.base):
        raise DimensionError("point and subspace live in different dimensions")
    coeffs = _project_coefficients(p, Z)
    foot = add(Z.base, combination(coeffs, Z.directions)) if coeffs else Z.base
    resid = sub(p, foot)
    assert all(dot(resid, d) == 0 for d in Z.directions)
    return foot, norm_sq(resid)


def _affine_measure(m: int, basis_idx: Sequence[int], coeffs: Sequence) -> Measure:
    """Measure for the point base + sum c_k (x_{idx[k+1]} - x_{idx[0]})."""
    w = [Fraction(0)] * m
    w[basis_idx[0]] = 1 - sum(coeffs, Fraction(0))
    for i, c in zip(basis_idx[1:], coeffs):
        w[i] = c
    return Measure(w)


def mconst_geometric(X: HammingPointSet) -> MConstResult:
    """M(X) = n/2 - 2 d(h, Z_X)^2; the maximal measure gives the
    projection foot of h in affine coordinates over the greedy basis."""
    Z = affine_hull(X)
    h = cube_center(X.n)
    foot, dist_sq = project_onto_affine(h, Z)
    basis_idx = extract_affine_basis(X)
    mu = _affine_measure(X.m, basis_idx, _project_coefficients(h, Z))
    assert combination(mu.weights, X.vectors()) == foot
    result = MConstResult(Fraction(X.n, 2) - 2 * dist_sq, mu, Route.GEOMETRIC)
    assert verify_maximality(distance_matrix(X), result)
    return result


def circumcenter_basis(v_list: Sequence) -> tuple:
    """Point of span(v_list) equidistant from 0 and every v_i.

    Returns ``(gamma, center)`` with center = sum gamma_i v_i and
    gamma = 1/2 (A^T A)^-1 (|v_1|^2, ..., |v_k|^2).
    """
    v_list = [vector(v) for v in v_list]
    if not v_list or rank(RatMatrix.from_rows(v_list)) != len(v_list):
        raise DependentVectorsError("circumcenter needs linearly independent vectors")
    gram = RatMatrix.from_rows([[dot(u, v) for v in v_list] for u in v_list])
    sol = solve(gram, [norm_sq(v) / 2 for v in v_list])
    gamma = sol.x
    center = combination(gamma, v_list)
    r2 = norm_sq(center)
    assert all(norm_sq(sub(center, v)) == r2 for v in v_list)
    return gamma, center


def circumsphere(X: HammingPointSet) -> SphereWitness:
    """The unique sphere through X with centre in the affine hull of X."""
    idx = extract_affine_basis(X)
    vecs = X.vectors()
    y0 = vecs[idx[0]]
    gamma, c = circumcenter_basis([sub(vecs[i], y0) for i in idx[1:]])
    center = add(c, y0)
    coeffs = _affine_measure(X.m, idx, gamma).weights
    r2 = norm_sq(c)
    # every point of X, not only the basis, has to sit on this sphere
    assert all(norm_sq(sub(center, v)) == r2 for v in vecs)
    assert combination(coeffs, vecs) == center
    return SphereWitness(center, r2, coeffs)


def mconst_circumcenter(X: HammingPointSet) -> MConstResult:
    """M(X) = 2 r^2 for the circumsphere; its affine coefficients form a
    maximal measure."""
    w = circumsphere(X)
    result = MConstResult(2 * w.radius_sq, Measure(w.center_coefficients), Route.CIRCUMCENTER)
    assert verify_maximality(distance_matrix(X), result)
    return result


def sphere_center_from_measure(X: HammingPointSet, mu: Measure) -> SphereWitness:
    """Sphere centred at the barycentre of a maximal measure, radius^2 = M/2."""
    D = distance_matrix(X)
    value = energy(D, mu)
    if not verify_maximality(D, MConstResult(value, mu, Route.SOLVE_B)):
        raise NotMaximalError("measure does not have constant potential equal to its energy")
    vecs = X.vectors()
    center = combination(mu.weights, vecs)
    r2 = value / 2
    if any(norm_sq(sub(center, v)) != r2 for v in vecs):
        raise NotMaximalError("points are not on the predicted sphere")
    return SphereWitness(center, r2, mu.weights)
