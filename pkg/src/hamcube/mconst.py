"""Energy, potentials, maximal measures and the M-constant.

Every route here is a linear-algebra shortcut: a mass-one measure whose
potential is constant on X is maximal, and its constant value is M(X).
No route searches for the supremum.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exactla import (Inconsistent, RatMatrix, SingularError, Unique, dot,
                      inverse, ones, rank, scale, solve, vector)
from .hamming import DistMatrix, HammingPointSet, distance_matrix
from .negtype import affinely_independent


class NotStrictError(ArithmeticError):
    """The distance matrix is singular, so the inverse route does not apply."""


class DegenerateError(ArithmeticError):
    pass


class InfiniteMError(ArithmeticError):
    """Db = 1 is solvable but <b, 1> = 0, so M(X) is infinite."""


class NoSolutionError(ArithmeticError):
    """Db = 1 has no solution; D cannot be of 1-negative type."""


class Route(enum.Enum):
    INVERSE_SUM = "inverse"
    SOLVE_B = "solveb"
    GEOMETRIC = "geometric"
    CIRCUMCENTER = "circumcenter"


@dataclass(frozen=True)
class Measure:
    """Signed weights of total mass exactly one."""

    weights: tuple

    def __post_init__(self):
        w = vector(self.weights)
        if sum(w) != 1:
            raise ValueError(f"weights sum to {sum(w)}, not 1")
        object.__setattr__(self, "weights", w)

    @classmethod
    def uniform(cls, m: int) -> "Measure":
        return cls((Fraction(1, m),) * m)

    @classmethod
    def point_mass(cls, m: int, i: int) -> "Measure":
        return cls(tuple(int(j == i) for j in range(m)))

    def __len__(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class MConstResult:
    value: Fraction
    measure: Measure
    route: Route


def energy(D: DistMatrix, mu: Measure) -> Fraction:
    """I(mu) = <D mu, mu>."""
    if len(mu) != D.m:
        raise ValueError(f"measure has {len(mu)} weights, D is {D.m}x{D.m}")
    return dot(D.matrix @ mu.weights, mu.weights)


def potential(D: DistMatrix, mu: Measure, i: int) -> Fraction:
    if len(mu) != D.m:
        raise ValueError(f"measure has {len(mu)} weights, D is {D.m}x{D.m}")
    if not 0 <= i < D.m:
        raise IndexError(f"point index {i} out of range")
    return dot(D.matrix.row(i), mu.weights)


def _normalized(b: tuple, route: Route) -> MConstResult:
    s = sum(b)
    return MConstResult(1 / s, Measure(scale(1 / s, b)), route)


def dinv_sum(D: DistMatrix) -> Fraction:
    """Sum of the entries of D^-1; raises NotStrictError for singular D."""
    try:
        Dinv = inverse(D.matrix)
    except SingularError:
        raise NotStrictError("distance matrix is singular") from None
    return sum(Dinv.entries)


def mconst_inverse_route(D: DistMatrix) -> MConstResult:
    """M(X) = 1 / <D^-1 1, 1>."""
    try:
        b = inverse(D.matrix) @ ones(D.m)
    except SingularError:
        raise NotStrictError("distance matrix is singular") from None
    if sum(b) <= 0:
        raise DegenerateError(f"<D^-1 1, 1> = {sum(b)} is not positive")
    return _normalized(b, Route.INVERSE_SUM)


def mconst_solveb_route(D: DistMatrix) -> MConstResult:
    """Solve Db = 1; M(X) = 1 / <b, 1> when that sum is positive.

    Works for singular D. The particular solution used is the
    minimum-norm one returned by :func:`hamcube.exactla.solve`.
    """
    sol = solve(D.matrix, ones(D.m))
    if isinstance(sol, Inconsistent):
        raise NoSolutionError("Db = 1 has no solution")
    s = sum(sol.x)
    if s == 0:
        raise InfiniteMError("<b, 1> = 0")
    if s < 0:
        raise DegenerateError(f"<b, 1> = {s} is negative")
    return _normalized(sol.x, Route.SOLVE_B)


def verify_b_invariance(D: DistMatrix) -> bool:
    """Every kernel vector of D is orthogonal to 1, so <b, 1> does not
    depend on which solution of Db = 1 is taken."""
    sol = solve(D.matrix, ones(D.m))
    if isinstance(sol, Unique):
        return True
    if isinstance(sol, Inconsistent):
        return False
    s = sum(sol.x)
    return all(sum(v) == 0 and sum(b2 + v2 for b2, v2 in zip(sol.x, v)) == s
               for v in sol.null_basis)


def verify_maximality(D: DistMatrix, result: MConstResult) -> bool:
    mu = result.measure
    if len(mu) != D.m:
        return False
    pot = D.matrix @ mu.weights
    return all(p == result.value for p in pot) and energy(D, mu) == result.value


def extract_affine_basis(X: HammingPointSet) -> list:
    """Greedy maximal affinely independent subset, as indices into X."""
    base = X.points[0].bits
    chosen = [0]
    rows = []
    for i in range(1, X.m):
        cand = rows + [[a - b for a, b in zip(X.points[i].bits, base)]]
        if rank(RatMatrix.from_rows(cand)) == len(cand):
            rows = cand
            chosen.append(i)
    return chosen


def mconst_reduced(X: HammingPointSet) -> MConstResult:
    """M(X) = M(Y) for a maximal affinely independent Y inside X."""
    idx = extract_affine_basis(X)
    D = distance_matrix(X)
    sub = mconst_inverse_route(DistMatrix(D.matrix.submatrix(idx)))
    weights = [Fraction(0)] * X.m
    for k, i in enumerate(idx):
        weights[i] = sub.measure.weights[k]
    result = MConstResult(sub.value, Measure(weights), Route.INVERSE_SUM)
    assert verify_maximality(D, result)
    return result


def check_bounds(X: HammingPointSet) -> bool:
    """All the a-priori bounds on M(X) and <D^-1 1, 1> for a cube subset."""
    D = distance_matrix(X)
    n, m = X.n, X.m
    M = mconst_reduced(X).value
    ok = True
    if affinely_independent(X):
        s = dinv_sum(D)
        ok &= Fraction(2, n) <= s <= 2
        ok &= s * M == 1
    off = [D.matrix[i, j] for i in range(m) for j in range(m) if i != j]
    d0, diam = min(off), max(off)
    ok &= M <= Fraction(n, 2)
    ok &= M >= Fraction(sum(D.matrix.entries), m * m) >= Fraction(m - 1, m) * d0
    ok &= M <= Fraction(m, 4) * diam
    return bool(ok)
