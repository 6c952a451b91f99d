from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hamcube.exactla import RatMatrix
from hamcube.hamming import DistMatrix, distance_matrix, full_cube, random_subset, random_tree, tree_to_cube
from hamcube.mconst import (DegenerateError, InfiniteMError, Measure, MConstResult, NoSolutionError,
                            NotStrictError, Route, check_bounds, dinv_sum, energy,
                            extract_affine_basis, mconst_inverse_route, mconst_reduced,
                            mconst_solveb_route, potential, verify_b_invariance,
                            verify_maximality)

from conftest import EX1_X1, EX1_X2, EX2_X1, EX2_X2, points

D2 = DistMatrix([[0, 3], [3, 0]])


def test_measure_mass_one():
    with pytest.raises(ValueError):
        Measure((F(1, 2), F(1, 3)))
    assert Measure((2, -1)).weights == (2, -1)


def test_energy_examples():
    assert energy(distance_matrix(full_cube(2)), Measure.uniform(4)) == 1
    assert energy(distance_matrix(points(*EX1_X2)), Measure.point_mass(3, 0)) == 0
    assert energy(D2, Measure.uniform(2)) == F(3, 2)
    with pytest.raises(ValueError):
        energy(D2, Measure.uniform(3))


def test_potential_examples():
    assert potential(D2, Measure.uniform(2), 1) == F(3, 2)
    D = distance_matrix(points(*EX1_X2))
    assert potential(D, Measure.point_mass(3, 2), 2) == 0
    H2 = distance_matrix(full_cube(2))
    assert {potential(H2, Measure.uniform(4), i) for i in range(4)} == {1}
    with pytest.raises(IndexError):
        potential(D2, Measure.uniform(2), 2)


def test_inverse_route_examples():
    r = mconst_inverse_route(distance_matrix(points(*EX1_X2)))
    assert r.value == F(3, 2) and r.route is Route.INVERSE_SUM
    assert dinv_sum(distance_matrix(points(*EX1_X2))) == F(2, 3)
    assert mconst_inverse_route(distance_matrix(points(*EX2_X1))).value == 1
    for d in range(1, 6):
        X = points("0" * 6, "1" * d + "0" * (6 - d))
        r = mconst_inverse_route(distance_matrix(X))
        assert r.value == F(d, 2) and r.measure.weights == (F(1, 2), F(1, 2))
    with pytest.raises(NotStrictError):
        mconst_inverse_route(distance_matrix(points(*EX2_X2)))


def test_solveb_route_examples():
    r = mconst_solveb_route(distance_matrix(points(*EX2_X2)))
    assert r.value == 1
    # b = (1/4, ...), <b,1> = 1, so the measure is b itself
    assert r.measure.weights == (F(1, 4),) * 4
    D = distance_matrix(points(*EX1_X2))
    assert mconst_solveb_route(D).value == mconst_inverse_route(D).value


@pytest.mark.parametrize("n", range(1, 7))
def test_solveb_full_cube(n):
    r = mconst_solveb_route(distance_matrix(full_cube(n)))
    assert r.value == F(n, 2)
    assert r.measure.weights == (F(1, 2 ** n),) * 2 ** n


class RawMatrix:
    """Bypasses metric validation so the error variants can be reached."""

    def __init__(self, rows):
        self.matrix = RatMatrix.from_rows(rows)
        self.m = len(rows)


def test_solveb_error_variants():
    with pytest.raises(NoSolutionError):
        mconst_solveb_route(RawMatrix([[0, 0], [0, 0]]))
    # b = (1, -1)
    with pytest.raises(InfiniteMError):
        mconst_solveb_route(RawMatrix([[1, 0], [0, -1]]))
    # b = (1, -2)
    with pytest.raises(DegenerateError):
        mconst_solveb_route(RawMatrix([[1, 0], [0, F(-1, 2)]]))


def test_b_invariance_examples():
    assert verify_b_invariance(distance_matrix(points(*EX2_X2)))
    assert verify_b_invariance(distance_matrix(points(*EX1_X2)))
    assert verify_b_invariance(distance_matrix(full_cube(2)))


def test_verify_maximality_examples():
    H2 = distance_matrix(full_cube(2))
    assert verify_maximality(H2, MConstResult(F(1), Measure.uniform(4), Route.SOLVE_B))
    D = distance_matrix(points(*EX1_X2))
    # D (1/3,1/3,1/3) = (4/3, 5/3, 1) is not constant
    assert D.matrix @ Measure.uniform(3).weights == (F(4, 3), F(5, 3), F(1))
    assert not verify_maximality(D, MConstResult(F(3, 2), Measure.uniform(3), Route.SOLVE_B))


def test_extract_affine_basis():
    assert extract_affine_basis(points(*EX2_X2)) == [0, 1, 2]
    assert extract_affine_basis(points(*EX1_X2)) == [0, 1, 2]
    assert extract_affine_basis(points(*EX1_X1)) == [0, 1]


def test_reduced_examples():
    assert mconst_reduced(points(*EX2_X2)).value == 1
    X = points(*EX1_X2)
    assert mconst_reduced(X) == mconst_inverse_route(distance_matrix(X))
    r = mconst_reduced(full_cube(3))
    assert r.value == F(3, 2)
    assert verify_maximality(distance_matrix(full_cube(3)), r)


def test_bounds_examples():
    for seed in range(10):
        T = random_tree(2 + seed, seed)
        X = tree_to_cube(T)
        assert dinv_sum(distance_matrix(X)) == F(2, X.n)
        assert check_bounds(X)
    X = points("0", "1")
    assert dinv_sum(distance_matrix(X)) == 2
    assert check_bounds(X)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2 ** 63))
def test_route_properties(n, seed):
    m = min(2 ** n, 2 + seed % 14)
    X = random_subset(n, m, seed)
    D = distance_matrix(X)
    r1, r2 = mconst_solveb_route(D), mconst_reduced(X)
    assert r1.value == r2.value
    assert 0 < r1.value <= F(n, 2)
    for r in (r1, r2):
        assert verify_maximality(D, r)
        assert energy(D, r.measure) == r.value
    assert verify_b_invariance(D)
    assert check_bounds(X)
    if m >= 3:
        assert mconst_reduced(X.subset(range(m - 1))).value <= r1.value
