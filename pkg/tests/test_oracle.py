import numpy as np
import pytest

from hamcube.hamming import DistMatrix, distance_matrix, full_cube, random_subset
from hamcube.mconst import mconst_solveb_route
from hamcube.oracle import cross_validate, maximize_energy

from conftest import EX1_X1, EX1_X2, EX2_X1, EX2_X2, points


@pytest.mark.parametrize("X, expected", [
    (points(*EX1_X2), 1.5),
    (points(*EX2_X2), 1.0),
    (full_cube(3), 1.5),
])
def test_maximize_energy_examples(X, expected):
    res = maximize_energy(distance_matrix(X), seed=5)
    assert res.converged
    assert abs(res.approx_m - expected) <= 1e-6
    assert abs(res.approx_measure.sum() - 1) <= 1e-12
    assert res.gradient_residual <= 1e-9


def test_energy_trace_monotone():
    res = maximize_energy(distance_matrix(random_subset(6, 12, 9)), seed=1, keep_trace=True)
    diffs = np.diff(res.energies)
    assert res.monotone and (diffs >= -1e-12).all()
    assert len(res.energies) == res.iterations + 1


def test_non_convergence_is_flagged():
    res = maximize_energy(distance_matrix(random_subset(6, 12, 9)), seed=1, max_iters=1)
    assert not res.converged and res.iterations == 1


def test_deterministic_in_seed():
    D = distance_matrix(points(*EX1_X2))
    a, b = maximize_energy(D, seed=3), maximize_energy(D, seed=3)
    assert a.approx_m == b.approx_m and a.iterations == b.iterations


@pytest.mark.parametrize("X", [points(*EX1_X1), points(*EX1_X2), points(*EX2_X1),
                               points(*EX2_X2)])
def test_cross_validate_fixtures(X):
    assert cross_validate(X, tol=1e-6)


@pytest.mark.parametrize("d", range(1, 6))
def test_two_point_closed_form(d):
    X = points("0" * 5, "1" * d + "0" * (5 - d))
    res = maximize_energy(distance_matrix(X))
    assert abs(res.approx_m - d / 2) <= 1e-9
    assert cross_validate(X)


def test_random_corpus_never_exceeds_exact():
    for seed in range(15):
        n = 2 + seed % 7
        X = random_subset(n, min(2 ** n, 3 + seed), seed)
        D = distance_matrix(X)
        exact = float(mconst_solveb_route(D).value)
        res = maximize_energy(D, seed=seed)
        assert res.approx_m <= exact + 1e-6
        assert cross_validate(X, seed=seed)
