from fractions import Fraction as F

import pytest

from hamcube.hamming import HammingPointSet, distance_matrix


def cofactor_det(rows):
    """Laplace expansion along the first row; independent of elimination."""
    n = len(rows)
    if n == 0:
        return F(1)
    if n == 1:
        return F(rows[0][0])
    total = F(0)
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * F(rows[0][j]) * cofactor_det(minor)
    return total


def points(*strings):
    return HammingPointSet.from_strings(strings)


EX1_X1 = ("000", "111")
EX1_X2 = ("000", "111", "100")
EX2_X1 = ("000", "100", "010")
EX2_X2 = ("000", "100", "010", "110")


@pytest.fixture
def ex1_x2():
    return points(*EX1_X2)


@pytest.fixture
def ex2_x2():
    return points(*EX2_X2)


@pytest.fixture
def D_ex2_x2():
    return distance_matrix(points(*EX2_X2))
