from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hamcube.exactla import determinant, inverse, ones
from hamcube.hamming import (DistMatrix, FormatError, HammingPoint, HammingPointSet,
                             NotATreeError, PointSetError, UnweightedTree, distance_matrix,
                             format_points, full_cube, hamming_distance, parse_points,
                             parse_tree, random_subset, random_tree, tree_to_cube)

from conftest import cofactor_det, points


def hp(s):
    return HammingPoint.from_string(s)


def test_hamming_distance():
    assert hamming_distance(hp("000"), hp("111")) == 3
    assert hamming_distance(hp("101"), hp("101")) == 0
    assert hamming_distance(hp("100"), hp("010")) == 2
    with pytest.raises(ValueError):
        hamming_distance(hp("10"), hp("100"))


def test_point_validation():
    with pytest.raises(PointSetError):
        HammingPoint((0, 2))
    with pytest.raises(PointSetError):
        points("000")
    with pytest.raises(PointSetError):
        points("000", "000")
    with pytest.raises(PointSetError):
        points("000", "01")


def test_distance_matrix_examples():
    assert distance_matrix(points("000", "111", "100")).matrix.to_rows() == [
        [0, 3, 1], [3, 0, 2], [1, 2, 0]]
    assert distance_matrix(points("000", "100", "010", "110")).matrix.to_rows() == [
        [0, 1, 1, 2], [1, 0, 2, 1], [1, 2, 0, 1], [2, 1, 1, 0]]
    assert distance_matrix(points("0000", "1000")).matrix.to_rows() == [[0, 1], [1, 0]]


def test_dist_matrix_rejects_non_metrics():
    with pytest.raises(PointSetError):
        DistMatrix([[0, 1], [2, 0]])
    with pytest.raises(PointSetError):
        DistMatrix([[0, 5, 1], [5, 0, 1], [1, 1, 0]])
    with pytest.raises(PointSetError):
        DistMatrix([[1, 1], [1, 0]])


def test_full_cube():
    assert [str(p) for p in full_cube(1)] == ["0", "1"]
    C2 = full_cube(2)
    assert [str(p) for p in C2] == ["00", "01", "10", "11"]
    assert distance_matrix(C2).matrix @ ones(4) == (4,) * 4
    C3 = full_cube(3)
    assert len(C3) == 8
    assert distance_matrix(C3).matrix @ ones(8) == (12,) * 8
    with pytest.raises(ValueError):
        full_cube(11)
    assert len(full_cube(11, cap=11)) == 2048


@pytest.mark.parametrize("n", range(1, 7))
def test_full_cube_row_sums(n):
    D = distance_matrix(full_cube(n))
    assert D.matrix @ ones(2 ** n) == (n * 2 ** (n - 1),) * 2 ** n


def test_tree_to_cube_examples():
    path = UnweightedTree(3, ((0, 1), (1, 2)))
    assert [str(p) for p in tree_to_cube(path)] == ["00", "10", "11"]
    assert [str(p) for p in tree_to_cube(UnweightedTree(2, ((0, 1),)))] == ["0", "1"]
    star = UnweightedTree(4, ((0, 1), (0, 2), (0, 3)))
    X = tree_to_cube(star)
    assert [str(p) for p in X] == ["000", "100", "010", "001"]
    assert determinant(distance_matrix(X).matrix) == -12


def test_not_a_tree():
    with pytest.raises(NotATreeError):
        UnweightedTree(3, ((0, 1),))
    with pytest.raises(NotATreeError):
        UnweightedTree(4, ((0, 1), (1, 0), (2, 3)))
    with pytest.raises(NotATreeError):
        UnweightedTree(3, ((0, 1), (1, 1)))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=9), st.integers(min_value=0, max_value=2 ** 32))
def test_tree_identities(k1, seed):
    T = random_tree(k1, seed)
    X = tree_to_cube(T)
    D = distance_matrix(X)
    bfs = T.path_distances()
    assert D.matrix.to_rows() == bfs
    k = k1 - 1
    assert determinant(D.matrix) == (-1) ** k * k * 2 ** (k - 1)
    assert sum(inverse(D.matrix).entries) == F(2, k)


def test_graham_pollak_cofactor_small():
    # independent determinant on a 5-vertex path
    T = UnweightedTree(5, ((0, 1), (1, 2), (2, 3), (3, 4)))
    rows = distance_matrix(tree_to_cube(T)).matrix.to_rows()
    assert cofactor_det(rows) == 4 * 2 ** 3


def test_random_subset():
    X = random_subset(3, 8, seed=123)
    assert sorted(str(p) for p in X) == sorted(str(p) for p in full_cube(3))
    a, b = random_subset(4, 5, 42), random_subset(4, 5, 42)
    assert a == b and len(a) == 5
    Y = random_subset(2, 2, 7)
    assert Y[0] != Y[1]
    with pytest.raises(ValueError):
        random_subset(2, 5, 0)
    with pytest.raises(ValueError):
        random_subset(2, 1, 0)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2 ** 63))
def test_random_subset_distance_invariants(n, seed):
    m = min(2 ** n, 2 + seed % 15)
    D = distance_matrix(random_subset(n, m, seed)).matrix
    assert D.is_symmetric()
    assert all(D[i, i] == 0 for i in range(m))
    assert all(D[i, j] <= D[i, k] + D[k, j]
               for i, j, k in product(range(m), repeat=3))


def test_parse_points():
    X = parse_points("# comment\n\n000\n111\n  100  \n")
    assert [str(p) for p in X] == ["000", "111", "100"]
    assert parse_points(format_points(X)) == X
    with pytest.raises(FormatError, match="line 2"):
        parse_points("000\n0a0\n")
    with pytest.raises(FormatError, match="line 3"):
        parse_points("000\n111\n10\n")
    with pytest.raises(FormatError, match="line 3"):
        parse_points("000\n111\n000\n")
    with pytest.raises(FormatError):
        parse_points("000\n")


def test_parse_tree():
    T = parse_tree("# star\ntree 4\n0 1\n0 2\n\n0 3\n")
    assert T.vertex_count == 4 and T.edges == ((0, 1), (0, 2), (0, 3))
    with pytest.raises(FormatError, match="line 1"):
        parse_tree("graph 3\n")
    with pytest.raises(FormatError, match="line 3"):
        parse_tree("tree 3\n0 1\n1\n")
    with pytest.raises(NotATreeError):
        parse_tree("tree 4\n0 1\n1 2\n2 0\n")
