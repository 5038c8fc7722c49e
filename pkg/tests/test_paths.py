from fractions import Fraction

import pytest

from conftest import small_partitions

from aztec_triangles.delannoy import delannoy_D, delannoy_H
from aztec_triangles.exact import Matrix
from aztec_triangles.paths import (
    LatticePath,
    PathFamily,
    d1_bottom_right_view,
    d_submatrix,
    enumerate_path_families,
    is_vertex_disjoint,
    lgv_matrix,
    paths_to_tableau,
    tableau_to_paths,
    validate_family,
)
from aztec_triangles.sequences import enumerate_sequences
from aztec_triangles.tableaux import sequence_to_tableau

from test_tableaux import FIG_TABLEAU

HALF = Fraction(1, 2)


def test_figure_family():
    fam = tableau_to_paths(FIG_TABLEAU)
    assert [p.start for p in fam.paths] == [(-1, 1), (-2, 2), (-3, 3), (-4, 4)]
    assert [p.end for p in fam.paths] == [(4, 4), (1, 4), (-1, 4), (-3, 4)]
    assert [p.steps for p in fam.paths] == ["EEDNED", "EDEN", "EEN", "E"]
    assert is_vertex_disjoint(fam)
    assert validate_family(fam)
    assert paths_to_tableau(fam) == FIG_TABLEAU


def test_empty_family():
    empty = PathFamily(1, (), ())
    assert validate_family(empty)
    assert paths_to_tableau(empty).rows == ()


def test_round_trip_exhaustive():
    for mu, case in [((2, 1), 1), ((1, 0), 2), ((2, 2), 1)]:
        for seq in enumerate_sequences(mu, case):
            t = sequence_to_tableau(seq)
            fam = tableau_to_paths(t)
            assert validate_family(fam)
            assert paths_to_tableau(fam) == t


def test_enumerate_family_counts():
    assert len(enumerate_path_families((1,), 1)) == 1
    assert len(enumerate_path_families((2, 1), 1)) == 4
    fams = enumerate_path_families((2, 1), 2)
    assert len(fams) == lgv_matrix((2, 1), 2).determinant()


def test_case2_paths_never_end_east():
    for fam in enumerate_path_families((2, 1, 0), 2):
        for path in fam.paths:
            assert not path.steps.endswith("E")


def test_lgv_examples():
    assert lgv_matrix((1,), 1) == Matrix([[1]])  # D(1,0)
    assert lgv_matrix((2, 1), 1).determinant() == 4
    assert lgv_matrix((), 1).determinant() == 1
    assert lgv_matrix((), 2).determinant() == 1


def test_lgv_agreement_grid():
    for mu in small_partitions(3, 2):
        for case in (1, 2):
            det = lgv_matrix(mu, case).determinant()
            fams = enumerate_path_families(mu, case)
            assert det == len(fams), (mu, case)
            assert all(validate_family(f) for f in fams)


def test_d_submatrix_examples():
    assert d_submatrix(1, 5, 1) == Matrix([[9]])  # D1(1;n) = [[2n-1]]
    assert d_submatrix(2, 1, 1) == Matrix([[1, -1], [1, -1]])
    assert d_submatrix(2, 1, 1).determinant() == 0
    assert d_submatrix(1, 4, 2) == Matrix([[8]])  # D2(1;n) = [[2n]]
    assert d_submatrix(0, 3, 1).determinant() == 1
    assert d_submatrix(2, -1, 1) == Matrix([[5, -25], [1, -5]])


def test_d_submatrix_case2_needs_integer_n():
    with pytest.raises(ValueError):
        d_submatrix(2, HALF, 2)
    assert d_submatrix(2, Fraction(4, 2), 2) == d_submatrix(2, 2, 2)


def test_bordered_matrix_reduces_to_bottom_right_block():
    # det A_1 for the staircase equals det D_1(k; n)
    for n in range(1, 6):
        for k in range(1, n + 1):
            mu = tuple(range(k, 0, -1)) + (0,) * (n - k)
            assert (
                lgv_matrix(mu, 1).determinant()
                == d_submatrix(k, n, 1).determinant()
            )
            assert (
                lgv_matrix(mu, 2).determinant()
                == d_submatrix(k, n, 2).determinant()
            )


def test_two_indexings_same_determinant():
    for k in range(5):
        for n in [-2, 0, 1, 3, HALF, Fraction(-5, 2)]:
            assert (
                d_submatrix(k, n, 1).determinant()
                == d1_bottom_right_view(k, n).determinant()
            )


def test_entry_conventions():
    # spot-check the matrix entry layouts against direct evaluation
    m = d_submatrix(3, Fraction(7, 3), 1)
    for i in range(3):
        for j in range(3):
            assert m[i, j] == delannoy_D(3 - 2 * i + j, Fraction(7, 3) - j - 1)
    m = d_submatrix(3, 4, 2)
    for i in range(1, 4):
        for j in range(1, 4):
            assert m[i - 1, j - 1] == delannoy_H(2 * j - i, i + 4 - 3 - 1)


def test_path_points():
    path = LatticePath((-1, 1), "EEDNED")
    pts = path.points()
    assert pts[0] == (-1, 1)
    assert pts[-1] == (4, 4)
    assert len(pts) == 7
