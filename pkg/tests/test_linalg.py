from fractions import Fraction as Fr

import pytest

from liefusion import linalg


def test_rank_and_nullspace():
    a = [[Fr(1), Fr(2), Fr(3)], [Fr(2), Fr(4), Fr(6)], [Fr(0), Fr(1), Fr(1)]]
    assert linalg.rank(a) == 2
    ns = linalg.nullspace(a, 3)
    assert len(ns) == 1
    assert all(x == 0 for x in linalg.matvec(a, ns[0]))


def test_inverse_det_solve():
    a = [[Fr(2), Fr(1)], [Fr(1), Fr(1)]]
    assert linalg.det(a) == 1
    assert linalg.matmul(a, linalg.inverse(a)) == linalg.identity(2)
    assert linalg.solve(a, [Fr(3), Fr(2)]) == [1, 1]


def test_solve_inconsistent():
    with pytest.raises(ValueError):
        linalg.solve([[Fr(1), Fr(1)], [Fr(2), Fr(2)]], [Fr(1), Fr(3)])


def test_independent_rows():
    rows = [[Fr(1), Fr(0)], [Fr(2), Fr(0)], [Fr(0), Fr(1)]]
    assert linalg.independent_rows(rows) == [0, 2]
