import random
from fractions import Fraction
from itertools import permutations

import pytest

from territories.errors import DimensionMismatchError
from territories.linalg import (
    RationalMatrix,
    det,
    in_row_space,
    intersect_row_spaces,
    nullspace,
    project_to_columns,
    rank,
    reduce_against,
    restrict_to_columns,
    rref,
    solve_combination,
    supported_subspace,
)


def frac_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def random_matrix(rng, nrows, ncols, lo=-5, hi=5):
    return [[Fraction(rng.randint(lo, hi)) for _ in range(ncols)] for _ in range(nrows)]


def test_rref_dependent_rows():
    rows, pivots = rref(frac_matrix([[2, 4], [1, 2]]))
    assert rows == ((Fraction(1), Fraction(2)),)
    assert pivots == (0,)


def test_rref_identity():
    eye = frac_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    rows, pivots = rref(eye)
    assert [list(r) for r in rows] == eye
    assert pivots == (0, 1, 2)


def test_rref_hand_example():
    rows, pivots = rref(frac_matrix([[0, 1, 1], [1, 0, 2]]))
    assert [list(map(int, r)) for r in rows] == [[1, 0, 2], [0, 1, 1]]
    assert pivots == (0, 1)


def test_rref_idempotent_and_preserves_row_space():
    rng = random.Random(7)
    for _ in range(30):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        r1, p1 = rref(m)
        r2, p2 = rref(r1)
        assert r1 == r2 and p1 == p2
        # mutual membership
        for row in m:
            assert in_row_space(row, r1, p1)
        for row in r1:
            combo = solve_combination([tuple(x) for x in map(tuple, m)], row)
            assert combo is not None


def test_det_against_permanent_expansion():
    rng = random.Random(11)
    for n in range(1, 5):
        for _ in range(10):
            m = random_matrix(rng, n, n)
            brute = Fraction(0)
            for perm in permutations(range(n)):
                sign = 1
                seen = list(perm)
                # count inversions for the sign
                inv = sum(1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j])
                sign = -1 if inv % 2 else 1
                term = Fraction(1)
                for i, j in enumerate(perm):
                    term *= m[i][j]
                brute += sign * term
            assert det(m) == brute


def test_det_requires_square():
    with pytest.raises(DimensionMismatchError):
        det(frac_matrix([[1, 2, 3], [4, 5, 6]]))


def test_nullspace_annihilates():
    rng = random.Random(3)
    for _ in range(20):
        nrows, ncols = rng.randint(1, 4), rng.randint(1, 6)
        m = random_matrix(rng, nrows, ncols)
        basis = nullspace(m, ncols)
        assert len(basis) == ncols - rank(m, ncols)
        for vec in basis:
            for row in m:
                assert sum(a * b for a, b in zip(row, vec)) == 0


def test_solve_combination_roundtrip():
    rng = random.Random(5)
    for _ in range(20):
        rows = [tuple(map(Fraction, r)) for r in random_matrix(rng, 3, 5)]
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in rows]
        target = [sum(c * row[j] for c, row in zip(coeffs, rows)) for j in range(5)]
        found = solve_combination(rows, target)
        assert found is not None
        rebuilt = [sum(c * row[j] for c, row in zip(found, rows)) for j in range(5)]
        assert rebuilt == target


def test_solve_combination_inconsistent():
    rows = [tuple(map(Fraction, [1, 0, 0]))]
    assert solve_combination(rows, [0, 1, 0]) is None


def test_intersection_and_supported_subspace():
    a = [tuple(map(Fraction, [1, 0, 1, 0])), tuple(map(Fraction, [0, 1, 0, 0]))]
    b = [tuple(map(Fraction, [1, 1, 1, 0])), tuple(map(Fraction, [0, 0, 0, 1]))]
    inter = intersect_row_spaces(a, b, 4)
    assert inter == (tuple(map(Fraction, [1, 1, 1, 0])),)
    sup = supported_subspace(a, [0, 2])
    assert sup == (tuple(map(Fraction, [1, 0, 1, 0])),)
    restr = restrict_to_columns(a, [0, 2])
    assert restr == (tuple(map(Fraction, [1, 1])),)
    proj = project_to_columns(a, [0, 1])
    assert rank(proj, 2) == 2


def test_reduce_against_reports_membership():
    basis, pivots = rref(frac_matrix([[1, 0, 2], [0, 1, 1]]))
    inside = [3, -1, 5]
    assert all(x == 0 for x in reduce_against(inside, basis, pivots))
    outside = [0, 0, 1]
    assert any(x != 0 for x in reduce_against(outside, basis, pivots))


def test_rational_matrix_wrapper():
    m = RationalMatrix([[2, 4], [1, 3]])
    reduced, pivots = m.rref()
    assert pivots == (0, 1)
    assert m.rank() == 2
    assert m.det() == Fraction(2)
    assert m == RationalMatrix([[2, 4], [1, 3]])
    assert hash(m) == hash(RationalMatrix([[2, 4], [1, 3]]))
