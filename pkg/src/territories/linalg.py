"""Exact linear algebra over the rationals.

Matrices are immutable tuples of tuples of :class:`fractions.Fraction`.
The reduced row echelon form (with zero rows dropped) is the canonical
form used to represent row spaces throughout the package: it is unique
for a given row space, so equality of subspaces is equality of RREFs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatchError

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def _as_vector(row: Iterable) -> Vector:
    return tuple(Fraction(x) for x in row)


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped.

    Returns ``(rows, pivot_columns)``.  Row space is preserved; the result
    is the unique RREF basis of the row space.
    """
    work = [list(_as_vector(r)) for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    for r in work:
        if len(r) != ncols:
            raise DimensionMismatchError("rows of unequal length")
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = ONE / work[r][col]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[0])


def reduce_against(vector: Sequence, basis: Sequence[Vector], pivots: Sequence[int]) -> Vector:
    """Residual of ``vector`` after eliminating the pivots of an RREF basis."""
    v = list(_as_vector(vector))
    for row, p in zip(basis, pivots):
        c = v[p]
        if c != 0:
            v = [a - c * b for a, b in zip(v, row)]
    return tuple(v)


def in_row_space(vector: Sequence, basis: Sequence[Vector], pivots: Sequence[int]) -> bool:
    return all(x == 0 for x in reduce_against(vector, basis, pivots))


def coordinates_in_row_space(vector: Sequence, basis: Sequence[Vector], pivots: Sequence[int]) -> Vector | None:
    """Coefficients expressing ``vector`` in an RREF basis, or None."""
    v = _as_vector(vector)
    coeffs = tuple(v[p] for p in pivots)
    if all(x == 0 for x in reduce_against(v, basis, pivots)):
        return coeffs
    return None


def solve_combination(rows: Sequence[Vector], target: Sequence) -> Vector | None:
    """Coefficients ``x`` with ``sum x_i rows_i = target``, or None.

    Free coordinates are set to zero, so the answer is deterministic.
    """
    k = len(rows)
    tgt = _as_vector(target)
    if k == 0:
        return () if all(x == 0 for x in tgt) else None
    n = len(rows[0])
    augmented = [tuple(rows[i][j] for i in range(k)) + (tgt[j],) for j in range(n)]
    reduced, pivots = rref(augmented, k + 1)
    if k in pivots:
        return None
    x = [ZERO] * k
    for row, p in zip(reduced, pivots):
        x[p] = row[k]
    return tuple(x)


def nullspace(rows: Sequence[Sequence], ncols: int) -> tuple[Vector, ...]:
    """RREF basis of the right kernel ``{x : rows @ x = 0}``."""
    basis, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    out = []
    for j in free:
        vec = [ZERO] * ncols
        vec[j] = ONE
        for row, p in zip(basis, pivots):
            vec[p] = -row[j]
        out.append(tuple(vec))
    return rref(out, ncols)[0]


def intersect_row_spaces(a_rows: Sequence[Vector], b_rows: Sequence[Vector], ncols: int) -> tuple[Vector, ...]:
    """RREF basis of the intersection of two row spaces (Zassenhaus-free).

    Solves for combinations of ``a_rows`` lying in the span of ``b_rows`` by
    eliminating against the stacked system.
    """
    if not a_rows or not b_rows:
        return ()
    # x.a_rows = y.b_rows  <=>  (x, -y) in kernel of [a_rows; b_rows]^T
    stacked = [
        tuple(a_rows[i][c] for i in range(len(a_rows))) + tuple(b_rows[j][c] for j in range(len(b_rows)))
        for c in range(ncols)
    ]
    combos = nullspace(stacked, len(a_rows) + len(b_rows))
    vecs = []
    for combo in combos:
        v = [ZERO] * ncols
        for coef, row in zip(combo[: len(a_rows)], a_rows):
            if coef != 0:
                v = [a + coef * b for a, b in zip(v, row)]
        vecs.append(tuple(v))
    return rref(vecs, ncols)[0]


def restrict_to_columns(rows: Sequence[Vector], columns: Sequence[int]) -> tuple[Vector, ...]:
    """Rows of the row space supported only on ``columns``, restricted there.

    Input rows must be a basis; the result is an RREF basis of the
    intersection with the coordinate subspace, expressed in the selected
    coordinates.
    """
    if not rows:
        return ()
    ncols = len(rows[0])
    keep = list(columns)
    drop = [j for j in range(ncols) if j not in set(keep)]
    # combos x with x.rows vanishing on dropped columns
    system = [tuple(row[j] for row in rows) for j in drop]
    combos = nullspace(system, len(rows))
    vecs = []
    for combo in combos:
        full = [ZERO] * ncols
        for coef, row in zip(combo, rows):
            if coef != 0:
                full = [a + coef * b for a, b in zip(full, row)]
        vecs.append(tuple(full[j] for j in keep))
    return rref(vecs, len(keep))[0]


def supported_subspace(rows: Sequence[Vector], keep_columns: Sequence[int]) -> tuple[Vector, ...]:
    """Full-width RREF basis of the part of the row space vanishing off ``keep_columns``."""
    if not rows:
        return ()
    ncols = len(rows[0])
    keep = set(keep_columns)
    drop = [j for j in range(ncols) if j not in keep]
    system = [tuple(row[j] for row in rows) for j in drop]
    combos = nullspace(system, len(rows))
    vecs = []
    for combo in combos:
        full = [ZERO] * ncols
        for coef, row in zip(combo, rows):
            if coef != 0:
                full = [a + coef * b for a, b in zip(full, row)]
        vecs.append(tuple(full))
    return rref(vecs, ncols)[0]


def project_to_columns(rows: Sequence[Vector], columns: Sequence[int]) -> tuple[Vector, ...]:
    """RREF basis of the image of the row space under column projection."""
    keep = list(columns)
    return rref([tuple(row[j] for j in keep) for row in rows], len(keep))[0]


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(rows)
    work = [list(_as_vector(r)) for r in rows]
    for r in work:
        if len(r) != n:
            raise DimensionMismatchError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if swap is None:
                return ZERO
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) / prev
            work[i][k] = ZERO
        prev = work[k][k]
    return sign * work[n - 1][n - 1]


class RationalMatrix:
    """Immutable exact-rational matrix canonicalized on demand."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        self.rows = tuple(_as_vector(r) for r in rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise DimensionMismatchError("rows of unequal length")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rref(self) -> tuple["RationalMatrix", tuple[int, ...]]:
        rows, pivots = rref(self.rows, self.ncols)
        return RationalMatrix(rows, self.ncols), pivots

    def rank(self) -> int:
        return rank(self.rows, self.ncols)

    def det(self) -> Fraction:
        return det(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(map(str, r)) for r in self.rows]})"
