"""Branch-level morphisms: join, restriction, contraction, and gluing data.

These are the point-level operations relating a multibranch singularity
to singularities on subsets of its branches: restriction projects onto a
set of branches, contraction intersects with it, and join rebuilds a
decomposable point from parts.  The gluing homomorphism recovers how a
point differs from the join of its two sides, and the Isom-Hilb data
packages the rank-``gamma + 1`` quotient gluing of two restrictions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import AlgebraElement, ConductanceVector, Monomial
from .errors import (
    AmbientMismatchError,
    CorankMismatchError,
    GluingNotAnnihilatingError,
    GluingNotMultiplicativeError,
    PreconditionViolatedError,
)
from .points import SubalgebraPoint, make_point

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class BranchSplit:
    """A partition of the branch indices into two nonempty blocks."""

    ambient: ConductanceVector
    inside: tuple[int, ...]
    outside: tuple[int, ...]

    @classmethod
    def of(cls, ambient: ConductanceVector, inside: Sequence[int]) -> "BranchSplit":
        chosen = tuple(sorted(set(inside)))
        rest = tuple(i for i in range(1, ambient.m + 1) if i not in set(chosen))
        if not chosen or not rest:
            raise PreconditionViolatedError("both blocks of a branch split must be nonempty")
        if chosen[0] < 1 or chosen[-1] > ambient.m:
            raise PreconditionViolatedError(f"branch indices {chosen} out of range")
        return cls(ambient, chosen, rest)


@dataclass(frozen=True)
class StratumLabel:
    g_inside: int
    g_outside: int


def _branch_columns(ambient: ConductanceVector, branches: Sequence[int]) -> list[int]:
    chosen = set(branches)
    return [j for j, m in enumerate(ambient.monomials()) if m.branch in chosen]


def restrict(point: SubalgebraPoint, branches: Sequence[int]) -> SubalgebraPoint:
    """Image of the point under projection to a subset of branches."""
    branches = sorted(set(branches))
    target = point.ambient.restrict(branches)
    cols = _branch_columns(point.ambient, branches)
    rows = linalg.project_to_columns(point.matrix, cols) if point.matrix else ()
    return make_point(target, [tuple(r) for r in rows])


def contract(point: SubalgebraPoint, branches: Sequence[int]) -> SubalgebraPoint:
    """Intersection of the point with the span of a subset of branches."""
    branches = sorted(set(branches))
    target = point.ambient.restrict(branches)
    cols = _branch_columns(point.ambient, branches)
    rows = linalg.restrict_to_columns(point.matrix, cols) if point.matrix else ()
    return make_point(target, [tuple(r) for r in rows])


def stratum_label(point: SubalgebraPoint, split: BranchSplit) -> StratumLabel:
    if split.ambient != point.ambient:
        raise AmbientMismatchError("split does not match the point's ambient")
    g_in = contract(point, split.inside).genus
    g_out = restrict(point, split.outside).genus
    if g_in + g_out != point.genus:
        raise AssertionError("rank-nullity violated; this is a bug")
    return StratumLabel(g_inside=g_in, g_outside=g_out)


def join(
    points: Sequence[SubalgebraPoint],
    partition: Sequence[Sequence[int]],
    ambient: ConductanceVector | None = None,
) -> SubalgebraPoint:
    """Transverse union along a set partition of the branch indices.

    ``partition[k]`` lists the 1-based target branches carrying
    ``points[k]``; its sorted order matches the branch order of the part.
    """
    if len(points) != len(partition):
        raise AmbientMismatchError("one point per partition part is required")
    parts = [tuple(sorted(set(p))) for p in partition]
    flat = [i for part in parts for i in part]
    m = len(flat)
    if sorted(flat) != list(range(1, m + 1)):
        raise AmbientMismatchError("partition parts must be disjoint and cover all branches")
    c = [0] * m
    for part, point in zip(parts, points):
        if len(part) != point.ambient.m:
            raise AmbientMismatchError("part size does not match the point's branch count")
        for pos, branch in enumerate(part):
            c[branch - 1] = point.ambient.c[pos]
    derived = ConductanceVector(c)
    if ambient is not None and ambient != derived:
        raise AmbientMismatchError(f"partition assembles {derived}, not {ambient}")
    rows: list[AlgebraElement] = []
    for part, point in zip(parts, points):
        for element in point.rows_as_elements():
            coeffs = {
                Monomial(part[k.branch - 1], k.exponent): v for k, v in element.coeffs.items()
            }
            rows.append(AlgebraElement(derived, coeffs))
    return make_point(derived, rows)


@dataclass(frozen=True)
class GluingHom:
    """Linear map from the outside part's maximal ideal into the inside span.

    Rows of ``matrix`` are images of the RREF basis rows of the outside
    point, written over the monomial basis of the inside sub-vector.
    """

    split: BranchSplit
    inside_point: SubalgebraPoint
    outside_point: SubalgebraPoint
    matrix: tuple[Vector, ...]

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.matrix)

    def image_elements(self) -> tuple[AlgebraElement, ...]:
        inside_ambient = self.inside_point.ambient
        return tuple(AlgebraElement.from_vector(inside_ambient, row) for row in self.matrix)

    def to_json(self) -> dict:
        return {
            "inside": list(self.split.inside),
            "outside": list(self.split.outside),
            "matrix": [[str(x) for x in row] for row in self.matrix],
        }


def _exact_gluing_representative(
    inside: SubalgebraPoint, outside: SubalgebraPoint, phi0: tuple[Vector, ...]
) -> tuple[Vector, ...] | None:
    """An exactly multiplicative, exactly annihilating map in ``phi0``'s coset.

    The point determines the gluing map only modulo maps into the inside
    part, so we search ``phi0 + psi`` with ``psi`` valued in the inside
    row space.  Annihilation is linear in ``psi``; on the annihilating
    affine subspace the pairwise products of images are constant, which
    turns multiplicativity into linear conditions too.  Returns None when
    no exact representative exists.
    """
    k_out = outside.rank
    k_in = inside.rank
    if k_out == 0:
        return ()
    if k_in == 0:
        return phi0  # nothing to annihilate and closure already gives equality
    n_in = inside.ambient.maximal_rank
    in_elems = inside.rows_as_elements()
    phi0_elems = [AlgebraElement.from_vector(inside.ambient, row) for row in phi0]
    unknowns = k_out * k_in

    equations: list[Vector] = []
    rhs: list[Fraction] = []
    for r in range(k_out):
        for j, b in enumerate(in_elems):
            base = (phi0_elems[r] * b).maximal_vector()
            mult_rows = [(in_elems[t] * b).maximal_vector() for t in range(k_in)]
            for col in range(n_in):
                coeffs = [ZERO] * unknowns
                for t in range(k_in):
                    coeffs[r * k_in + t] = mult_rows[t][col]
                equations.append(tuple(coeffs))
                rhs.append(-base[col])
    columns = [tuple(eq[u] for eq in equations) for u in range(unknowns)]
    particular = linalg.solve_combination(columns, rhs)
    if particular is None:
        return None
    homogeneous = linalg.nullspace(equations, unknowns)

    def reshape(vec: Sequence[Fraction]) -> list[Vector]:
        rows = []
        for r in range(k_out):
            acc = [ZERO] * n_in
            for t in range(k_in):
                coef = vec[r * k_in + t]
                if coef != 0:
                    acc = [a + coef * b for a, b in zip(acc, inside.matrix[t])]
            rows.append(tuple(acc))
        return rows

    psi_a = reshape(particular)
    phi1 = [tuple(a + b for a, b in zip(row, psi)) for row, psi in zip(phi0, psi_a)]
    phi1_elems = [AlgebraElement.from_vector(inside.ambient, row) for row in phi1]
    shifts = [reshape(h) for h in homogeneous]

    out_elems = outside.rows_as_elements()
    mult_eqs: list[Vector] = []
    mult_rhs: list[Fraction] = []
    for r in range(k_out):
        for s in range(r, k_out):
            product = out_elems[r] * out_elems[s]
            mu = linalg.solve_combination(outside.matrix, product.maximal_vector())
            if mu is None:
                raise AssertionError("outside point is not closed; this is a bug")
            target = (phi1_elems[r] * phi1_elems[s]).maximal_vector()
            base = [ZERO] * n_in
            for coef, row in zip(mu, phi1):
                if coef != 0:
                    base = [a + coef * b for a, b in zip(base, row)]
            for col in range(n_in):
                coeffs = [
                    sum((mu[t] * shift[t][col] for t in range(k_out)), ZERO)
                    for shift in shifts
                ]
                mult_eqs.append(tuple(coeffs))
                mult_rhs.append(target[col] - base[col])
    if shifts:
        cols = [tuple(eq[v] for eq in mult_eqs) for v in range(len(shifts))]
        lam = linalg.solve_combination(cols, mult_rhs)
    else:
        lam = () if all(x == 0 for x in mult_rhs) else None
    if lam is None:
        return None
    final = [list(row) for row in phi1]
    for coef, shift in zip(lam, shifts):
        if coef != 0:
            for r in range(k_out):
                final[r] = [a + coef * b for a, b in zip(final[r], shift[r])]
    return tuple(tuple(row) for row in final)


def extract_gluing(point: SubalgebraPoint, split: BranchSplit) -> tuple[SubalgebraPoint, SubalgebraPoint, GluingHom]:
    """Decompose a point into (contraction, restriction, gluing map).

    The gluing map sends each basis row ``b'`` of the restriction to the
    inside component of a lift of ``b'`` into the point.  The lift is
    determined only modulo the contraction; an exactly multiplicative and
    annihilating representative is preferred when one exists, otherwise
    the reduced (pivot-free) representative is returned.
    """
    if split.ambient != point.ambient:
        raise AmbientMismatchError("split does not match the point's ambient")
    inside = contract(point, split.inside)
    outside = restrict(point, split.outside)
    in_cols = _branch_columns(point.ambient, split.inside)
    out_cols = _branch_columns(point.ambient, split.outside)
    images = []
    for row in outside.matrix:
        coeffs = linalg.solve_combination(
            [tuple(brow[j] for j in out_cols) for brow in point.matrix], row
        )
        if coeffs is None:
            raise AssertionError("restriction row fails to lift; this is a bug")
        lift = [ZERO] * len(in_cols)
        for coef, brow in zip(coeffs, point.matrix):
            if coef != 0:
                lift = [a + coef * brow[j] for a, j in zip(lift, in_cols)]
        reduced = linalg.reduce_against(lift, inside.matrix, inside.pivots)
        images.append(tuple(reduced))
    repaired = _exact_gluing_representative(inside, outside, tuple(images))
    hom = GluingHom(
        split=split,
        inside_point=inside,
        outside_point=outside,
        matrix=repaired if repaired is not None else tuple(images),
    )
    return inside, outside, hom


def _validate_gluing(hom: GluingHom):
    inside = hom.inside_point
    outside = hom.outside_point
    if len(hom.matrix) != outside.rank:
        raise CorankMismatchError("gluing matrix must have one row per outside basis row")
    images = hom.image_elements()
    inside_rows = inside.rows_as_elements()
    # exact annihilation of the inside maximal part
    for r, img in enumerate(images):
        for b in inside_rows:
            if not (img * b).is_zero():
                raise GluingNotAnnihilatingError(
                    f"image of outside row {r} does not annihilate the inside part",
                    row=r,
                    product=(img * b).to_json(),
                )
    # exact multiplicativity on basis pairs
    outside_rows = outside.rows_as_elements()
    for r in range(len(outside_rows)):
        for s in range(r, len(outside_rows)):
            product = outside_rows[r] * outside_rows[s]
            coeffs = linalg.solve_combination(outside.matrix, product.maximal_vector())
            if coeffs is None:
                raise AssertionError("outside point is not closed; this is a bug")
            expected = AlgebraElement(inside.ambient, {})
            for coef, img in zip(coeffs, images):
                expected = expected + img.scale(coef)
            if images[r] * images[s] != expected:
                raise GluingNotMultiplicativeError(
                    f"gluing map is not multiplicative on rows {r}, {s}",
                    rows=[r, s],
                )


def assemble_from_gluing(
    inside_point: SubalgebraPoint,
    outside_point: SubalgebraPoint,
    hom: GluingHom,
) -> SubalgebraPoint:
    """Inverse of :func:`extract_gluing` for validated gluing data."""
    split = hom.split
    if hom.inside_point != inside_point or hom.outside_point != outside_point:
        raise AmbientMismatchError("gluing map was extracted from different points")
    _validate_gluing(hom)
    ambient = split.ambient
    in_cols = _branch_columns(ambient, split.inside)
    out_cols = _branch_columns(ambient, split.outside)
    n = ambient.maximal_rank
    rows: list[Vector] = []
    for row in inside_point.matrix:
        full = [ZERO] * n
        for j, val in zip(in_cols, row):
            full[j] = val
        rows.append(tuple(full))
    for out_row, in_row in zip(outside_point.matrix, hom.matrix):
        full = [ZERO] * n
        for j, val in zip(out_cols, out_row):
            full[j] = val
        for j, val in zip(in_cols, in_row):
            full[j] = val
        rows.append(tuple(full))
    return make_point(ambient, rows)


class QuotientAlgebra:
    """Finite quotient ``B / Z`` presented by structure constants.

    Coset representatives are the constant together with the basis rows of
    the point that complete an RREF basis of the ideal; products of
    representatives are reduced modulo the ideal.
    """

    __slots__ = ("point", "ideal", "ideal_pivots", "reps", "table")

    def __init__(self, point: SubalgebraPoint, ideal_rows: Sequence[Vector]):
        self.point = point
        ideal, ideal_pivots = linalg.rref(ideal_rows, point.ambient.maximal_rank)
        for row in ideal:
            if not point.contains_vector(row):
                raise PreconditionViolatedError("ideal rows must lie in the point")
        self.ideal = ideal
        self.ideal_pivots = ideal_pivots
        # ideal property: Z * m_B inside Z
        for z in ideal:
            zel = AlgebraElement.from_vector(point.ambient, z)
            for b in point.rows_as_elements():
                prod = (zel * b).maximal_vector()
                if not linalg.in_row_space(prod, ideal, ideal_pivots):
                    raise PreconditionViolatedError(
                        "rows do not generate an ideal of the point"
                    )
        reps: list[AlgebraElement] = [AlgebraElement.one(point.ambient)]
        span = list(ideal)
        span_piv = list(ideal_pivots)
        for row in point.matrix:
            residual = linalg.reduce_against(row, span, span_piv)
            if any(x != 0 for x in residual):
                reps.append(AlgebraElement.from_vector(point.ambient, row))
                new_rows, new_piv = linalg.rref([*span, row])
                span, span_piv = list(new_rows), list(new_piv)
        self.reps = tuple(reps)
        self.table = {
            (i, j): self._reduce(self.reps[i] * self.reps[j])
            for i in range(len(reps))
            for j in range(i, len(reps))
        }

    @property
    def rank(self) -> int:
        return len(self.reps)

    def _reduce(self, element: AlgebraElement) -> Vector:
        """Coset coordinates of an element of B over the representatives."""
        rep_rows = [r.maximal_vector() for r in self.reps[1:]]
        coeffs = linalg.solve_combination(
            list(self.ideal) + rep_rows, element.maximal_vector()
        )
        if coeffs is None:
            raise PreconditionViolatedError("element does not lie in the algebra")
        return (element.constant_coefficient(),) + tuple(coeffs[len(self.ideal):])

    def coset(self, element: AlgebraElement) -> Vector:
        return self._reduce(element)

    def multiply_cosets(self, x: Vector, y: Vector) -> Vector:
        out = [ZERO] * self.rank
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                key = (i, j) if i <= j else (j, i)
                for t, val in enumerate(self.table[key]):
                    out[t] += xi * yj * val
        return tuple(out)


@dataclass(frozen=True)
class IsomHilbData:
    """Gluing data of two branch restrictions along a shared quotient."""

    split_one: tuple[int, ...]
    split_two: tuple[int, ...]
    g_one: int
    g_two: int
    gamma: int
    restriction_one: SubalgebraPoint
    restriction_two: SubalgebraPoint
    ideal_one: tuple[Vector, ...]  # inside restriction_one's coordinates
    ideal_two: tuple[Vector, ...]
    quotient_one: QuotientAlgebra
    quotient_two: QuotientAlgebra
    iso: tuple[Vector, ...]  # coset basis of Q1 -> coset coordinates in Q2

    def to_json(self) -> dict:
        return {
            "I1": list(self.split_one),
            "I2": list(self.split_two),
            "g1": self.g_one,
            "g2": self.g_two,
            "gamma": self.gamma,
            "quotient_rank": self.gamma + 1,
            "iso": [[str(x) for x in row] for row in self.iso],
        }


def isom_hilb_data(point: SubalgebraPoint, one: Sequence[int], two: Sequence[int]) -> IsomHilbData:
    """Extract the Isom-Hilb gluing data of a point along two branch blocks."""
    split = BranchSplit.of(point.ambient, one)
    if tuple(sorted(set(two))) != split.outside:
        raise PreconditionViolatedError("the two branch blocks must be complementary")
    b1 = restrict(point, split.inside)
    b2 = restrict(point, split.outside)
    g1, g2 = b1.genus, b2.genus
    gamma = point.genus - g1 - g2
    z1 = contract(point, split.inside)  # ideal of B1: m_B cap m_{I1}
    z2 = contract(point, split.outside)
    q1 = QuotientAlgebra(b1, z1.matrix)
    q2 = QuotientAlgebra(b2, z2.matrix)
    if q1.rank != gamma + 1 or q2.rank != gamma + 1:
        raise AssertionError("quotient rank disagrees with the gluing genus; this is a bug")
    in_cols = _branch_columns(point.ambient, split.inside)
    out_cols = _branch_columns(point.ambient, split.outside)
    restricted = [tuple(row[j] for j in in_cols) for row in point.matrix]
    iso_rows: list[Vector] = []
    for rep in q1.reps:
        # lift rep through the point: find x in B whose inside projection is rep
        const = rep.constant_coefficient()
        coeffs = linalg.solve_combination(restricted, rep.maximal_vector())
        if coeffs is None:
            raise AssertionError("quotient representative fails to lift; this is a bug")
        out_vec = [ZERO] * len(out_cols)
        for coef, row in zip(coeffs, point.matrix):
            if coef != 0:
                out_vec = [a + coef * row[j] for a, j in zip(out_vec, out_cols)]
        lifted = AlgebraElement.from_vector(b2.ambient, out_vec, const=const)
        iso_rows.append(q2.coset(lifted))
    return IsomHilbData(
        split_one=split.inside,
        split_two=split.outside,
        g_one=g1,
        g_two=g2,
        gamma=gamma,
        restriction_one=b1,
        restriction_two=b2,
        ideal_one=z1.matrix,
        ideal_two=z2.matrix,
        quotient_one=q1,
        quotient_two=q2,
        iso=tuple(iso_rows),
    )


def isom_hilb_assemble(
    b1: SubalgebraPoint,
    b2: SubalgebraPoint,
    ideal_one: Sequence[Vector],
    ideal_two: Sequence[Vector],
    iso: Sequence[Vector],
    partition: tuple[Sequence[int], Sequence[int]],
) -> SubalgebraPoint:
    """Glue two restrictions along an isomorphism of their quotients.

    ``ideal_one`` and ``ideal_two`` define the quotients; ``iso`` maps
    coset coordinates of the first quotient to the second.  The result is
    the subalgebra of compatible pairs, with its corank certified.
    """
    one, two = (tuple(sorted(set(p))) for p in partition)
    q1 = QuotientAlgebra(b1, tuple(ideal_one))
    q2 = QuotientAlgebra(b2, tuple(ideal_two))
    if q1.rank != q2.rank:
        raise CorankMismatchError(
            f"quotient ranks {q1.rank} and {q2.rank} disagree",
            ranks=[q1.rank, q2.rank],
        )
    iso = tuple(tuple(Fraction(x) for x in row) for row in iso)
    if len(iso) != q1.rank or any(len(r) != q2.rank for r in iso):
        raise CorankMismatchError("iso matrix shape does not match the quotient ranks")
    if linalg.rank(iso, q2.rank) != q1.rank:
        raise CorankMismatchError("iso matrix is not invertible")

    def apply_iso(x: Vector) -> Vector:
        out = [ZERO] * q2.rank
        for xi, row in zip(x, iso):
            if xi != 0:
                out = [a + xi * b for a, b in zip(out, row)]
        return tuple(out)

    unit = tuple([ONE] + [ZERO] * (q1.rank - 1))
    if apply_iso(unit) != unit:
        raise PreconditionViolatedError("quotient isomorphism must be unital")
    for i in range(q1.rank):
        for j in range(i, q1.rank):
            e_i = tuple(ONE if t == i else ZERO for t in range(q1.rank))
            e_j = tuple(ONE if t == j else ZERO for t in range(q1.rank))
            left = apply_iso(q1.multiply_cosets(e_i, e_j))
            right = q2.multiply_cosets(apply_iso(e_i), apply_iso(e_j))
            if left != right:
                raise PreconditionViolatedError(
                    "quotient isomorphism is not multiplicative",
                    pair=[i, j],
                )

    # solve for pairs (b1, b2) with matching constants and matching cosets
    m = len(one) + len(two)
    if sorted(one + two) != list(range(1, m + 1)):
        raise AmbientMismatchError("the two blocks must partition the branch indices")
    if len(one) != b1.ambient.m or len(two) != b2.ambient.m:
        raise AmbientMismatchError("block sizes do not match the restriction ambients")
    c = [0] * m
    for pos, branch in enumerate(one):
        c[branch - 1] = b1.ambient.c[pos]
    for pos, branch in enumerate(two):
        c[branch - 1] = b2.ambient.c[pos]
    ambient = ConductanceVector(c)
    n = ambient.maximal_rank
    one_cols = _branch_columns(ambient, one)
    two_cols = _branch_columns(ambient, two)
    k1, k2 = b1.rank, b2.rank
    unknowns = 1 + k1 + k2
    conditions: list[Vector] = []
    q1_of_unknown: list[Vector] = [q1.coset(AlgebraElement.one(b1.ambient))]
    q1_of_unknown += [q1.coset(e) for e in b1.rows_as_elements()]
    q1_of_unknown += [tuple([ZERO] * q1.rank)] * k2
    q2_of_unknown: list[Vector] = [q2.coset(AlgebraElement.one(b2.ambient))]
    q2_of_unknown += [tuple([ZERO] * q2.rank)] * k1
    q2_of_unknown += [q2.coset(e) for e in b2.rows_as_elements()]
    for t in range(q2.rank):
        conditions.append(
            tuple(apply_iso(q1_of_unknown[u])[t] - q2_of_unknown[u][t] for u in range(unknowns))
        )
    solutions = linalg.nullspace(conditions, unknowns)
    full_rows: list[Vector] = []
    for sol in solutions:
        vec = [ZERO] * (n + 1)
        vec[0] = sol[0]
        for coef, row in zip(sol[1 : 1 + k1], b1.matrix):
            if coef != 0:
                for pos, j in enumerate(one_cols):
                    vec[1 + j] += coef * row[pos]
        for coef, row in zip(sol[1 + k1 :], b2.matrix):
            if coef != 0:
                for pos, j in enumerate(two_cols):
                    vec[1 + j] += coef * row[pos]
        full_rows.append(tuple(vec))
    reduced, pivots = linalg.rref(full_rows, n + 1)
    maximal = [row[1:] for row in reduced if row[0] == 0]
    assembled = make_point(ambient, maximal)
    expected = q1.point.genus + q2.point.genus + (q1.rank - 1)
    if assembled.genus != expected:
        raise CorankMismatchError(
            f"assembled point has genus {assembled.genus}, expected {expected}",
            genus=assembled.genus,
            expected=expected,
        )
    return assembled


def gorenstein_contraction_check(point: SubalgebraPoint, split: BranchSplit) -> dict:
    """Contraction bookkeeping for an exact-conductance Gorenstein point."""
    _, exact = point.exact_conductances()
    if not exact or not point.is_gorenstein_profile():
        raise PreconditionViolatedError(
            "the point must have exact conductances and a Gorenstein profile"
        )
    c = point.ambient.c
    label = stratum_label(point, split)
    c_outside = sum(c[i - 1] for i in split.outside)
    threshold = 2 * label.g_outside + 2 * len(split.outside)
    contracted = contract(point, split.inside)
    contracted_window = 2 * (contracted.genus + len(split.inside) - 1)
    contraction_exact = contracted.exact_conductances()[1]
    contraction_gorenstein = contraction_exact and sum(
        c[i - 1] for i in split.inside
    ) == contracted_window
    small_branches = {}
    for i in range(1, point.ambient.m + 1):
        if c[i - 1] in (2, 3):
            small_branches[i] = restrict(point, [i]).genus
    report = {
        "c_outside": c_outside,
        "threshold": threshold,
        "equality": c_outside == threshold,
        "contraction_gorenstein": contraction_gorenstein,
        "consistent": (c_outside == threshold) == contraction_gorenstein,
        "small_branch_restriction_genus": small_branches,
        "small_branches_smooth": all(g == 0 for g in small_branches.values()),
    }
    return report
