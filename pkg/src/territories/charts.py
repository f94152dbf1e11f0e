"""Defining equations of territory charts, based territories, and spines.

Chart equations express closure under multiplication of a universal basis
``f_i = e_i + sum_j x_{i,j} e_j`` indexed by a pivot set of monomials;
based equations are the maximal minors of augmented product matrices for
a universal full-rank coefficient matrix.  Spines are the square-zero
sub-Grassmannians whose dimensions drive the smoothability bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from . import linalg
from .algebra import AlgebraElement, ConductanceVector, Monomial, mono_product
from .errors import EmptySpineError, InvalidChartError, ResourceCapError
from .points import SubalgebraPoint, make_point
from .polynomials import MultiPoly, det_poly, grevlex_key


@dataclass(frozen=True)
class ChartIdeal:
    """Integer polynomial equations for a chart or a based territory."""

    kind: str  # "chart" | "based"
    ambient: ConductanceVector
    genus: int
    pivots: tuple[Monomial, ...] | None
    variables: tuple[str, ...]
    generators: tuple[MultiPoly, ...]
    cover_minors: tuple[MultiPoly, ...] = ()
    minor_degree: int | None = None

    def to_json(self) -> dict:
        data = {
            "kind": self.kind,
            "c": list(self.ambient.c),
            "g": self.genus,
            "variables": list(self.variables),
            "generators": [g.text() for g in self.generators],
        }
        if self.pivots is not None:
            data["pivots"] = [m.name() for m in self.pivots]
        if self.kind == "based":
            data["cover_minors"] = [g.text() for g in self.cover_minors]
            data["minor_degree"] = self.minor_degree
        return data


def _sorted_unique(polys: list[MultiPoly]) -> tuple[MultiPoly, ...]:
    """Sign-normalize, deduplicate, drop zeros, and sort deterministically."""
    seen = {}
    for p in polys:
        if p.is_zero():
            continue
        p = p.sign_normalized()
        seen.setdefault(p, None)
    return tuple(sorted(seen, key=lambda p: (grevlex_key(p.leading()[0]), p.text())))


def chart_variable(pivot: Monomial, nonpivot: Monomial) -> str:
    return f"x_{pivot.slug()}_{nonpivot.slug()}"


def chart_equations(ambient: ConductanceVector, genus: int, pivots: Sequence[Monomial]) -> ChartIdeal:
    """Equations of the chart of the territory indexed by a pivot set.

    The pivot set selects which monomial coordinates carry the identity
    block of the universal basis; its size must be the subspace dimension
    ``(sum c_i) - m - genus``.  Zero generators are dropped: an empty list
    means the chart is all of affine space.
    """
    monos = ambient.monomials()
    order = {m: i for i, m in enumerate(monos)}
    pivots = sorted(set(pivots), key=lambda m: order.get(m, -1))
    for m in pivots:
        if m not in order:
            raise InvalidChartError(f"{m!r} is not a monomial of the ambient {ambient}")
    expected = ambient.maximal_rank - genus
    if expected < 0 or len(pivots) != expected:
        raise InvalidChartError(
            f"pivot set of size {len(pivots)} does not match corank-{genus} subspaces "
            f"of rank {ambient.maximal_rank}"
        )
    nonpivots = [m for m in monos if m not in set(pivots)]
    varnames = tuple(chart_variable(p, q) for p in pivots for q in nonpivots)
    var_of = {
        (p, q): MultiPoly.variable(varnames, chart_variable(p, q)) for p in pivots for q in nonpivots
    }
    zero = MultiPoly.zero(varnames)
    one = MultiPoly.const(varnames, 1)

    # universal basis rows f_p = e_p + sum_q x_{p,q} e_q
    rows: dict[Monomial, dict[Monomial, MultiPoly]] = {}
    for p in pivots:
        row = {p: one}
        for q in nonpivots:
            row[q] = var_of[(p, q)]
        rows[p] = row

    generators: list[MultiPoly] = []
    for a_idx, alpha in enumerate(pivots):
        for beta in pivots[a_idx:]:
            coeff: dict[Monomial, MultiPoly] = {}
            for m1, p1 in rows[alpha].items():
                for m2, p2 in rows[beta].items():
                    m = mono_product(m1, m2, ambient)
                    if m is None:
                        continue
                    coeff[m] = coeff.get(m, zero) + p1 * p2
            for q in nonpivots:
                gen = coeff.get(q, zero)
                for p in pivots:
                    a_p = coeff.get(p)
                    if a_p is not None:
                        gen = gen - a_p * var_of[(p, q)]
                generators.append(gen)

    return ChartIdeal(
        kind="chart",
        ambient=ambient,
        genus=genus,
        pivots=tuple(pivots),
        variables=varnames,
        generators=_sorted_unique(generators),
    )


def based_variable(mono: Monomial, column: int) -> str:
    return f"x_{mono.slug()}_{column}"


def based_equations(ambient: ConductanceVector, genus: int) -> ChartIdeal:
    """Determinantal equations of the based territory.

    Emits every maximal minor of the augmented matrix ``[X | a(X)]`` for
    each product of universal columns, together with the maximal minors of
    ``X`` itself whose non-vanishing covers the full-rank locus.
    """
    n = ambient.maximal_rank
    k = n - genus
    if k < 1:
        raise InvalidChartError(f"based equations need rank {n} - genus {genus} >= 1")
    if k + 1 > 8:
        raise ResourceCapError(
            f"augmented minors of size {k + 1} exceed the desk-scale determinant cap of 8"
        )
    monos = ambient.monomials()
    varnames = tuple(based_variable(m, alpha) for m in monos for alpha in range(1, k + 1))
    x = {
        (m, alpha): MultiPoly.variable(varnames, based_variable(m, alpha))
        for m in monos
        for alpha in range(1, k + 1)
    }
    zero = MultiPoly.zero(varnames)

    generators: list[MultiPoly] = []
    for alpha in range(1, k + 1):
        for beta in range(alpha, k + 1):
            coeff: dict[Monomial, MultiPoly] = {}
            for m1 in monos:
                for m2 in monos:
                    m = mono_product(m1, m2, ambient)
                    if m is None:
                        continue
                    coeff[m] = coeff.get(m, zero) + x[(m1, alpha)] * x[(m2, beta)]
            augmented = [
                [x[(m, col)] for col in range(1, k + 1)] + [coeff.get(m, zero)] for m in monos
            ]
            for rows in combinations(range(n), k + 1):
                generators.append(det_poly([augmented[r] for r in rows]))

    plain = [[x[(m, col)] for col in range(1, k + 1)] for m in monos]
    cover = [det_poly([plain[r] for r in rows]) for rows in combinations(range(n), k)]

    return ChartIdeal(
        kind="based",
        ambient=ambient,
        genus=genus,
        pivots=None,
        variables=varnames,
        generators=_sorted_unique(generators),
        cover_minors=_sorted_unique(cover),
        minor_degree=k + 2,
    )


def chart_coordinates(point: SubalgebraPoint, pivots: Sequence[Monomial]) -> dict[str, Fraction] | None:
    """Coordinates of a point in the chart of a pivot set, or None.

    The point lies in the chart exactly when its basis matrix restricted to
    the pivot columns is invertible.
    """
    monos = point.ambient.monomials()
    order = {m: i for i, m in enumerate(monos)}
    pivots = sorted(set(pivots), key=lambda m: order[m])
    if len(pivots) != point.rank:
        return None
    pivot_cols = [order[m] for m in pivots]
    block = [[row[j] for j in pivot_cols] for row in point.matrix]
    if linalg.det(block) == 0:
        return None
    # solve P Y = M so that Y has the identity block on pivot columns
    stacked = [list(b) + list(row) for b, row in zip(block, point.matrix)]
    reduced, _ = linalg.rref(stacked)
    coords: dict[str, Fraction] = {}
    nonpivots = [m for m in monos if m not in set(pivots)]
    for r, p in enumerate(pivots):
        for q in nonpivots:
            coords[chart_variable(p, q)] = reduced[r][len(pivots) + order[q]]
    return coords


def evaluate_ideal(ideal: ChartIdeal, assignment: Mapping[str, Fraction]) -> list[Fraction]:
    return [g.evaluate(assignment) for g in ideal.generators]


@dataclass(frozen=True)
class SpineDescriptor:
    """Grassmannian shape of a spine or a spine intersection."""

    ambient: ConductanceVector
    genus: int
    subspace_dim: int  # points parametrize subspaces of this dimension
    space_dim: int  # inside a square-zero ideal of this rank
    dimension: int
    empty: bool

    def to_json(self) -> dict:
        return {
            "c": list(self.ambient.c),
            "g": self.genus,
            "grassmannian": [self.subspace_dim, self.space_dim],
            "dimension": self.dimension,
            "empty": self.empty,
        }


def spine(ambient: ConductanceVector, genus: int) -> SpineDescriptor:
    """The square-zero sub-Grassmannian of the territory."""
    k = ambient.total - ambient.m - genus
    n = sum(ci // 2 for ci in ambient.c)
    return SpineDescriptor(
        ambient=ambient,
        genus=genus,
        subspace_dim=k,
        space_dim=n,
        dimension=max(k * (n - k), 0),
        empty=k < 0 or k > n,
    )


def spine_relative_dimension(ambient: ConductanceVector, genus: int) -> int:
    """The closed-form spine dimension ``(c-m-g)(g+m-c/2-p/2)``, floored at 0."""
    c = ambient.total
    m = ambient.m
    p = sum(1 for ci in ambient.c if ci % 2 == 1)
    value = Fraction(c - m - genus) * (genus + m - Fraction(c, 2) - Fraction(p, 2))
    assert value.denominator == 1
    return max(int(value), 0)


def spine_intersection(
    ambient: ConductanceVector, vectors: Sequence[ConductanceVector], genus: int
) -> SpineDescriptor:
    """Grassmannian shape of an intersection of spines inside one territory."""
    if not vectors:
        raise ValueError("at least one conductance vector is required")
    for v in vectors:
        if not ambient.dominates(v):
            raise InvalidChartError(f"{v} is not componentwise <= the ambient {ambient}")
    m = ambient.m
    c_min = [min(v.c[i] for v in vectors) for i in range(m)]
    c_max = [max(v.c[i] for v in vectors) for i in range(m)]
    k = sum(c_min) - genus - m
    n = sum(lo - (hi + 1) // 2 for lo, hi in zip(c_min, c_max))
    return SpineDescriptor(
        ambient=ambient,
        genus=genus,
        subspace_dim=k,
        space_dim=n,
        dimension=max(k * (n - k), 0),
        empty=k < 0 or k > n,
    )


def spine_monomials(ambient: ConductanceVector) -> list[Monomial]:
    """Monomials spanning the square-zero ideal: exponents >= ceil(c_i / 2)."""
    return [m for m in ambient.monomials() if m.exponent >= (ambient.c[m.branch - 1] + 1) // 2]


def random_spine_point(ambient: ConductanceVector, genus: int, seed: int | random.Random = 0) -> SubalgebraPoint:
    """A random point of the spine; always closed (the span is square-zero)."""
    desc = spine(ambient, genus)
    if desc.empty:
        raise EmptySpineError(
            f"spine of genus {genus} in {ambient} is empty",
            grassmannian=[desc.subspace_dim, desc.space_dim],
        )
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    span = spine_monomials(ambient)
    k = desc.subspace_dim
    if k == 0:
        return make_point(ambient, [])
    while True:
        rows = [[Fraction(rng.randint(-9, 9)) for _ in span] for _ in range(k)]
        if linalg.rank(rows, len(span)) == k:
            break
    elements = []
    for row in rows:
        coeffs = {mono: val for mono, val in zip(span, row)}
        elements.append(AlgebraElement(ambient, coeffs))
    return make_point(ambient, elements)
