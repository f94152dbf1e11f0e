"""Territory points: multiplicatively closed subspaces in canonical form.

A point is the subalgebra ``B = k*1 (+) m_B`` of the ambient algebra,
represented by the unique RREF basis of ``m_B`` over the monomial basis
of the maximal ideal.  Closure under multiplication is verified at
construction, and the per-point invariants (genus, conductance exactness,
vanishing data under a grading) are all computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .algebra import (
    CONST,
    AlgebraElement,
    ConductanceVector,
    Grading,
    Monomial,
    apply_torus,
    filtration_basis,
    frac_str,
    parse_frac,
    parse_key,
    substitute_branches,
)
from .errors import (
    AmbientMismatchError,
    ConstantRowError,
    IncomparableConductancesError,
    NotClosedError,
    PreconditionViolatedError,
)

Vector = tuple[Fraction, ...]


class SubalgebraPoint:
    """A closed point of a territory, canonicalized by RREF."""

    __slots__ = ("ambient", "matrix", "pivots", "genus")

    def __init__(self, ambient: ConductanceVector, matrix: tuple[Vector, ...], pivots: tuple[int, ...]):
        self.ambient = ambient
        self.matrix = matrix
        self.pivots = pivots
        self.genus = ambient.maximal_rank - len(matrix)

    # -- membership --------------------------------------------------------

    def contains_vector(self, vector: Sequence[Fraction]) -> bool:
        return linalg.in_row_space(vector, self.matrix, self.pivots)

    def contains(self, element: AlgebraElement) -> bool:
        """Membership in B (the constant direction is always present)."""
        if element.ambient != self.ambient:
            raise AmbientMismatchError("membership test across ambients")
        return self.contains_vector(element.maximal_vector())

    def rows_as_elements(self) -> tuple[AlgebraElement, ...]:
        return tuple(AlgebraElement.from_vector(self.ambient, row) for row in self.matrix)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def delta(self) -> int:
        return self.genus + self.ambient.m - 1

    # -- invariants --------------------------------------------------------

    def exact_conductances(self) -> tuple[tuple[bool, ...], bool]:
        """Branchwise exactness: ``t_i^{c_i - 1}`` must escape B.

        A branch of conductance 1 has no top monomial and is always exact.
        """
        flags = []
        for i, ci in enumerate(self.ambient.c, start=1):
            if ci == 1:
                flags.append(True)
                continue
            top = AlgebraElement.monomial(self.ambient, i, ci - 1)
            flags.append(not self.contains(top))
        return tuple(flags), all(flags)

    def conductance_window(self) -> dict:
        """Diagnostic for the non-emptiness window of exact-conductance loci."""
        total = self.ambient.total
        delta = self.delta
        return {
            "delta": delta,
            "total_conductance": total,
            "lower_ok": delta < total,
            "upper_ok": total <= 2 * delta,
            "in_window": delta < total <= 2 * delta,
        }

    def is_gorenstein_profile(self) -> bool:
        """Numeric Gorenstein test; only meaningful for exact conductances."""
        _, exact = self.exact_conductances()
        if not exact:
            raise PreconditionViolatedError(
                "Gorenstein profile is meaningful only for exact conductances",
                exact_per_branch=list(self.exact_conductances()[0]),
            )
        return self.ambient.total == 2 * self.delta

    def is_monomial(self) -> tuple[tuple[int, ...], ...] | None:
        """Per-branch exponent tuples when every basis row is a single monomial."""
        monos = self.ambient.monomials()
        per_branch: list[list[int]] = [[] for _ in range(self.ambient.m)]
        for row in self.matrix:
            support = [j for j, x in enumerate(row) if x != 0]
            if len(support) != 1:
                return None
            mono = monos[support[0]]
            per_branch[mono.branch - 1].append(mono.exponent)
        return tuple(tuple(sorted(b)) for b in per_branch)

    def is_partition(self) -> tuple[int, ...] | None:
        """Tail-interval profile ``d_i``; empty branches report ``d_i = c_i``."""
        branches = self.is_monomial()
        if branches is None:
            return None
        out = []
        for exps, ci in zip(branches, self.ambient.c):
            if not exps:
                out.append(ci)
                continue
            lo = exps[0]
            if exps != tuple(range(lo, ci)):
                return None
            out.append(lo)
        return tuple(out)

    # -- vanishing data ----------------------------------------------------

    def normal_basis(self, grading: Grading) -> "NormalBasis":
        """Basis adapted to the grading filtration (constant entry included)."""
        monos = self.ambient.monomials()
        degrees = [grading.degree(m) for m in monos]
        levels = sorted({0, *degrees}, reverse=True)
        entries: list[tuple[int, AlgebraElement]] = []
        chosen: list[Vector] = []
        chosen_piv: list[int] = []
        for d in levels:
            keep = [j for j, deg in enumerate(degrees) if deg >= d]
            for vec in linalg.supported_subspace(self.matrix, keep):
                residual = linalg.reduce_against(vec, chosen, chosen_piv)
                if any(x != 0 for x in residual):
                    entries.append((d, AlgebraElement.from_vector(self.ambient, vec)))
                    rows, piv = linalg.rref([*chosen, vec])
                    chosen, chosen_piv = list(rows), list(piv)
        entries.append((0, AlgebraElement.one(self.ambient)))
        entries.sort(key=lambda e: -e[0])
        return NormalBasis(grading=grading, entries=tuple(entries))

    def vanishing_data(self, grading: Grading) -> "VanishingData":
        basis = self.normal_basis(grading)
        monos = self.ambient.monomials()
        degrees = [0] + [grading.degree(m) for m in monos]
        k: dict[int, int] = {}
        for d, _ in basis.entries:
            k[d] = k.get(d, 0) + 1
        lo, hi = min(degrees), max(degrees)
        gaps: dict[int, int] = {}
        for d in range(lo, hi + 2):
            dim_filtration = sum(1 for deg in degrees if deg >= d)
            dim_b = sum(count for level, count in k.items() if level >= d)
            gaps[d] = dim_filtration - dim_b
        degree = sum(level * count for level, count in k.items())
        return VanishingData(grading=grading, k=dict(sorted(k.items())), gaps=gaps, degree=degree, dim=len(basis.entries))

    # -- transport ---------------------------------------------------------

    def apply_torus(self, scales: Sequence[Fraction]) -> "SubalgebraPoint":
        return make_point(self.ambient, [apply_torus(scales, e) for e in self.rows_as_elements()])

    def apply_automorphism(self, images: Mapping[int, AlgebraElement]) -> "SubalgebraPoint":
        return make_point(self.ambient, [substitute_branches(e, images) for e in self.rows_as_elements()])

    def truncate(self, smaller: ConductanceVector) -> "SubalgebraPoint | None":
        """Image under the quotient to a smaller vector, when defined.

        Defined exactly when B contains every kernel monomial; returns None
        ("not in the image of the closed immersion") otherwise.
        """
        if not self.ambient.dominates(smaller):
            raise IncomparableConductancesError(
                f"{smaller} is not componentwise <= {self.ambient}"
            )
        monos = self.ambient.monomials()
        kernel_cols = [
            j for j, mono in enumerate(monos) if mono.exponent >= smaller.c[mono.branch - 1]
        ]
        for j in kernel_cols:
            unit = tuple(Fraction(1) if t == j else Fraction(0) for t in range(len(monos)))
            if not self.contains_vector(unit):
                return None
        target_monos = smaller.monomials()
        cols = [self.ambient.column(m) for m in target_monos]
        rows = [tuple(row[j] for j in cols) for row in self.matrix]
        return make_point(smaller, [AlgebraElement.from_vector(smaller, r) for r in linalg.rref(rows, len(cols))[0]])

    def lift(self, larger: ConductanceVector) -> "SubalgebraPoint":
        """Preimage under the quotient from a larger vector (same genus)."""
        if not larger.dominates(self.ambient):
            raise IncomparableConductancesError(
                f"{larger} is not componentwise >= {self.ambient}"
            )
        rows = []
        for element in self.rows_as_elements():
            rows.append(
                AlgebraElement(larger, {k: v for k, v in element.coeffs.items()})
            )
        for i, (small, big) in enumerate(zip(self.ambient.c, larger.c), start=1):
            for j in range(small, big):
                rows.append(AlgebraElement.monomial(larger, i, j))
        return make_point(larger, rows)

    # -- identity / serialization ------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubalgebraPoint)
            and self.ambient == other.ambient
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.matrix))

    def to_json(self) -> dict:
        rows = []
        for element in self.rows_as_elements():
            rows.append(
                {k.name(): frac_str(v) for k, v in sorted(element.coeffs.items(), key=lambda kv: kv[0].name())}
            )
        return {"c": list(self.ambient.c), "basis": rows}

    @classmethod
    def from_json(cls, data: Mapping) -> "SubalgebraPoint":
        ambient = ConductanceVector(data["c"])
        rows = []
        for coeffs in data.get("basis", []):
            rows.append(AlgebraElement(ambient, {parse_key(k): parse_frac(v) for k, v in coeffs.items()}))
        return make_point(ambient, rows)

    def __repr__(self) -> str:
        gens = ", ".join(e.text() for e in self.rows_as_elements())
        return f"SubalgebraPoint(<{gens}> in {list(self.ambient.c)}, g={self.genus})"


@dataclass(frozen=True)
class VanishingData:
    """Ranks of the graded pieces of B along a grading filtration."""

    grading: Grading
    k: dict[int, int]
    gaps: dict[int, int]
    degree: int
    dim: int

    def __eq__(self, other):
        return (
            isinstance(other, VanishingData)
            and self.grading == other.grading
            and self.k == other.k
        )

    def __hash__(self):
        return hash((self.grading, tuple(sorted(self.k.items()))))


@dataclass(frozen=True)
class NormalBasis:
    grading: Grading
    entries: tuple[tuple[int, AlgebraElement], ...]


def make_point(ambient: ConductanceVector, rows: Iterable[AlgebraElement | Sequence[Fraction]]) -> SubalgebraPoint:
    """Canonicalize and validate a territory point.

    Rows may be algebra elements (with no constant part) or raw coordinate
    vectors over the maximal-ideal monomial basis.  Closure under
    multiplication is checked on all basis pairs; the violation, if any, is
    reported with the offending product.
    """
    vectors: list[Vector] = []
    for row in rows:
        if isinstance(row, AlgebraElement):
            if row.ambient != ambient:
                raise AmbientMismatchError("row element lives in a different ambient")
            if row.constant_coefficient() != 0:
                raise ConstantRowError(
                    "basis rows of the maximal part may not contain the constant",
                    row=row.to_json(),
                )
            vectors.append(row.maximal_vector())
        else:
            vec = tuple(Fraction(x) for x in row)
            if len(vec) != ambient.maximal_rank:
                raise AmbientMismatchError(
                    f"row of length {len(vec)} does not fit maximal rank {ambient.maximal_rank}"
                )
            vectors.append(vec)
    matrix, pivots = linalg.rref(vectors, ambient.maximal_rank)
    point = SubalgebraPoint(ambient, matrix, pivots)
    elements = point.rows_as_elements()
    for i in range(len(elements)):
        for j in range(i, len(elements)):
            product = elements[i] * elements[j]
            if not point.contains_vector(product.maximal_vector()):
                raise NotClosedError(
                    f"product of basis rows {i} and {j} escapes the subspace",
                    pair=[i, j],
                    product=product.to_json(),
                )
    return point


def monomial_point(ambient: ConductanceVector, exponents: Sequence[Sequence[int]]) -> SubalgebraPoint:
    """The monomial point spanned by ``t_i^j`` for ``j`` in ``exponents[i-1]``."""
    if len(exponents) != ambient.m:
        raise AmbientMismatchError("one exponent set per branch is required")
    rows = [
        AlgebraElement.monomial(ambient, i, j)
        for i, exps in enumerate(exponents, start=1)
        for j in sorted(set(exps))
    ]
    return make_point(ambient, rows)


def point_check_report(point: SubalgebraPoint, grading: Grading | None = None) -> dict:
    """The CLI-facing summary of a point's invariants."""
    per_branch, overall = point.exact_conductances()
    grading = grading or Grading.standard(point.ambient.m)
    vanishing = point.vanishing_data(grading)
    report = {
        "c": list(point.ambient.c),
        "genus": point.genus,
        "delta": point.delta,
        "rank": point.rank,
        "exact_per_branch": list(per_branch),
        "exact": overall,
        "window": point.conductance_window(),
        "monomial": point.is_monomial() is not None,
        "partition": point.is_partition() is not None,
        "grading": list(grading.weights),
        "vanishing": {str(d): k for d, k in vanishing.k.items()},
        "gap_sequence": {str(d): v for d, v in vanishing.gaps.items()},
        "gamma_degree": vanishing.degree,
    }
    if overall:
        report["gorenstein"] = point.is_gorenstein_profile()
    return report
