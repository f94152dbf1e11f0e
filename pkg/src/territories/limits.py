"""One-parameter limits, torus fixing, and degeneration chains.

The limit of a family of subspaces with Laurent-polynomial coordinates is
computed by valuation-saturation row reduction: scale every row to
valuation zero, specialize the parameter to zero, and whenever the
specialized rows become dependent, replace one row by the dependency
(which has strictly higher valuation) and repeat.  Torus limits admit a
second, independent description through normal bases, and the two are
cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from . import linalg
from .algebra import (
    CONST,
    AlgebraElement,
    ConductanceVector,
    Grading,
    LaurentElement,
    Monomial,
    apply_phi_a_symbolic,
)
from .branches import join, restrict, contract, BranchSplit
from .errors import NotMonomialError, PreconditionViolatedError, TerritoryError
from .laurent import LaurentPoly
from .monoids import NumericalMonoid, monoid_tuples, monoids_with_conductor_at_most
from .points import SubalgebraPoint, make_point, monomial_point

LaurentRow = tuple[LaurentPoly, ...]


class ParametricSubspace:
    """A family of subspaces of the maximal ideal over the punctured line."""

    __slots__ = ("ambient", "rows", "param")

    def __init__(self, ambient: ConductanceVector, rows: Sequence[Sequence[LaurentPoly]], param: str = "a"):
        self.ambient = ambient
        self.param = param
        self.rows: tuple[LaurentRow, ...] = tuple(tuple(row) for row in rows)
        n = ambient.maximal_rank
        for row in self.rows:
            if len(row) != n:
                raise TerritoryError("parametric row does not match the maximal-ideal rank")
        if self.rows and laurent_rank(self.rows) != len(self.rows):
            raise TerritoryError("parametric rows are dependent over the function field")

    @classmethod
    def from_elements(cls, elements: Sequence[LaurentElement], param: str = "a") -> "ParametricSubspace":
        if not elements:
            raise TerritoryError("an empty family needs an explicit ambient")
        ambient = elements[0].ambient
        return cls(ambient, [e.maximal_row() for e in elements], param)

    def specialize(self, value) -> SubalgebraPoint:
        rows = [tuple(entry.evaluate(value) for entry in row) for row in self.rows]
        return make_point(self.ambient, rows)


def laurent_rank(rows: Sequence[LaurentRow]) -> int:
    """Rank over the field of rational functions (fraction-free elimination)."""
    work = [list(r) for r in rows]
    nr = len(work)
    nc = len(work[0]) if work else 0
    if nr == 0:
        return 0
    param = next((e.param for row in work for e in row), "a")
    prev = LaurentPoly.const(1, param)
    row = 0
    for col in range(nc):
        piv = next((i for i in range(row, nr) if not work[i][col].is_zero()), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        for i in range(row + 1, nr):
            for j in range(col + 1, nc):
                work[i][j] = (work[i][j] * work[row][col] - work[i][col] * work[row][j]).exact_div(prev)
            work[i][col] = LaurentPoly({}, param)
        prev = work[row][col]
        row += 1
        if row == nr:
            break
    return row


_SATURATION_CAP = 100_000


def limit_at_zero(family: ParametricSubspace) -> SubalgebraPoint:
    """Flat limit of the family at parameter zero.

    Valuation-saturation: rows are scaled to valuation 0 and specialized;
    any dependency among the specialized rows lifts to a row combination
    of strictly higher valuation, so the loop terminates.
    """
    rows = [list(row) for row in family.rows]
    k = len(rows)
    if k == 0:
        return make_point(family.ambient, [])
    for _ in range(_SATURATION_CAP):
        scaled: list[list[LaurentPoly]] = []
        for row in rows:
            vals = [e.valuation() for e in row if not e.is_zero()]
            if not vals:
                raise TerritoryError("family degenerated to a zero row")
            v = min(vals)
            scaled.append([e.shift(-v) for e in row])
        specialized = [tuple(e.coefficient(0) for e in row) for row in scaled]
        reduced, pivots = linalg.rref(specialized, family.ambient.maximal_rank)
        if len(reduced) == k:
            return make_point(family.ambient, [tuple(r) for r in reduced])
        # lift a dependency: nullspace of the transposed specialized matrix
        transposed = [tuple(specialized[i][j] for i in range(k)) for j in range(family.ambient.maximal_rank)]
        combos = linalg.nullspace(transposed, k)
        combo = combos[0]
        target = max(i for i in range(k) if combo[i] != 0)
        replacement = [LaurentPoly({}, family.param)] * len(scaled[0])
        for coef, row in zip(combo, scaled):
            if coef != 0:
                replacement = [acc + e.scale(coef) for acc, e in zip(replacement, row)]
        rows = scaled
        rows[target] = replacement
    raise TerritoryError("limit computation exceeded the saturation cap")


def torus_family(point: SubalgebraPoint, grading: Grading, param: str = "a") -> ParametricSubspace:
    """The family ``lambda . B`` along the one-parameter subgroup of a grading."""
    monos = point.ambient.monomials()
    rows = []
    for row in point.matrix:
        rows.append(
            tuple(
                LaurentPoly.term(grading.degree(m), c, param) if c != 0 else LaurentPoly({}, param)
                for m, c in zip(monos, row)
            )
        )
    return ParametricSubspace(point.ambient, rows, param)


def gamma_limit(point: SubalgebraPoint, grading: Grading) -> SubalgebraPoint:
    """Torus limit via minimal-degree parts of a normal basis."""
    basis = point.normal_basis(grading)
    rows = []
    for level, element in basis.entries:
        if element.constant_coefficient() != 0:
            continue  # the constant entry survives unchanged
        rows.append(grading.homogeneous_part(element, level))
    return make_point(point.ambient, rows)


def t_fix(point: SubalgebraPoint) -> SubalgebraPoint:
    """Iterated limits reaching a torus-fixed (monomial) point.

    Convention: the standard grading first, then the coordinate
    projections in branch order.
    """
    m = point.ambient.m
    current = gamma_limit(point, Grading.standard(m))
    for i in range(1, m + 1):
        current = gamma_limit(current, Grading.projection(m, [i]))
    if current.is_monomial() is None:
        raise AssertionError("iterated limit failed to reach a monomial point; this is a bug")
    return current


@dataclass(frozen=True)
class MonoidTuple:
    ambient: ConductanceVector
    monoids: tuple[NumericalMonoid, ...]

    @property
    def genus(self) -> int:
        return sum(mo.genus for mo in self.monoids)

    def point(self) -> SubalgebraPoint:
        exponents = [
            mo.elements_below(ci) for mo, ci in zip(self.monoids, self.ambient.c)
        ]
        return monomial_point(self.ambient, exponents)

    def to_json(self) -> dict:
        return {
            "c": list(self.ambient.c),
            "gaps": [list(mo.gaps) for mo in self.monoids],
            "genus": self.genus,
        }


def fixed_points(ambient: ConductanceVector, genus: int) -> list[SubalgebraPoint]:
    """All torus-fixed points: monomial points of tuples of numerical monoids."""
    points = []
    for monoids in monoid_tuples(ambient.c, genus):
        points.append(MonoidTuple(ambient, monoids).point())
    points.sort(key=lambda p: p.matrix)
    return points


def fixed_point_tuples(ambient: ConductanceVector, genus: int) -> list[MonoidTuple]:
    return [MonoidTuple(ambient, ms) for ms in monoid_tuples(ambient.c, genus)]


def stratum_realizable(
    ambient: ConductanceVector,
    ks: Mapping[int, int] | Sequence[int],
    inclusive_boundary: bool = False,
) -> MonoidTuple | None:
    """A monoid-tuple witness of a vanishing sequence, or None.

    ``ks`` prescribes ``k_d`` for ``d >= 1`` (a sequence is read as
    ``k_1, k_2, ...``); all unspecified values must be zero.  The counting
    convention is ``d < c_i`` by default; ``inclusive_boundary`` switches
    to ``d <= c_i`` for comparison with the looser reading.
    """
    if isinstance(ks, Mapping):
        want = {int(d): int(v) for d, v in ks.items() if int(v) != 0}
    else:
        want = {d + 1: int(v) for d, v in enumerate(ks) if int(v) != 0}
    if any(d < 1 or v < 0 for d, v in want.items()):
        raise PreconditionViolatedError("vanishing sequence entries must have d >= 1, k >= 0")
    horizon = max([*want.keys(), *ambient.c]) + 1
    per_branch = [monoids_with_conductor_at_most(ci) for ci in ambient.c]

    def matches(monoids: tuple[NumericalMonoid, ...]) -> bool:
        for d in range(1, horizon + 1):
            count = 0
            for mo, ci in zip(monoids, ambient.c):
                limit = ci if inclusive_boundary else ci - 1
                if d <= limit and mo.contains(d):
                    count += 1
            if count != want.get(d, 0):
                return False
        return True

    def rec(i: int, prefix: tuple[NumericalMonoid, ...]) -> MonoidTuple | None:
        if i == ambient.m:
            tup = tuple(prefix)
            return MonoidTuple(ambient, tup) if matches(tup) else None
        for mo in per_branch[i]:
            found = rec(i + 1, prefix + (mo,))
            if found is not None:
                return found
        return None

    return rec(0, ())


def phi_a_limit(point: SubalgebraPoint) -> SubalgebraPoint:
    """Limit of a monomial point under ``t_i -> t_i + a^{-1} t_i^2`` as a -> 0."""
    if point.is_monomial() is None:
        raise NotMonomialError("the one-automorphism limit is defined on monomial points")
    elements = [
        apply_phi_a_symbolic(e) for e in point.rows_as_elements()
    ]
    if not elements:
        return point
    family = ParametricSubspace.from_elements(elements)
    return limit_at_zero(family)


@dataclass(frozen=True)
class DegenerationChain:
    steps: tuple[SubalgebraPoint, ...]
    annotations: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def final(self) -> SubalgebraPoint:
        return self.steps[-1]

    def to_json(self) -> dict:
        return {
            "length": len(self.steps),
            "steps": [
                {"via": note, **point.to_json()}
                for note, point in zip(self.annotations, self.steps)
            ],
            "final_partition": list(self.final.is_partition() or ()),
        }

    def to_dot(self) -> str:
        lines = ["digraph degeneration {", "  rankdir=LR;"]
        for idx, (note, point) in enumerate(zip(self.annotations, self.steps)):
            gens = ", ".join(e.text() for e in point.rows_as_elements()) or "0"
            lines.append(f'  n{idx} [label="<{gens}>", shape=box];')
            if idx:
                lines.append(f'  n{idx - 1} -> n{idx} [label="{note}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def degenerate_to_partition(point: SubalgebraPoint) -> DegenerationChain:
    """Degenerate through a torus fixing and iterated one-automorphism limits.

    Terminates because each non-partition step strictly raises the total
    exponent of the monomial basis.
    """
    steps = [point]
    notes = ["initial"]
    fixed = t_fix(point)
    if fixed != steps[-1]:
        steps.append(fixed)
        notes.append("t-fix")
    cap = 1 + sum((ci - 1) ** 2 for ci in point.ambient.c)
    while steps[-1].is_partition() is None:
        if len(steps) > cap:
            raise AssertionError("degeneration chain exceeded its length bound; this is a bug")
        nxt = phi_a_limit(steps[-1])
        if nxt == steps[-1]:
            raise AssertionError("one-automorphism limit stalled off a partition point; this is a bug")
        if nxt.genus != point.genus:
            raise AssertionError("limit changed the genus; this is a bug")
        steps.append(nxt)
        notes.append("phi-a-limit")
    return DegenerationChain(steps=tuple(steps), annotations=tuple(notes))


def decomposable_limit(point: SubalgebraPoint, branches: Sequence[int]) -> SubalgebraPoint:
    """Torus limit that decomposes the point across a branch split."""
    split = BranchSplit.of(point.ambient, branches)
    grading = Grading.projection(point.ambient.m, split.inside)
    limit = gamma_limit(point, grading)
    rebuilt = join(
        [contract(limit, split.inside), restrict(limit, split.outside)],
        [split.inside, split.outside],
    )
    if rebuilt != limit:
        raise AssertionError("projection limit failed to decompose; this is a bug")
    return limit
