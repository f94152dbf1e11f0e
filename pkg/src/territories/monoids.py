"""Numerical monoids (complement-finite submonoids of N) and their tree.

A monoid is stored by its finite gap set.  Enumeration walks the genus
tree: every monoid of genus ``g + 1`` arises from exactly one of genus
``g`` by removing a minimal generator larger than the Frobenius number,
so a depth-first walk with conductor pruning is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class NumericalMonoid:
    gaps: tuple[int, ...]

    def __init__(self, gaps: Iterable[int]):
        gap_list = tuple(sorted(set(int(x) for x in gaps)))
        object.__setattr__(self, "gaps", gap_list)
        if gap_list and gap_list[0] < 1:
            raise ValueError("gaps must be positive")
        frobenius = gap_list[-1] if gap_list else -1
        members = [d for d in range(1, frobenius + 1) if d not in set(gap_list)]
        for a in members:
            for b in members:
                if a + b <= frobenius and a + b in set(gap_list):
                    raise ValueError(f"complement not closed under addition: {a}+{b} is a gap")

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    @property
    def conductor(self) -> int:
        return self.gaps[-1] + 1 if self.gaps else 0

    def contains(self, d: int) -> bool:
        return d >= 0 and d not in set(self.gaps)

    def elements_below(self, bound: int) -> tuple[int, ...]:
        """Positive elements strictly below ``bound``."""
        gap_set = set(self.gaps)
        return tuple(d for d in range(1, bound) if d not in gap_set)

    @property
    def multiplicity(self) -> int:
        gap_set = set(self.gaps)
        d = 1
        while d in gap_set:
            d += 1
        return d

    def minimal_generators(self) -> tuple[int, ...]:
        """Nonzero elements not expressible as sums of two nonzero elements.

        Anything beyond ``max(F, 0) + multiplicity`` splits off a copy of
        the multiplicity, so the search range is finite.
        """
        gap_set = set(self.gaps)
        bound = max(self.frobenius, 0) + self.multiplicity + 1
        elements = [d for d in range(1, bound) if d not in gap_set]
        element_set = set(elements)
        gens = []
        for e in elements:
            if not any(a in element_set and (e - a) in element_set for a in range(1, e)):
                gens.append(e)
        return tuple(gens)

    def children(self) -> tuple["NumericalMonoid", ...]:
        """Genus-tree children: remove a minimal generator beyond the Frobenius number."""
        out = []
        for x in self.minimal_generators():
            if x > self.frobenius:
                out.append(NumericalMonoid(self.gaps + (x,)))
        return tuple(out)

    def __repr__(self) -> str:
        return f"NumericalMonoid(gaps={list(self.gaps)})"


def enumerate_monoids(genus: int, conductor_max: int) -> list[NumericalMonoid]:
    """All monoids of the given genus with conductor at most ``conductor_max``.

    Conductor is strictly increasing down the genus tree, which justifies
    pruning.  Output is sorted by gap tuple.
    """
    if genus < 0 or conductor_max < 0:
        raise ValueError("genus and conductor bound must be nonnegative")
    found: list[NumericalMonoid] = []

    def walk(node: NumericalMonoid):
        if node.conductor > conductor_max:
            return
        if node.genus == genus:
            found.append(node)
            return
        for child in node.children():
            walk(child)

    walk(NumericalMonoid(()))
    found.sort(key=lambda mo: mo.gaps)
    return found


def monoids_with_conductor_at_most(conductor_max: int) -> list[NumericalMonoid]:
    """All monoids of conductor <= bound (their gaps live in [1, bound - 1])."""
    out: list[NumericalMonoid] = []
    genus = 0
    while True:
        layer = enumerate_monoids(genus, conductor_max)
        if not layer and genus > 0:
            break
        out.extend(layer)
        genus += 1
        if genus > max(conductor_max, 1):
            break
    out.sort(key=lambda mo: (mo.genus, mo.gaps))
    return out


def monoid_tuples(bounds: Sequence[int], total_genus: int) -> Iterator[tuple[NumericalMonoid, ...]]:
    """Tuples of monoids with conductors below per-branch bounds and fixed total genus."""
    per_branch = [monoids_with_conductor_at_most(b) for b in bounds]

    def rec(i: int, remaining: int, prefix: tuple[NumericalMonoid, ...]):
        if i == len(bounds):
            if remaining == 0:
                yield prefix
            return
        for mo in per_branch[i]:
            if mo.genus <= remaining:
                yield from rec(i + 1, remaining - mo.genus, prefix + (mo,))

    yield from rec(0, total_genus, ())
