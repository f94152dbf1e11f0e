"""Shared generators for randomized and exhaustive tests.

Random points are produced by transporting monomial or spine points along
random branch-substitution automorphisms and torus elements, so every
sample is a genuinely closed point with known genus.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from territories import (
    AlgebraElement,
    ConductanceVector,
    Monomial,
    SubalgebraPoint,
    make_point,
    monomial_point,
)
from territories.charts import random_spine_point, spine


def random_fraction(rng: random.Random, zero_ok: bool = True) -> Fraction:
    num = rng.randint(-4, 4)
    if not zero_ok:
        while num == 0:
            num = rng.randint(-4, 4)
    return Fraction(num, rng.choice([1, 1, 2, 3]))


def closed_exponent_sets(ci: int) -> list[tuple[int, ...]]:
    """All truncation-closed subsets of [1, ci - 1] for one branch."""
    exps = list(range(1, ci))
    out = []
    for bits in product([0, 1], repeat=len(exps)):
        chosen = {e for e, b in zip(exps, bits) if b}
        if all(a + b in chosen or a + b >= ci for a in chosen for b in chosen):
            out.append(tuple(sorted(chosen)))
    return out


def all_monomial_points(ambient: ConductanceVector) -> list[SubalgebraPoint]:
    """Every monomial point of the territory (all genera)."""
    per_branch = [closed_exponent_sets(ci) for ci in ambient.c]
    return [monomial_point(ambient, combo) for combo in product(*per_branch)]


def small_ambients(total_bound: int) -> list[ConductanceVector]:
    """Sorted conductance vectors with all c_i >= 2 and sum (c_i - 1) <= bound."""

    def partitions(n: int, most: int):
        if n == 0:
            yield ()
            return
        for part in range(min(n, most), 0, -1):
            for rest in partitions(n - part, part):
                yield (part,) + rest

    out = []
    for total in range(1, total_bound + 1):
        for parts in partitions(total, total):
            out.append(ConductanceVector(tuple(p + 1 for p in reversed(parts))))
    return out


def random_automorphism_images(ambient: ConductanceVector, rng: random.Random) -> dict[int, AlgebraElement]:
    """A random branch-substitution automorphism ``t_i -> unit*t_i + higher``."""
    images = {}
    for i, ci in enumerate(ambient.c, start=1):
        coeffs = {Monomial(i, 1): random_fraction(rng, zero_ok=False)}
        for j in range(2, ci):
            if rng.random() < 0.6:
                val = random_fraction(rng)
                if val != 0:
                    coeffs[Monomial(i, j)] = val
        images[i] = AlgebraElement(ambient, coeffs)
    return images


def random_monomial_point(ambient: ConductanceVector, rng: random.Random) -> SubalgebraPoint:
    exps = [rng.choice(closed_exponent_sets(ci)) for ci in ambient.c]
    return monomial_point(ambient, exps)


def random_point(ambient: ConductanceVector, rng: random.Random) -> SubalgebraPoint:
    """A random closed point: a transported monomial or spine point."""
    base: SubalgebraPoint | None = None
    if rng.random() < 0.4:
        genus = rng.randrange(0, ambient.maximal_rank + 1)
        descriptor = spine(ambient, genus)
        if not descriptor.empty:
            base = random_spine_point(ambient, genus, rng)
    if base is None:
        base = random_monomial_point(ambient, rng)
    point = base.apply_automorphism(random_automorphism_images(ambient, rng))
    scales = [random_fraction(rng, zero_ok=False) for _ in range(ambient.m)]
    return point.apply_torus(scales)
