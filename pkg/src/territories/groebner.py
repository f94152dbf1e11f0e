"""Desk-scale Buchberger engine for ideal-membership verification.

This is deliberately not a general computer-algebra system: it exists to
verify that generated chart ideals agree with independently stated ones.
Hard caps on the number of variables and the total degree of the inputs
make failure loud (:class:`ResourceCapError`) rather than silent.

Everything runs over the rationals in graded reverse lexicographic order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, ResourceCapError
from .polynomials import MultiPoly, grevlex_key

DEFAULT_DEGREE_CAP = 8
DEFAULT_VARIABLE_CAP = 8

# safety valve for runaway pair explosions; desk instances stay far below
_MAX_BASIS = 2000

Exponents = tuple[int, ...]


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def _disjoint(a: Exponents, b: Exponents) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def normal_form(f: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    """Remainder of ``f`` on multivariate division by ``basis``."""
    if not basis:
        return f
    ctx = f.vars
    data = []
    for g in basis:
        if g.vars != ctx:
            raise DimensionMismatchError("mixed variable contexts in division")
        if not g.is_zero():
            lm, lc = g.leading()
            data.append((lm, lc, g.terms))
    work = dict(f.terms)
    remainder: dict[Exponents, Fraction] = {}
    while work:
        e = max(work, key=grevlex_key)
        c = work.pop(e)
        for lm, lc, terms in data:
            if _divides(lm, e):
                shift = tuple(x - y for x, y in zip(e, lm))
                factor = c / lc
                for ge, gc in terms.items():
                    key = tuple(x + y for x, y in zip(ge, shift))
                    if key == e:
                        continue
                    s = work.get(key, Fraction(0)) - factor * gc
                    if s == 0:
                        work.pop(key, None)
                    else:
                        work[key] = s
                break
        else:
            remainder[e] = c
    return MultiPoly(ctx, remainder, _trusted=True)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    lmf, lcf = f.leading()
    lmg, lcg = g.leading()
    l = _lcm(lmf, lmg)
    return f.term_mul(tuple(a - b for a, b in zip(l, lmf)), 1 / lcf) - g.term_mul(
        tuple(a - b for a, b in zip(l, lmg)), 1 / lcg
    )


def _check_caps(polys: Iterable[MultiPoly], degree_cap: int, variable_cap: int):
    polys = list(polys)
    if not polys:
        return
    nvars = len(polys[0].vars)
    if nvars > variable_cap:
        raise ResourceCapError(
            f"{nvars} variables exceed the cap of {variable_cap}",
            variables=nvars,
            cap=variable_cap,
        )
    worst = max((p.total_degree() for p in polys), default=-1)
    if worst > degree_cap:
        raise ResourceCapError(
            f"input degree {worst} exceeds the cap of {degree_cap}",
            degree=worst,
            cap=degree_cap,
        )


def groebner_basis(
    generators: Sequence[MultiPoly],
    degree_cap: int = DEFAULT_DEGREE_CAP,
    variable_cap: int = DEFAULT_VARIABLE_CAP,
) -> list[MultiPoly]:
    """Reduced grevlex Groebner basis of the ideal generated over Q.

    Uses Buchberger's algorithm with the product and chain criteria.
    Deterministic: output is monic, fully interreduced, sorted by leading
    monomial.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return []
    ctx = gens[0].vars
    for g in gens:
        if g.vars != ctx:
            raise DimensionMismatchError("generators live in different variable contexts")
    _check_caps(gens, degree_cap, variable_cap)

    basis: list[MultiPoly] = []
    lms: list[Exponents] = []
    for g in sorted((g.monic() for g in gens), key=lambda p: grevlex_key(p.leading()[0])):
        if g not in basis:
            basis.append(g)
            lms.append(g.leading()[0])

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        i, j = min(pairs, key=lambda ij: (grevlex_key(_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.remove((i, j))
        if _disjoint(lms[i], lms[j]):
            continue
        lij = _lcm(lms[i], lms[j])
        # chain criterion: some k with lm_k | lcm and both mixed pairs done
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(lms[k], lij):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        rem = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if rem.is_zero():
            continue
        rem = rem.monic()
        basis.append(rem)
        lms.append(rem.leading()[0])
        t = len(basis) - 1
        if t >= _MAX_BASIS:
            raise ResourceCapError(
                "Buchberger basis exceeded the desk-scale size limit",
                size=t,
            )
        pairs.update((k, t) for k in range(t))

    # minimal basis: ascending order guarantees divisors are seen first
    minimal: list[MultiPoly] = []
    for g in sorted(basis, key=lambda p: grevlex_key(p.leading()[0])):
        lm = g.leading()[0]
        if not any(_divides(h.leading()[0], lm) for h in minimal):
            minimal.append(g)
    # full interreduction yields the unique reduced basis
    reduced: list[MultiPoly] = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        r = normal_form(g, others)
        if not r.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=lambda p: grevlex_key(p.leading()[0]))
    return reduced


def ideal_membership(
    poly: MultiPoly,
    generators: Sequence[MultiPoly],
    degree_cap: int = DEFAULT_DEGREE_CAP,
    variable_cap: int = DEFAULT_VARIABLE_CAP,
) -> bool:
    """Whether ``poly`` lies in the ideal generated by ``generators`` over Q."""
    _check_caps([poly], degree_cap, variable_cap)
    basis = groebner_basis(generators, degree_cap, variable_cap)
    if not basis:
        return poly.is_zero()
    return normal_form(poly, basis).is_zero()


def _fresh_variable(ctx: Sequence[str]) -> str:
    name = "_y"
    k = 1
    while name in ctx:
        k += 1
        name = f"_y{k}"
    return name


def radical_membership(
    poly: MultiPoly,
    generators: Sequence[MultiPoly],
    degree_cap: int = DEFAULT_DEGREE_CAP,
    variable_cap: int = DEFAULT_VARIABLE_CAP,
) -> bool:
    """Whether ``poly`` lies in the radical of the generated ideal.

    Rabinowitsch trick: adjoin a fresh variable ``y`` and decide whether
    ``1`` lies in the ideal together with ``1 - y*poly``.
    """
    if poly.is_zero():
        return True
    _check_caps([poly], degree_cap, variable_cap)
    gens = [g for g in generators if not g.is_zero()]
    if gens:
        _check_caps(gens, degree_cap, variable_cap)
    ctx = poly.vars
    extended = ctx + (_fresh_variable(ctx),)
    if len(extended) > variable_cap:
        raise ResourceCapError(
            f"Rabinowitsch trick needs {len(extended)} variables, cap is {variable_cap}",
            variables=len(extended),
            cap=variable_cap,
        )
    y = MultiPoly.variable(extended, extended[-1])
    one = MultiPoly.const(extended, 1)
    lifted = [g.extended(extended) for g in gens]
    lifted.append(one - y * poly.extended(extended))
    basis = groebner_basis(lifted, degree_cap=max(degree_cap, poly.total_degree() + 1), variable_cap=variable_cap)
    return any(p.total_degree() == 0 for p in basis)


def is_groebner_basis(basis: Sequence[MultiPoly]) -> bool:
    """Check the Buchberger criterion: all S-polynomials reduce to zero."""
    polys = [g for g in basis if not g.is_zero()]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if not normal_form(s_polynomial(polys[i], polys[j]), polys).is_zero():
                return False
    return True
