import random

import pytest

from territories.errors import ResourceCapError
from territories.groebner import (
    groebner_basis,
    ideal_membership,
    is_groebner_basis,
    normal_form,
    radical_membership,
    s_polynomial,
)
from territories.polynomials import MultiPoly, parse_poly

CTX = ("x", "y", "z")


def P(text, ctx=CTX):
    return parse_poly(text, ctx)


def test_membership_trivial():
    assert ideal_membership(P("x"), [P("x")])
    assert ideal_membership(P("x^2*y + x"), [P("x")])
    assert not ideal_membership(P("y"), [P("x")])


def test_nilpotent_radical():
    x = P("x")
    cube = P("x^3")
    assert not ideal_membership(x, [cube])
    assert radical_membership(x, [cube])
    assert radical_membership(P("0"), [cube])


def test_membership_monotone_and_radical_contains_ideal():
    rng = random.Random(4)
    gens = [P("x^2 - y"), P("y^2 - z")]
    more = gens + [P("z^2")]
    for _ in range(10):
        f = MultiPoly.zero(CTX)
        for g in gens:
            factor = P(rng.choice(["x", "y", "z", "1", "x*y"]))
            f = f + factor * g
        assert ideal_membership(f, gens)
        assert ideal_membership(f, more)
        assert radical_membership(f, gens)


def test_groebner_output_is_groebner():
    gens = [P("x^2 + y"), P("x*y - z"), P("y^3 - z^2")]
    basis = groebner_basis(gens)
    assert is_groebner_basis(basis)
    # every generator reduces to zero against the basis
    for g in gens:
        assert normal_form(g, basis).is_zero()


def test_groebner_reduced_and_deterministic():
    gens = [P("x^2 + y"), P("x*y - z")]
    b1 = groebner_basis(gens)
    b2 = groebner_basis(list(reversed(gens)))
    assert b1 == b2  # the reduced basis is unique
    for i, g in enumerate(b1):
        assert g.leading()[1] == 1
        others = b1[:i] + b1[i + 1 :]
        assert normal_form(g, others) == g


def test_elimination_example():
    # x = t^2, y = t^3 parametrization satisfies y^2 - x^3
    ctx = ("t", "x", "y")
    gens = [parse_poly("x - t^2", ctx), parse_poly("y - t^3", ctx)]
    assert ideal_membership(parse_poly("y^2 - x^3", ctx), gens)


def test_spoly_reduces_in_basis():
    gens = [P("x^2 + y"), P("x*y - z")]
    basis = groebner_basis(gens)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            assert normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()


def test_caps_raise():
    ctx = tuple(f"v{i}" for i in range(9))
    vs = [MultiPoly.variable(ctx, f"v{i}") for i in range(9)]
    with pytest.raises(ResourceCapError):
        groebner_basis(vs)
    big = P("x") ** 9
    with pytest.raises(ResourceCapError):
        ideal_membership(big, [P("x")])


def test_radical_variable_cap():
    ctx = tuple(f"v{i}" for i in range(8))
    vs = [MultiPoly.variable(ctx, f"v{i}") for i in range(8)]
    with pytest.raises(ResourceCapError):
        radical_membership(vs[0], vs[1:])


def test_sympy_cross_check():
    sympy = pytest.importorskip("sympy")
    rng = random.Random(12)
    xs = sympy.symbols("x y z")
    for _ in range(5):
        gens = [P("x^2 - y"), P("x*y + z^2"), P("y^2 - z")]
        f = MultiPoly.zero(CTX)
        for g in gens[: rng.randint(1, 3)]:
            f = f + P(rng.choice(["x", "y - 1", "z"])) * g
        probe = f + P(rng.choice(["0", "1", "x"]))
        mine = ideal_membership(probe, gens)
        gb = sympy.groebner([sympy.sympify(g.text().replace("^", "**")) for g in gens], *xs, order="grevlex")
        theirs = gb.reduce(sympy.sympify(probe.text().replace("^", "**")))[1] == 0
        assert mine == theirs
