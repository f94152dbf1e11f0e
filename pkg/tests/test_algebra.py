import random
from fractions import Fraction

import pytest

from territories.algebra import (
    CONST,
    AlgebraElement,
    ConductanceVector,
    Grading,
    LaurentElement,
    Monomial,
    apply_phi_a_symbolic,
    apply_torus,
    filtration_basis,
    parse_key,
    substitute_branches,
)
from territories.errors import AmbientMismatchError, ZeroScaleError
from territories.laurent import LaurentPoly

from helpers import random_fraction


def el(ambient, **kw):
    coeffs = {}
    for name, val in kw.items():
        coeffs[parse_key(name.replace("_", "^"))] = Fraction(val)
    return AlgebraElement(ambient, coeffs)


def rand_element(ambient, rng, const_ok=True):
    coeffs = {m: random_fraction(rng) for m in ambient.monomials() if rng.random() < 0.6}
    if const_ok and rng.random() < 0.4:
        coeffs[CONST] = random_fraction(rng)
    return AlgebraElement(ambient, coeffs)


def test_conductance_vector_derived_quantities():
    c = ConductanceVector([4, 2])
    assert c.m == 2 and c.total == 6
    assert c.ambient_rank == 5 and c.maximal_rank == 4
    assert [m.name() for m in c.monomials()] == ["t1", "t1^2", "t1^3", "t2"]
    with pytest.raises(ValueError):
        ConductanceVector([0])
    with pytest.raises(ValueError):
        ConductanceVector([])


def test_multiplication_relations():
    c22 = ConductanceVector([2, 2])
    assert (el(c22, t1=1) * el(c22, t2=1)).is_zero()
    c4 = ConductanceVector([4])
    t2 = el(c4, t1_2=1)
    assert (t2 * t2).is_zero()
    c33 = ConductanceVector([3, 3])
    s = el(c33, t1=1) + el(c33, t2=1)
    assert s * s == el(c33, t1_2=1) + el(c33, t2_2=1)


def test_ring_laws_randomized():
    rng = random.Random(31)
    c = ConductanceVector([4, 3])
    for _ in range(30):
        x, y, z = (rand_element(c, rng) for _ in range(3))
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
    top = el(c, t1_3=1)
    assert (top * el(c, t1=1)).is_zero()


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        el(ConductanceVector([3]), t1=1) * el(ConductanceVector([4]), t1=1)


def test_filtration_basis_examples():
    c22 = ConductanceVector([2, 2])
    gamma = Grading([1, 0])
    assert [k.name() for k in filtration_basis(c22, gamma, 1)] == ["t1"]
    assert [k.name() for k in filtration_basis(c22, gamma, 0)] == ["1", "t1", "t2"]
    c4 = ConductanceVector([4])
    std = Grading.standard(1)
    assert [k.name() for k in filtration_basis(c4, std, 2)] == ["t1^2", "t1^3"]
    # decreasing in d, empty beyond the top degree
    for d in range(-2, 5):
        lower = set(k.name() for k in filtration_basis(c4, std, d))
        higher = set(k.name() for k in filtration_basis(c4, std, d + 1))
        assert higher <= lower
    assert filtration_basis(c4, std, 4) == []


def test_apply_torus():
    c4 = ConductanceVector([4])
    x = el(c4, t1=1, t1_3=1)
    assert apply_torus([Fraction(1)], x) == x
    assert apply_torus([Fraction(2)], x) == el(c4, t1=2, t1_3=8)
    c22 = ConductanceVector([2, 2])
    y = el(c22, t1=1, t2=1)
    assert apply_torus([3, 5], y) == el(c22, t1=3, t2=5)
    with pytest.raises(ZeroScaleError):
        apply_torus([0, 1], y)


def test_apply_torus_is_multiplicative_group_action():
    rng = random.Random(8)
    c = ConductanceVector([3, 4])
    for _ in range(20):
        x, y = rand_element(c, rng), rand_element(c, rng)
        lam = [random_fraction(rng, zero_ok=False) for _ in range(2)]
        mu = [random_fraction(rng, zero_ok=False) for _ in range(2)]
        assert apply_torus(lam, apply_torus(mu, x)) == apply_torus(
            [a * b for a, b in zip(lam, mu)], x
        )
        assert apply_torus(lam, x * y) == apply_torus(lam, x) * apply_torus(lam, y)


def test_phi_a_symbolic_examples():
    c4 = ConductanceVector([4])
    t = el(c4, t1=1)
    image = apply_phi_a_symbolic(t)
    assert image.coeffs[Monomial(1, 1)] == LaurentPoly({0: 1})
    assert image.coeffs[Monomial(1, 2)] == LaurentPoly({-1: 1})
    cube = apply_phi_a_symbolic(el(c4, t1_3=1))
    assert cube == LaurentElement.from_element(el(c4, t1_3=1))
    c6 = ConductanceVector([6])
    sq = apply_phi_a_symbolic(el(c6, t1_2=1))
    assert sq.coeffs[Monomial(1, 2)] == LaurentPoly({0: 1})
    assert sq.coeffs[Monomial(1, 3)] == LaurentPoly({-1: 2})
    assert sq.coeffs[Monomial(1, 4)] == LaurentPoly({-2: 1})
    assert Monomial(1, 5) not in sq.coeffs


def test_phi_a_preserves_products_and_specializes():
    rng = random.Random(44)
    c = ConductanceVector([5, 3])
    for _ in range(15):
        x, y = rand_element(c, rng), rand_element(c, rng)
        fx, fy = apply_phi_a_symbolic(x), apply_phi_a_symbolic(y)
        assert fx * fy == apply_phi_a_symbolic(x * y)
        # at a = 1 this is the substitution t -> t + t^2
        images = {
            i: el(c, **{f"t{i}": 1}) + AlgebraElement(c, {Monomial(i, 2): 1})
            for i in (1, 2)
        }
        assert fx.specialize(1) == substitute_branches(x, images)


def test_substitution_validates():
    c = ConductanceVector([3, 3])
    x = el(c, t1=1)
    with pytest.raises(ValueError):
        substitute_branches(x, {1: el(c, t2=1), 2: el(c, t2=1)})
    images = {1: el(c, t1=1, t1_2=2), 2: el(c, t2=3)}
    # (t1 + 2 t1^2)^2 = t1^2 after truncation at t1^3
    assert substitute_branches(el(c, t1_2=1), images) == el(c, t1_2=1)
    assert substitute_branches(x, images) == images[1]


def test_element_json_round_trip():
    c = ConductanceVector([4])
    x = AlgebraElement(c, {CONST: Fraction(1), Monomial(1, 2): Fraction(3, 2)})
    data = x.to_json()
    assert data == {"c": [4], "coeffs": {"1": "1", "t1^2": "3/2"}}
    assert AlgebraElement.from_json(data) == x


def test_grading_degree_and_parts():
    g = Grading([2, -1])
    c = ConductanceVector([3, 3])
    assert g.degree(CONST) == 0
    assert g.degree(Monomial(1, 2)) == 4
    assert g.degree(Monomial(2, 2)) == -2
    x = el(c, t1=1, t2=1, t2_2=1)
    assert g.valuation(x) == -2
    assert g.homogeneous_part(x, 2) == el(c, t1=1)
