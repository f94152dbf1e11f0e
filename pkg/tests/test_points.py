import random
from fractions import Fraction

import pytest

from territories.algebra import (
    CONST,
    AlgebraElement,
    ConductanceVector,
    Grading,
    Monomial,
    apply_torus,
)
from territories.errors import (
    ConstantRowError,
    IncomparableConductancesError,
    NotClosedError,
    PreconditionViolatedError,
)
from territories.points import SubalgebraPoint, make_point, monomial_point, point_check_report

from helpers import all_monomial_points, random_fraction, random_point, small_ambients


def el(ambient, coeffs):
    return AlgebraElement(ambient, {Monomial(b, e): Fraction(v) for (b, e), v in coeffs.items()})


C22 = ConductanceVector([2, 2])
C4 = ConductanceVector([4])
C42 = ConductanceVector([4, 2])


def tacnode(a=1, b=1):
    return make_point(C22, [el(C22, {(1, 1): a, (2, 1): b})])


def test_make_point_examples():
    assert tacnode().genus == 1
    with pytest.raises(NotClosedError) as info:
        make_point(ConductanceVector([3]), [el(ConductanceVector([3]), {(1, 1): 1})])
    assert info.value.details["product"]["coeffs"] == {"t1^2": "1"}
    ramphoid = make_point(C4, [el(C4, {(1, 2): 1, (1, 3): 1})])
    assert ramphoid.genus == 2


def test_make_point_rejects_constant_rows():
    with pytest.raises(ConstantRowError):
        make_point(C4, [AlgebraElement(C4, {CONST: 1, Monomial(1, 2): 1})])


def test_canonical_form_round_trip():
    rng = random.Random(1)
    for ambient in (C22, C42, ConductanceVector([3, 3])):
        for _ in range(10):
            point = random_point(ambient, rng)
            again = make_point(ambient, point.rows_as_elements())
            assert again == point
            assert SubalgebraPoint.from_json(point.to_json()) == point


def test_genus_delta_examples():
    assert (tacnode().genus, tacnode().delta) == (1, 2)
    cusp = make_point(C4, [el(C4, {(1, 2): 1}), el(C4, {(1, 3): 1})])
    assert (cusp.genus, cusp.delta) == (1, 1)
    deep = make_point(C4, [el(C4, {(1, 3): 1})])
    assert (deep.genus, deep.delta) == (2, 2)


def test_genus_rank_additivity():
    rng = random.Random(2)
    for ambient in small_ambients(5):
        point = random_point(ambient, rng)
        assert point.rank + point.genus == ambient.maximal_rank - 0
        assert point.genus >= 0


def test_exact_conductances():
    gor = make_point(
        C42,
        [el(C42, {(1, 2): 1, (1, 3): Fraction(1, 2)}), el(C42, {(1, 3): 2, (2, 1): 1})],
    )
    flags, overall = gor.exact_conductances()
    assert flags == (True, True) and overall
    deep = make_point(C4, [el(C4, {(1, 3): 1})])
    assert deep.exact_conductances() == ((False,), False)
    sq = make_point(ConductanceVector([3]), [el(ConductanceVector([3]), {(1, 2): 1})])
    assert sq.exact_conductances() == ((False,), False)


def test_gorenstein_profile():
    assert tacnode().is_gorenstein_profile()
    gor = make_point(
        C42,
        [el(C42, {(1, 2): 1, (1, 3): Fraction(1, 2)}), el(C42, {(1, 3): 2, (2, 1): 1})],
    )
    assert gor.is_gorenstein_profile()
    sq = make_point(ConductanceVector([3]), [el(ConductanceVector([3]), {(1, 2): 1})])
    with pytest.raises(PreconditionViolatedError):
        sq.is_gorenstein_profile()
    # non-Gorenstein exact point: k*1 inside (3)
    flat = make_point(ConductanceVector([3]), [])
    assert flat.exact_conductances()[1]
    assert not flat.is_gorenstein_profile()
    assert flat.conductance_window()["in_window"]


def test_window_on_exact_points():
    rng = random.Random(3)
    checked = 0
    for ambient in small_ambients(6):
        for _ in range(5):
            point = random_point(ambient, rng)
            if point.exact_conductances()[1]:
                window = point.conductance_window()
                assert window["in_window"], (point, window)
                checked += 1
    assert checked > 30


def test_vanishing_data_tacnode():
    gamma1 = Grading([1, 0])
    generic = tacnode(1, 1).vanishing_data(gamma1)
    assert generic.k == {0: 2}
    special = tacnode(1, 0).vanishing_data(gamma1)
    assert special.k == {0: 1, 1: 1}
    cusp = make_point(C4, [el(C4, {(1, 2): 1}), el(C4, {(1, 3): 1})])
    assert cusp.vanishing_data(Grading.standard(1)).k == {0: 1, 2: 1, 3: 1}


def test_vanishing_data_shape():
    rng = random.Random(9)
    for ambient in (C22, C42, ConductanceVector([3, 3])):
        for _ in range(8):
            point = random_point(ambient, rng)
            weights = [rng.choice([-1, 0, 1, 2]) for _ in range(ambient.m)]
            grading = Grading(weights)
            data = point.vanishing_data(grading)
            assert sum(data.k.values()) == point.rank + 1
            assert data.degree == sum(d * k for d, k in data.k.items())
            assert all(v >= 0 for v in data.gaps.values())
            # torus invariance
            scales = [random_fraction(rng, zero_ok=False) for _ in range(ambient.m)]
            assert point.apply_torus(scales).vanishing_data(grading) == data


def test_normal_basis_is_adapted():
    rng = random.Random(10)
    point = random_point(C42, rng)
    grading = Grading([1, 1])
    basis = point.normal_basis(grading)
    assert len(basis.entries) == point.rank + 1
    for level, element in basis.entries:
        assert grading.valuation(element) == level or element.coeffs.get(CONST)


def test_is_monomial_and_partition():
    cusp = make_point(C4, [el(C4, {(1, 2): 1}), el(C4, {(1, 3): 1})])
    assert cusp.is_monomial() == ((2, 3),)
    assert cusp.is_partition() == (2,)
    c6 = ConductanceVector([6])
    gappy = make_point(c6, [el(c6, {(1, 2): 1}), el(c6, {(1, 4): 1})])
    assert gappy.is_monomial() == ((2, 4),)
    assert gappy.is_partition() is None
    assert tacnode().is_monomial() is None
    assert tacnode().is_partition() is None
    empty = make_point(C22, [])
    assert empty.is_partition() == (2, 2)


def test_truncate_and_lift():
    c3 = ConductanceVector([3])
    small = make_point(c3, [el(c3, {(1, 2): 1})])
    lifted = small.lift(C4)
    assert lifted == make_point(C4, [el(C4, {(1, 2): 1}), el(C4, {(1, 3): 1})])
    assert lifted.genus == small.genus
    assert lifted.truncate(c3) == small
    rampho = make_point(C4, [el(C4, {(1, 2): 1, (1, 3): 1})])
    assert rampho.truncate(c3) is None
    with pytest.raises(IncomparableConductancesError):
        small.truncate(C4)


def test_truncate_lift_round_trip_random():
    rng = random.Random(13)
    big = ConductanceVector([5, 3])
    smaller = ConductanceVector([3, 2])
    for _ in range(10):
        point = random_point(smaller, rng)
        lifted = point.lift(big)
        assert lifted.genus == point.genus
        assert lifted.truncate(smaller) == point


def test_monomial_points_and_reports():
    for ambient in (C22, C42):
        for point in all_monomial_points(ambient):
            assert point.is_monomial() is not None
    report = point_check_report(tacnode())
    assert report["genus"] == 1 and report["exact"] and report["gorenstein"]
    assert report["vanishing"] == {"0": 1, "1": 1}
