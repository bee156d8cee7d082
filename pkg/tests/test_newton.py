# tests/test_newton.py
from fractions import Fraction

import pytest

from monomial_intersection.algebra.core import Monomial, componentwise_max, contains, is_subideal, power
from monomial_intersection.cli.parser import parse_ideal, parse_ideal_with_names
from monomial_intersection.families.polymatroid import squarefree_veronese, veronese_ideal
from monomial_intersection.utils.corpus import random_ideals
from monomial_intersection.geometry.newton import (
    HyperplaneKind,
    NewtonPolyhedron,
    box_points,
    is_integrally_closed,
    minimal_primary_components,
    newton_contains,
    normality_report,
    power_trace_member,
    supporting_hyperplanes,
    symbolic_containment,
    symbolic_power,
    symbolic_power_associated,
)
from monomial_intersection.utils.errors import PreconditionError

I431 = veronese_ideal(4, [3, 2, 1])


def test_supporting_hyperplanes_of_431():
    planes = supporting_hyperplanes(I431)
    assert [h.format() for h in planes] == [
        "sum(1) = 1",
        "sum(2,3) = 1",
        "sum(1,3) = 2",
        "sum(1,2) = 3",
        "sum(1,2,3) = 4",
        "sum(2) = 0",
        "sum(3) = 0",
    ]
    assert planes[-1].kind is HyperplaneKind.COORDINATE
    assert planes[0].as_json() == {"kind": "prime_power", "support": [1], "level": 1}


def test_hyperplanes_need_intersection_type():
    with pytest.raises(PreconditionError):
        supporting_hyperplanes(parse_ideal("x, y^2"))


def test_halfspace_and_polyhedral_membership_agree():
    poly = NewtonPolyhedron(I431)
    for row in box_points((3, 2, 2)):
        m = Monomial(tuple(int(v) for v in row))
        assert poly.contains(m, "halfspace") == poly.contains(m, "polyhedral")


def test_certificate_with_convex_weights():
    i = parse_ideal("x^2, y^2")
    cert = NewtonPolyhedron(i).certificate(Monomial((1, 1)))
    assert cert.member
    assert dict(cert.weights) == {
        Monomial((2, 0)): Fraction(1, 2),
        Monomial((0, 2)): Fraction(1, 2),
    }


def test_certificate_with_separator():
    i = parse_ideal("x, y^2")
    cert = NewtonPolyhedron(i).certificate(Monomial((0, 1)))
    assert not cert.member
    w = cert.separator
    assert all(v >= 0 for v in w)
    assert all(sum(a * b for a, b in zip(g.exponents, w)) >= 1 for g in i.generators)
    assert w[1] < 1


def test_zero_ideal_has_no_polyhedron():
    with pytest.raises(PreconditionError):
        NewtonPolyhedron(parse_ideal("0", ("x", "y")))


def test_integral_closure():
    assert is_integrally_closed(I431, method="polyhedral")
    assert is_integrally_closed(parse_ideal("x, y^2"), method="polyhedral")
    assert not is_integrally_closed(parse_ideal("x^2, y^2"), method="polyhedral")
    assert is_integrally_closed(parse_ideal("xy, xz, yz"), method="polyhedral")
    assert newton_contains(parse_ideal("x^2, y^2"), Monomial((1, 1)))


def test_power_trace_member():
    assert power_trace_member(parse_ideal("x^2, y^2"), Monomial((1, 1))) == 2
    assert power_trace_member(parse_ideal("x, y^2"), Monomial((0, 1))) is None


def test_symbolic_square_of_triangle():
    i = parse_ideal("xy, xz, yz")
    sym = symbolic_power(i, 2)
    assert Monomial((1, 1, 1)) in sym
    assert Monomial((1, 1, 1)) not in power(i, 2)
    assert is_subideal(power(i, 2), sym)


def test_minimal_primary_components_drop_embedded_part():
    i = parse_ideal("x^2, x*y")
    assert minimal_primary_components(i) == [parse_ideal("x", ("x", "y"))]
    assert symbolic_power(i, 2) == parse_ideal("x^2", ("x", "y"))


def test_associated_variant_lies_inside_symbolic_power():
    i = parse_ideal("x^2, x*y")
    assert is_subideal(symbolic_power_associated(i, 2), symbolic_power(i, 2))


def test_containment_for_431():
    rep = symbolic_containment(I431, 1)
    assert rep.power_is_intersection_type
    assert rep.regularity == 4
    assert rep.contained_at_regularity
    assert rep.polymatroid_degree == 4
    assert rep.contained_at_dk
    assert rep.surrogate_r == 5
    assert rep.contained_at_rk


def test_symbolic_power_needs_positive_exponent():
    with pytest.raises(PreconditionError):
        symbolic_power(I431, 0)


def test_normality_of_polymatroidal_powers():
    rows = normality_report(I431, 2)
    assert [(r.k, r.is_intersection_type, r.is_integrally_closed) for r in rows] == [
        (1, True, True),
        (2, True, True),
    ]


@pytest.mark.slow
def test_membership_on_rp2_square():
    j, _ = parse_ideal_with_names("xyz, xyt, xzu, xtv, xuv, yzv, ytu, yuv, ztu, ztv")
    j2 = power(j, 2)
    xyztuv = Monomial((1, 1, 1, 1, 1, 1))
    # Sockel-Element von S/J², liegt aber in con(J²)
    assert NewtonPolyhedron(j2).certificate(xyztuv).member


def test_power_trace_implies_newton_membership():
    for i in random_ideals(seed=19, count=8, n_max=3, max_generators=4, max_degree=3):
        for row in box_points(componentwise_max(i)):
            m = Monomial(tuple(int(v) for v in row))
            if contains(i, m):
                continue
            if power_trace_member(i, m, t_max=3) is not None:
                assert newton_contains(i, m, method="polyhedral")
    assert newton_contains(parse_ideal("x^2, y^2"), Monomial((1, 1)), method="polyhedral")


@pytest.mark.parametrize("ideal", [
    I431,
    parse_ideal("xy, xz, yz"),
    squarefree_veronese(4, 2),
])
def test_symbolic_containment_for_squares(ideal):
    rep = symbolic_containment(ideal, 2)
    assert rep.k == 2
    assert rep.power_is_intersection_type
    assert rep.contained_at_regularity
    assert rep.contained_at_dk
