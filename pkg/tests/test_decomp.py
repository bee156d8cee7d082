# tests/test_decomp.py
import pytest

from monomial_intersection.algebra.core import (
    Monomial,
    PrimeIdeal,
    ideal_from_rows,
    localize,
    min_degree,
    power,
    saturate,
    truncate,
    zero_ideal,
)
from monomial_intersection.algebra.decomp import (
    PrimePowerDecomposition,
    canonical_decomposition,
    eliminate_redundant,
    exponent_bound_check,
    intersection_type_report,
    is_intersection_type,
    is_intersection_type_bruteforce,
    is_strong_intersection_type,
    saturation_exponent,
    verify_saturation_criterion,
)
from monomial_intersection.algebra.spectrum import socle
from monomial_intersection.cli.parser import parse_ideal, parse_ideal_with_names
from monomial_intersection.families.polymatroid import veronese_ideal
from monomial_intersection.utils.corpus import random_ideals
from monomial_intersection.utils.errors import ConsistencyError, PreconditionError

RP2 = "xyz, xyt, xzu, xtv, xuv, yzv, ytu, yuv, ztu, ztv"


def prime(n, *idx):
    return PrimeIdeal(n, frozenset(idx))


def test_canonical_decomposition_of_veronese_431():
    i = veronese_ideal(4, [3, 2, 1])
    decomp = canonical_decomposition(i)
    assert decomp is not None
    assert list(decomp) == [
        (prime(3, 0), 1),
        (prime(3, 1, 2), 1),
        (prime(3, 0, 2), 2),
        (prime(3, 0, 1), 3),
        (prime(3, 0, 1, 2), 4),
    ]
    assert decomp.irredundant
    assert decomp.reassemble() == i


def test_squarefree_triangle_is_intersection_of_primes():
    i, names = parse_ideal_with_names("xy, xz, yz")
    decomp = canonical_decomposition(i)
    assert decomp.format(names) == "(x,y) ∩ (x,z) ∩ (y,z)"
    assert is_strong_intersection_type(i)


def test_embedded_example_is_intersection_type_but_not_strong():
    i = parse_ideal("x^2, x*y, x*z, x*t, y*z*t")
    decomp = canonical_decomposition(i)
    assert decomp.exponent(PrimeIdeal.maximal(4)) == 2
    assert decomp.exponent(prime(4, 0, 1)) == 1
    assert not is_strong_intersection_type(i)


def test_x_y_squared_is_not_intersection_type():
    i = parse_ideal("x, y^2")
    report = intersection_type_report(i)
    assert not report.is_intersection_type
    (diag,) = report.failing
    assert diag.prime == PrimeIdeal.maximal(2)
    assert (diag.min_degree, diag.socle_degree) == (1, 1)
    assert diag.witness == Monomial((0, 1))
    assert canonical_decomposition(i, report) is None


def test_zero_and_unit_ideal_are_rejected():
    with pytest.raises(PreconditionError):
        is_intersection_type(zero_ideal(2))
    with pytest.raises(PreconditionError):
        is_intersection_type(ideal_from_rows([(0, 0)], 2))


def test_verified_rejects_wrong_components():
    i = parse_ideal("x1*x2")
    with pytest.raises(ConsistencyError):
        PrimePowerDecomposition.verified(i, [(prime(2, 0), 1)])


def test_eliminate_redundant_drops_larger_prime():
    decomp = eliminate_redundant([(prime(2, 0), 1), (prime(2, 0, 1), 1)], 2)
    assert list(decomp) == [(prime(2, 0), 1)]
    assert decomp.irredundant


def test_saturation_exponent_is_min_degree_of_localization():
    i = veronese_ideal(4, [3, 2, 1])
    for p, d in canonical_decomposition(i):
        assert saturation_exponent(i, p) == min_degree(localize(i, p).ideal) == d
    assert saturation_exponent(parse_ideal("x, y^2"), PrimeIdeal.maximal(2)) is None


def test_exponent_bound_holds_for_intersection_type():
    assert exponent_bound_check(veronese_ideal(4, [3, 2, 1]))
    assert exponent_bound_check(parse_ideal("x^2, x*y, x*z, x*t, y*z*t"))


def test_socle_criterion_matches_bruteforce_hull_on_random_ideals():
    for i in random_ideals(seed=7, count=25, n_max=3, max_generators=5, max_degree=3):
        if i.is_unit():
            continue
        assert is_intersection_type(i) == is_intersection_type_bruteforce(i)
        verify_saturation_criterion(i)


def test_rp2_square_is_not_intersection_type():
    j, names = parse_ideal_with_names(RP2)
    assert names == ("x", "y", "z", "t", "u", "v")
    j2 = power(j, 2)
    assert min_degree(j2) == 6
    xyztuv = Monomial((1, 1, 1, 1, 1, 1))
    assert xyztuv not in j2
    assert xyztuv in socle(j2).witnesses
    report = intersection_type_report(j2)
    assert PrimeIdeal.maximal(6) in report.associated_primes
    assert not report.is_intersection_type


@pytest.mark.slow
def test_rp2_cube_has_seventeen_components():
    j, names = parse_ideal_with_names(RP2)
    j3 = power(j, 3)
    decomp = canonical_decomposition(j3)
    assert decomp is not None
    assert len(decomp) == 17
    idx = {name: k for k, name in enumerate(names)}
    triples = ["vuy", "vux", "vtz", "vtx", "vzy", "utz", "tuy", "uzx", "txy", "zxy"]
    expected = {(prime(6, *(idx[c] for c in t)), 3) for t in triples}
    expected |= {(PrimeIdeal(6, frozenset(range(6)) - {k}), 6) for k in range(6)}
    expected.add((PrimeIdeal.maximal(6), 9))
    assert set(decomp) == expected
    assert {p.height for p in decomp.primes()} == {3, 5, 6}
    assert is_strong_intersection_type(j3, force=True)


@pytest.mark.slow
def test_rp2_cube_localizations():
    j, names = parse_ideal_with_names(RP2)
    j3 = power(j, 3)
    four = localize(j3, prime(6, 0, 1, 2, 3)).ideal
    assert set(four.degrees()) == {3, 4, 5, 6}
    five = localize(j3, prime(6, 0, 1, 2, 3, 4)).ideal
    c5 = parse_ideal("xt, tz, zy, yu, ux", ("x", "y", "z", "t", "u"))
    assert five == power(c5, 3)


def test_saturation_criterion_on_m_primary_cube():
    cube = parse_ideal("x1^3, x2^3, x3^3")
    assert verify_saturation_criterion(cube) is False
    assert saturation_exponent(cube, PrimeIdeal.maximal(3)) is None


@pytest.mark.parametrize("text", [
    "x1^3*x2, x1^3*x3, x1^2*x2^2, x1^2*x2*x3, x1*x2^2*x3",
    "x^2, x*y, x*z, x*t, y*z*t",
    "xy, xz, yz",
])
def test_localization_is_truncated_saturation(text):
    i = parse_ideal(text)
    for p, d in canonical_decomposition(i):
        local = localize(i, p).ideal
        sat = saturate(local, PrimeIdeal.maximal(local.ambient_dim))
        assert truncate(sat, d) == local
