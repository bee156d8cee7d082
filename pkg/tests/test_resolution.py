# tests/test_resolution.py
import pytest

from monomial_intersection.algebra.core import ideal_from_rows, maximal_ideal, power
from monomial_intersection.algebra.homology import full_simplex, matrix_rank, reduced_homology
from monomial_intersection.algebra.resolution import (
    betti,
    betti_taylor,
    cross_check,
    has_linear_resolution,
    lcm_lattice,
    regularity,
    taylor_euler_characteristic,
)
from monomial_intersection.cli.parser import parse_ideal
from monomial_intersection.families.polymatroid import veronese_ideal
from monomial_intersection.utils.corpus import random_ideals
from monomial_intersection.utils.errors import PreconditionError, SizeGuardError
from monomial_intersection.utils.settings import configure


def test_reduced_homology_of_empty_face_only():
    assert reduced_homology([()]) == {-1: 1}


def test_reduced_homology_of_simplex_vanishes():
    assert reduced_homology(full_simplex([0, 1, 2])) == {}


def test_reduced_homology_of_circle():
    faces = [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]
    assert reduced_homology(faces) == {1: 1}


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert matrix_rank(rows, 2, 0) == 2
    assert matrix_rank(rows, 2, 2) == 1


def test_betti_of_two_variables():
    table = betti(parse_ideal("x, y"))
    assert table.entries == {(0, 1): 2, (1, 2): 1}
    assert table.regularity == 1
    assert table.projective_dimension == 1


def test_betti_of_triangle():
    table = betti(parse_ideal("xy, xz, yz"))
    assert table.entries == {(0, 2): 3, (1, 3): 2}
    assert table.regularity == 2
    assert table.is_linear()


def test_koszul_and_taylor_agree():
    for text in ["x, y", "xy, xz, yz", "x^2, x*y, y^3", "x^2, x*y, x*z, x*t, y*z*t"]:
        i = parse_ideal(text)
        assert cross_check(i)
        assert betti(i) == betti_taylor(i)


def test_taylor_euler_characteristic():
    assert taylor_euler_characteristic(parse_ideal("x, y"), (1, 1)) == -1
    assert taylor_euler_characteristic(parse_ideal("x, y"), (2, 2)) == 0


def test_lcm_lattice_contains_generators_and_total_lcm():
    lattice = lcm_lattice(parse_ideal("x^2, x*y, y^3"))
    assert (2, 0) in lattice and (0, 3) in lattice
    assert lattice[-1] == (2, 3)


def test_polymatroidal_ideal_has_linear_resolution():
    i = veronese_ideal(4, [3, 2, 1])
    assert has_linear_resolution(i)
    assert regularity(i) == 4


def test_mixed_degrees_are_not_linear():
    assert not has_linear_resolution(parse_ideal("x, y^2"))


def test_size_guard_and_force():
    i = parse_ideal("x^3, x^2*y, x*y^2, y^3")
    configure(max_generators=2)
    with pytest.raises(SizeGuardError):
        betti(i)
    assert betti(i, force=True).regularity == 3


def test_betti_rejects_zero_ideal():
    with pytest.raises(PreconditionError):
        betti(ideal_from_rows([], 2))


def test_betti_over_finite_field_matches_for_monomial_examples():
    i = parse_ideal("xy, xz, yz")
    configure(characteristic=2)
    table = betti(i)
    assert table.characteristic == 2
    assert table.entries == {(0, 2): 3, (1, 3): 2}


@pytest.mark.slow
def test_koszul_and_taylor_agree_on_random_ideals():
    for i in random_ideals(seed=13, count=100, n_max=4, max_generators=8, max_degree=4):
        assert cross_check(i)
        assert betti(i, force=True) == betti_taylor(i)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_powers_of_maximal_ideal_are_linear(n, d):
    md = power(maximal_ideal(n), d)
    assert regularity(md, force=True) == d
    assert has_linear_resolution(md, force=True)
