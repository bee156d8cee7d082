# tests/test_fourier_motzkin.py
from fractions import Fraction

from monomial_intersection.geometry.fourier_motzkin import FourierMotzkin, Inequality


def test_strict_bound_against_weak_bound_is_infeasible():
    # x ≥ 1  und  1 - x > 0
    rows = [Inequality.make([1], -1, origin=0), Inequality.make([-1], 1, strict=True, origin=1)]
    res = FourierMotzkin(1, rows).solve()
    assert not res.feasible
    assert set(res.farkas) == {0, 1}
    assert all(c > 0 for c in res.farkas.values())


def test_feasible_system_returns_a_point():
    # x ≥ 1,  3 - x > 0,  y ≥ x
    rows = [
        Inequality.make([1, 0], -1),
        Inequality.make([-1, 0], 3, strict=True),
        Inequality.make([-1, 1], 0),
    ]
    res = FourierMotzkin(2, rows).solve()
    assert res.feasible
    assert all(r.satisfied_by(res.point) for r in rows)


def test_open_interval_picks_an_interior_point():
    rows = [Inequality.make([1], 0, strict=True), Inequality.make([-1], 1, strict=True)]
    res = FourierMotzkin(1, rows).solve()
    assert res.feasible
    assert Fraction(0) < res.point[0] < Fraction(1)


def test_contradiction_without_variables():
    rows = [Inequality.make([0], -1, origin=0)]
    res = FourierMotzkin(1, rows).solve()
    assert not res.feasible
    assert res.farkas == {0: Fraction(1)}
