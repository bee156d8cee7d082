# tests/test_polymatroid.py
import pytest

from monomial_intersection.algebra.core import PrimeIdeal, prime_power_intersection
from monomial_intersection.algebra.decomp import canonical_decomposition, is_strong_intersection_type
from monomial_intersection.cli.parser import parse_ideal
from monomial_intersection.families.polymatroid import (
    DiscretePolymatroid,
    canonical_decomposition_polymatroidal,
    from_ideal,
    full_tau_intersection,
    generators_dominate_tau,
    is_polymatroidal,
    squarefree_veronese,
    tau_decomposition,
    tau_decomposition_reduced,
    transversal_ideal,
    veronese_ass,
    veronese_ideal,
    veronese_rank,
)
from monomial_intersection.utils.errors import PreconditionError

I431 = veronese_ideal(4, [3, 2, 1])


def fs(*idx):
    return frozenset(idx)


def test_veronese_431_generators():
    assert [g.exponents for g in I431.generators] == [
        (3, 1, 0), (3, 0, 1), (2, 2, 0), (2, 1, 1), (1, 2, 1),
    ]


def test_rank_table():
    poly = from_ideal(I431)
    assert poly.rank_table() == {
        fs(): 0, fs(0): 3, fs(1): 2, fs(2): 1,
        fs(0, 1): 4, fs(0, 2): 4, fs(1, 2): 3, fs(0, 1, 2): 4,
    }
    assert poly.is_monotone()
    assert poly.is_submodular()
    for f in poly.rank_table():
        assert poly.rank(f) == veronese_rank(4, [3, 2, 1], f)


def test_tau_table_and_closed_sets():
    poly = from_ideal(I431)
    assert poly.tau_table() == {
        fs(): 0, fs(0): 1, fs(1): 0, fs(2): 0,
        fs(0, 1): 3, fs(0, 2): 2, fs(1, 2): 1, fs(0, 1, 2): 4,
    }
    closed = {f for f in poly.tau_table() if f and poly.tau_closed(f)}
    assert closed == {fs(0), fs(0, 1), fs(0, 2), fs(1, 2), fs(0, 1, 2)}
    assert not any(poly.tau_separable(f) for f in closed)


def test_tau_closed_needs_nonempty_set():
    with pytest.raises(PreconditionError):
        from_ideal(I431).tau_closed(fs())


def test_tau_decomposition_equals_canonical_for_431():
    tau = tau_decomposition(I431)
    assert tau.components == canonical_decomposition(I431).components
    assert canonical_decomposition_polymatroidal(I431).components == tau.components
    assert generators_dominate_tau(I431)
    assert full_tau_intersection(I431) == I431


def test_polymatroidal_ideals_are_strong():
    assert is_strong_intersection_type(I431)


def test_squarefree_veronese_tau_decomposition_is_redundant():
    n = 4
    i = squarefree_veronese(n, n - 1)
    canonical = canonical_decomposition(i)
    assert {p.height for p in canonical.primes()} == {2}
    assert all(d == 1 for _, d in canonical)
    tau = tau_decomposition(i)
    assert not tau.irredundant
    assert all(d == p.height - 1 for p, d in tau)
    assert len(tau) == 11
    assert tau_decomposition_reduced(i).components == canonical.components


def test_veronese_ass_formula_matches_socle():
    for d, caps in [(4, [3, 2, 1]), (3, [1, 1, 1, 1]), (5, [2, 2, 2]), (3, [3, 3])]:
        primes = veronese_ass(d, caps)
        assert primes == tuple(sorted(canonical_decomposition(veronese_ideal(d, caps)).primes()))


def test_veronese_needs_enough_room():
    with pytest.raises(PreconditionError):
        veronese_ideal(5, [1, 1])


def test_non_polymatroidal_ideals():
    assert not is_polymatroidal(parse_ideal("x, y^2"))
    assert not is_polymatroidal(parse_ideal("x1*x2, x3*x4"))
    with pytest.raises(PreconditionError):
        DiscretePolymatroid(4, 2, ((1, 1, 0, 0), (0, 0, 1, 1)))


def test_transversal_ideal():
    t = transversal_ideal([[0, 1], [1, 2], [2]], 3)
    assert t.d == 3
    assert is_polymatroidal(t.ideal)
    assert t.rank_matches_bases()
    assert t.exponent_identity()
    assert canonical_decomposition_polymatroidal(t.ideal).reassemble() == t.ideal


def test_transversal_rejects_empty_factor():
    with pytest.raises(PreconditionError):
        transversal_ideal([[0], []], 2)


def test_tau_components_are_prime_powers():
    for p, d in tau_decomposition(I431):
        assert isinstance(p, PrimeIdeal)
        assert d >= 1


def test_squarefree_veronese_in_five_variables():
    i = squarefree_veronese(5, 4)
    canonical = canonical_decomposition(i)
    assert len(canonical) == 10
    assert all(p.height == 2 and d == 1 for p, d in canonical)
    tau = tau_decomposition(i)
    assert len(tau) == 26
    assert all(d == p.height - 1 for p, d in tau)
    assert prime_power_intersection(list(tau), 5) == i
    assert not tau.irredundant
    assert tau_decomposition_reduced(i).components == canonical.components


def test_transversal_with_uncovered_variables():
    t = transversal_ideal([[0, 2], [2]], 4)
    assert t.covered == (0, 2)
    assert t.rank([1, 3]) == 0
    assert t.rank_matches_bases()
    assert t.exponent_identity()
    small = t.restricted()
    assert small.ambient_dim == 2
    assert small.factors == (fs(0, 1), fs(1))
    assert [g.exponents for g in small.ideal.generators] == [
        (g.exponents[0], g.exponents[2]) for g in t.ideal.generators
    ]
    assert all(p.support <= fs(0, 2) for p in canonical_decomposition(t.ideal).primes())
