# tests/test_borel.py
import pytest

from monomial_intersection.algebra.core import Monomial, PrimeIdeal
from monomial_intersection.algebra.decomp import is_strong_intersection_type
from monomial_intersection.cli.parser import parse_ideal
from monomial_intersection.families.borel import (
    BorelClass,
    borel_closure,
    borel_intersection_classifier,
    chain_as_principal_borel,
    chain_ideal,
    is_borel_fixed,
    is_borel_type,
    principal_borel,
    principal_generator,
    reconstruct_borel_generator,
)
from monomial_intersection.utils.corpus import random_chains, random_nonprincipal_borels
from monomial_intersection.utils.errors import PreconditionError

X12 = ("x1", "x2")


def test_principal_borel_of_x1_x2_squared():
    ideal = principal_borel(Monomial((1, 2)))
    assert ideal == parse_ideal("x1^3, x1^2*x2, x1*x2^2", X12)
    assert principal_generator(ideal) == Monomial((1, 2))


def test_principal_borel_of_one_is_rejected():
    with pytest.raises(PreconditionError):
        principal_borel(Monomial((0, 0)))


def test_borel_closure_is_borel_fixed():
    ideal = borel_closure([Monomial((0, 1, 1))], 3)
    assert is_borel_fixed(ideal)
    assert is_borel_type(ideal)


def test_chain_reconstructs_generator():
    chain = [(PrimeIdeal(2, frozenset({0})), 1), (PrimeIdeal.maximal(2), 3)]
    u, perm = reconstruct_borel_generator(chain)
    assert u == Monomial((1, 2))
    assert perm == (0, 1)
    assert chain_as_principal_borel(chain) == chain_ideal(chain)
    assert borel_intersection_classifier(chain_ideal(chain)) is BorelClass.STRONG


def test_chain_with_relabelling():
    # (x2) ⊂ (x1, x2): nach Umbenennung x2 → x1 wieder prinzipal
    chain = [(PrimeIdeal(2, frozenset({1})), 2), (PrimeIdeal.maximal(2), 3)]
    u, perm = reconstruct_borel_generator(chain)
    assert perm == (1, 0)
    assert u == Monomial((2, 1))
    assert chain_as_principal_borel(chain) == chain_ideal(chain)


def test_invalid_chains():
    p1, m = PrimeIdeal(2, frozenset({0})), PrimeIdeal.maximal(2)
    with pytest.raises(PreconditionError):
        chain_ideal([(p1, 3), (m, 2)])
    with pytest.raises(PreconditionError):
        chain_ideal([(m, 1), (p1, 2)])
    with pytest.raises(PreconditionError):
        chain_ideal([])


def test_borel_type_but_not_intersection_type():
    assert borel_intersection_classifier(parse_ideal("x1, x2^2", X12)) is BorelClass.NEITHER


def test_classifier_needs_borel_type():
    with pytest.raises(PreconditionError):
        borel_intersection_classifier(parse_ideal("x2", X12))


def test_fifty_random_chains_are_principal_borel():
    for chain in random_chains(seed=3, count=50, n_max=6, max_exponent=6):
        u, _ = reconstruct_borel_generator(chain)
        assert u.degree == chain[-1][1]
        assert chain_as_principal_borel(chain) == chain_ideal(chain)


def test_small_random_chains_are_strong():
    for chain in random_chains(seed=3, count=12, n_max=4, max_exponent=4):
        ideal = chain_ideal(chain)
        assert chain_as_principal_borel(chain) == ideal
        assert is_strong_intersection_type(ideal)


def test_nonprincipal_borel_ideals_are_neither():
    for ideal in random_nonprincipal_borels(seed=11, count=6, n_max=3):
        assert borel_intersection_classifier(ideal) is BorelClass.NEITHER


def test_m_primary_borel_type_ideals_are_neither():
    i = parse_ideal("x1^3, x2^3", X12)
    assert is_borel_type(i)
    assert borel_intersection_classifier(i) is BorelClass.NEITHER
    assert borel_intersection_classifier(parse_ideal("x1^2, x1*x2, x2^3", X12)) is BorelClass.NEITHER
