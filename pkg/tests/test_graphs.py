# tests/test_graphs.py
import pytest

from monomial_intersection.algebra.core import Monomial, PrimeIdeal, contains, localize, power
from monomial_intersection.algebra.decomp import is_intersection_type
from monomial_intersection.algebra.resolution import has_linear_resolution
from monomial_intersection.families.graphs import (
    Graph,
    ass_square_bound,
    central_cycles,
    cycle_graph,
    depth_zero_square,
    edge_ideal,
    higher_powers_not_intersection_type,
    is_central,
    odd_cycle_report,
    persistence_report,
    square_extra_primes,
    square_is_intersection_type,
    three_cycles,
)
from monomial_intersection.utils.corpus import atlas_graphs, random_graphs
from monomial_intersection.utils.errors import IdealParseError, PreconditionError

# xy, xz, yz, zt, tu
G1 = Graph.from_inline("1-2,1-3,2-3,3-4,4-5")
# xy, yz, xz, yt, zt, tu
G2 = Graph.from_inline("1-2,2-3,1-3,2-4,3-4,4-5")
TRIANGLE = Graph.from_inline("1-2,2-3,1-3")


def test_inline_and_edge_list_agree():
    lines = ["# Dreieck", "1 2", "2 3", "", "1 3"]
    assert Graph.from_edge_list(lines) == TRIANGLE


def test_bad_edges():
    with pytest.raises(IdealParseError):
        Graph.from_inline("1-2,2")
    with pytest.raises(PreconditionError):
        Graph.from_inline("1-1")


def test_edge_ideal_of_triangle():
    ideal = edge_ideal(TRIANGLE)
    assert [g.exponents for g in ideal.generators] == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]


def test_three_cycles_and_centrality():
    assert three_cycles(G1) == ((0, 1, 2),)
    assert not is_central(G1, (0, 1, 2))
    assert central_cycles(G2) == [((0, 1, 2), False), ((1, 2, 3), True)]
    with pytest.raises(PreconditionError):
        is_central(G1, (0, 1, 3))


def test_square_of_triangle_is_intersection_type():
    assert square_is_intersection_type(TRIANGLE)
    assert ass_square_bound(TRIANGLE)


def test_square_of_g1_is_not_intersection_type():
    assert not square_is_intersection_type(G1)
    assert not ass_square_bound(G1)


def test_square_of_g2_picks_up_one_extra_prime():
    assert not square_is_intersection_type(G2)
    assert square_extra_primes(G2) == (PrimeIdeal(5, frozenset({0, 1, 2, 3})),)


def test_powers_of_g2_are_linear_but_not_intersection_type():
    square = power(edge_ideal(G2), 2)
    assert has_linear_resolution(square)
    assert not is_intersection_type(square)


def test_isolated_vertices_are_rejected():
    with pytest.raises(PreconditionError):
        square_is_intersection_type(Graph.from_inline("1-2", n=3))


def test_depth_zero_square():
    rep = depth_zero_square(TRIANGLE)
    assert rep.depth_zero
    assert rep.witness == Monomial((1, 1, 1))
    path = Graph.from_inline("1-2,2-3")
    assert not depth_zero_square(path).depth_zero
    with_y = depth_zero_square(TRIANGLE, extra=1)
    assert with_y.depth_zero
    assert with_y.witness == Monomial((1, 1, 1, 0))


def test_higher_powers_witness_degrees():
    rows = higher_powers_not_intersection_type(G1, 3)
    assert [r.k for r in rows] == [2, 3]
    assert [r.witness_degree for r in rows] == [3, 5]
    assert all(not r.is_intersection_type for r in rows)
    assert rows[0].prime == PrimeIdeal(5, frozenset({0, 1, 2, 3}))


def test_higher_powers_on_disconnected_graph():
    two_triangles = Graph.from_inline("1-2,2-3,1-3,4-5,5-6,4-6")
    rows = higher_powers_not_intersection_type(two_triangles, 2)
    assert rows[0].witness == Monomial((1, 1, 1, 0, 0, 0))


def test_higher_powers_requires_non_central_cycle():
    with pytest.raises(PreconditionError):
        higher_powers_not_intersection_type(TRIANGLE, 3)


def test_odd_cycle_data():
    rows = odd_cycle_report(5, 2)
    assert [r.s for r in rows] == [1, 2]
    assert rows[0].is_intersection_type
    # C_5 hat keine 3-Kreise
    assert rows[1].is_intersection_type
    with pytest.raises(PreconditionError):
        odd_cycle_report(4, 2)


def test_persistence_on_cycle():
    assert all(persistence_report(cycle_graph(5), 3))


def test_graph_criterion_on_small_atlas():
    for g in atlas_graphs(max_vertices=4):
        direct = is_intersection_type(power(edge_ideal(g), 2))
        assert square_is_intersection_type(g) == direct
        assert ass_square_bound(g) == direct


@pytest.mark.slow
def test_graph_criterion_on_full_atlas():
    for g in atlas_graphs(max_vertices=6):
        assert square_is_intersection_type(g) == ass_square_bound(g)
        if not square_is_intersection_type(g, cross_check=False):
            assert len(higher_powers_not_intersection_type(g, 3)) == 2


@pytest.mark.slow
def test_graph_criterion_on_random_graphs():
    for g in random_graphs(seed=5, count=200, n=7, p=0.5):
        direct = is_intersection_type(power(edge_ideal(g), 2))
        assert square_is_intersection_type(g, cross_check=False) == direct
        assert ass_square_bound(g) == direct


@pytest.mark.parametrize("g", [G1, G2])
def test_higher_power_witnesses_lie_in_the_local_socle(g):
    ideal = edge_ideal(g)
    for row in higher_powers_not_intersection_type(g, 3):
        assert row.witness_degree == 2 * row.k - 1
        local = localize(power(ideal, row.k), row.prime)
        n = local.ideal.ambient_dim
        w = Monomial(tuple(row.witness.exponents[i] for i in local.index_map))
        assert not contains(local.ideal, w)
        assert all(contains(local.ideal, w * Monomial.variable(i, n)) for i in range(n))


def test_associated_primes_persist_on_small_atlas():
    for g in atlas_graphs(max_vertices=5):
        assert all(persistence_report(g, 3))
