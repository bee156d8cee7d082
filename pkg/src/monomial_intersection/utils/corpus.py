# corpus.py
# ============================================================================
#  Reproduzierbare Zufalls-Korpora für die Eigenschafts-Tests:
#  Ideale, Graphen, Primideal-Ketten, nicht-prinzipale Borel-Ideale.
#  Alle Generatoren nehmen einen numpy-Generator (default_rng(seed)).
# ============================================================================
from __future__ import annotations

import logging
from typing import Iterator

import networkx as nx
import numpy as np

from ..algebra.core import Monomial, MonomialIdeal, PrimeIdeal, ideal_from_rows
from ..families.borel import borel_closure, principal_generator
from ..families.graphs import Graph

log = logging.getLogger(__name__)

DEFAULT_SEED = 20240901


def rng_for(seed: int | None = None) -> np.random.Generator:
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


# --------------------------------------------------------------------------- #
# Ideale
# --------------------------------------------------------------------------- #
def random_ideal(
    rng: np.random.Generator, n: int, max_generators: int = 8, max_degree: int = 4
) -> MonomialIdeal:
    """echtes Ideal ≠ 0; Erzeuger vom Grad 1..max_degree"""
    count = int(rng.integers(1, max_generators + 1))
    rows = [
        random_monomial(rng, n, int(rng.integers(1, max_degree + 1))).exponents
        for _ in range(count)
    ]
    return ideal_from_rows(rows, n)


def random_ideals(
    seed: int, count: int, n_max: int = 4, max_generators: int = 8, max_degree: int = 4
) -> Iterator[MonomialIdeal]:
    rng = rng_for(seed)
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        yield random_ideal(rng, n, max_generators, max_degree)


# --------------------------------------------------------------------------- #
# Graphen
# --------------------------------------------------------------------------- #
def atlas_graphs(max_vertices: int = 6) -> Iterator[Graph]:
    """alle Graphen bis max_vertices Ecken (bis auf Isomorphie), ohne isolierte Ecken"""
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() > max_vertices:
            break
        if g.number_of_edges() == 0 or any(True for _ in nx.isolates(g)):
            continue
        yield Graph.from_networkx(g)


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    """G(n, p) ohne isolierte Ecken, neu gezogen bis es passt"""
    while True:
        g = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31 - 1)))
        if g.number_of_edges() and not any(True for _ in nx.isolates(g)):
            return Graph.from_networkx(g)


def random_graphs(seed: int, count: int, n: int = 7, p: float = 0.5) -> Iterator[Graph]:
    rng = rng_for(seed)
    for _ in range(count):
        yield random_graph(rng, n, p)


# --------------------------------------------------------------------------- #
# Ketten p_1 ⊂ … ⊂ p_s mit d_1 < … < d_s
# --------------------------------------------------------------------------- #
def random_chain(
    rng: np.random.Generator, n: int, max_exponent: int = 6
) -> list[tuple[PrimeIdeal, int]]:
    order = [int(i) for i in rng.permutation(n)]
    s = int(rng.integers(1, min(n, max_exponent) + 1))
    sizes = sorted(int(v) for v in rng.choice(np.arange(1, n + 1), size=s, replace=False))
    exps = sorted(int(v) for v in rng.choice(np.arange(1, max_exponent + 1), size=s, replace=False))
    return [(PrimeIdeal(n, frozenset(order[:k])), d) for k, d in zip(sizes, exps)]


def random_chains(
    seed: int, count: int, n_max: int = 6, max_exponent: int = 6
) -> Iterator[list[tuple[PrimeIdeal, int]]]:
    rng = rng_for(seed)
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        yield random_chain(rng, n, max_exponent)


# --------------------------------------------------------------------------- #
# Borel-fixe Ideale, die nicht prinzipal sind
# --------------------------------------------------------------------------- #
def random_monomial(rng: np.random.Generator, n: int, d: int) -> Monomial:
    cuts = np.sort(rng.integers(0, d + 1, size=n - 1))
    return Monomial(tuple(int(v) for v in np.diff(np.concatenate(([0], cuts, [d])))))


def random_nonprincipal_borel(
    rng: np.random.Generator, n: int, max_degree: int = 4, tries: int = 50
) -> MonomialIdeal | None:
    for _ in range(tries):
        k = int(rng.integers(2, 4))
        mons = [random_monomial(rng, n, int(rng.integers(1, max_degree + 1))) for _ in range(k)]
        ideal = borel_closure(mons, n)
        if principal_generator(ideal) is None:
            return ideal
    log.debug("kein nicht-prinzipales Borel-Ideal nach %d Versuchen (n=%d)", tries, n)
    return None


def random_nonprincipal_borels(seed: int, count: int, n_max: int = 4) -> Iterator[MonomialIdeal]:
    rng = rng_for(seed)
    produced = 0
    while produced < count:
        ideal = random_nonprincipal_borel(rng, int(rng.integers(2, n_max + 1)))
        if ideal is not None:
            produced += 1
            yield ideal
