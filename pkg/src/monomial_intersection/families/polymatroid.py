# =============================================================================
# polymatroid.py – diskrete Polymatroide und ihre Ideale
# =============================================================================
"""
Ein diskretes Polymatroid wird über seine Basen B(P) gespeichert; ρ und τ
werden daraus berechnet:

    ρ(F) = max{u(F) : u ∈ B(P)},     τ(F) = d − ρ([n] ∖ F)

Polymatroidale Ideale sind vom starken Schnitt-Typ, ihre kanonische
Zerlegung ist ⋂_{p_F ∈ Ass} p_F^{τ(F)}.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from ..algebra.core import (
    MonomialIdeal,
    PrimeIdeal,
    ideal_from_rows,
    monomials_of_degree,
    multiply,
    prime_power_intersection,
    unit_ideal,
)
from ..algebra.decomp import (
    PrimePowerDecomposition,
    canonical_decomposition,
    eliminate_redundant,
)
from ..algebra.spectrum import associated_primes
from ..utils.errors import ConsistencyError, PreconditionError
from ..utils.subsets import bipartitions, check_dimension, proper_subsets, subsets

log = logging.getLogger(__name__)

Subset = frozenset[int]


# -----------------------------------------------------------------------------
# Datentyp
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class DiscretePolymatroid:
    ambient_dim: int
    d: int
    bases: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        bases = tuple(sorted({tuple(int(v) for v in u) for u in self.bases}))
        if not bases:
            raise PreconditionError("Polymatroid ohne Basen")
        for u in bases:
            if len(u) != self.ambient_dim or min(u) < 0:
                raise PreconditionError(f"ungültige Basis {u}")
            if sum(u) != self.d:
                raise PreconditionError(f"Basis {u} hat nicht den Betrag {self.d}")
        object.__setattr__(self, "bases", bases)
        bad = exchange_violation(bases)
        if bad is not None:
            raise PreconditionError(f"Austauscheigenschaft verletzt bei u={bad[0]}, v={bad[1]}, i={bad[2]}")

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.asarray(self.bases, dtype=np.int64)

    def rank(self, f: Iterable[int]) -> int:
        cols = sorted(f)
        if not cols:
            return 0
        return int(self.matrix[:, cols].sum(axis=1).max())

    def tau(self, f: Iterable[int]) -> int:
        f = frozenset(f)
        return self.d - self.rank(frozenset(range(self.ambient_dim)) - f)

    def localization_degree(self, f: Iterable[int]) -> int:
        """I(p_F) ist in Grad d − ρ([n] ∖ F) erzeugt"""
        f = frozenset(f)
        if not f:
            raise PreconditionError("F muss nicht leer sein")
        return self.tau(f)

    def rank_table(self) -> dict[Subset, int]:
        check_dimension(self.ambient_dim)
        return {f: self.rank(f) for f in subsets(self.ambient_dim, nonempty=False)}

    def tau_table(self) -> dict[Subset, int]:
        check_dimension(self.ambient_dim)
        return {f: self.tau(f) for f in subsets(self.ambient_dim, nonempty=False)}

    def is_monotone(self) -> bool:
        table = self.rank_table()
        return all(
            table[f] <= table[f | {i}]
            for f in table
            for i in range(self.ambient_dim)
            if i not in f
        )

    def is_submodular(self) -> bool:
        table = self.rank_table()
        keys = list(table)
        return all(
            table[f] + table[g] >= table[f & g] + table[f | g]
            for a, f in enumerate(keys)
            for g in keys[a + 1:]
        )

    def tau_closed(self, f: Iterable[int]) -> bool:
        """τ(G) < τ(F) für jede echte Teilmenge G, auch G = ∅"""
        f = frozenset(f)
        if not f:
            raise PreconditionError("F muss nicht leer sein")
        t = self.tau(f)
        return all(self.tau(g) < t for g in proper_subsets(f))

    def tau_separable(self, f: Iterable[int]) -> bool:
        f = frozenset(f)
        if not f:
            raise PreconditionError("F muss nicht leer sein")
        t = self.tau(f)
        return any(self.tau(g) + self.tau(h) == t for g, h in bipartitions(f))

    def ideal(self) -> MonomialIdeal:
        return ideal_from_rows(self.matrix, self.ambient_dim)


def exchange_violation(bases: Sequence[tuple[int, ...]]) -> tuple | None:
    """erstes (u, v, i) ohne passendes j, sonst None"""
    base_set = set(bases)
    n = len(bases[0])
    for u in bases:
        for v in bases:
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                found = False
                for j in range(n):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in base_set:
                            found = True
                            break
                if not found:
                    return u, v, i
    return None


def from_ideal(ideal: MonomialIdeal) -> DiscretePolymatroid | None:
    """Polymatroid der Erzeuger, falls I in einem Grad erzeugt ist und tauscht"""
    if ideal.is_zero():
        raise PreconditionError("Nullideal hat kein Polymatroid")
    if not ideal.is_equigenerated():
        return None
    bases = tuple(g.exponents for g in ideal.generators)
    if exchange_violation(bases) is not None:
        return None
    return DiscretePolymatroid(ideal.ambient_dim, ideal.generators[0].degree, bases)


def is_polymatroidal(ideal: MonomialIdeal) -> bool:
    return from_ideal(ideal) is not None


def _require_polymatroid(ideal: MonomialIdeal) -> DiscretePolymatroid:
    poly = from_ideal(ideal)
    if poly is None:
        raise PreconditionError(f"{ideal} ist nicht polymatroidal")
    return poly


# -----------------------------------------------------------------------------
# Zerlegungen über ρ und τ
# -----------------------------------------------------------------------------
def canonical_decomposition_polymatroidal(ideal: MonomialIdeal) -> PrimePowerDecomposition:
    """⋂ p_F^{τ(F)} über Ass(S/I); muss mit dem Sockel-Weg übereinstimmen"""
    poly = _require_polymatroid(ideal)
    comps = [(p, poly.tau(p.support)) for p in associated_primes(ideal)]
    decomp = PrimePowerDecomposition.verified(ideal, comps)
    via_socle = canonical_decomposition(ideal)
    if via_socle is None or via_socle.components != decomp.components:
        raise ConsistencyError("Rang-Zerlegung != Sockel-Zerlegung", decomp, via_socle)
    return decomp


def full_tau_intersection(ideal: MonomialIdeal) -> MonomialIdeal:
    poly = _require_polymatroid(ideal)
    n = ideal.ambient_dim
    comps = [(PrimeIdeal(n, f), poly.tau(f)) for f in subsets(n)]
    return prime_power_intersection([c for c in comps if c[1] >= 1], n)


def tau_components(poly: DiscretePolymatroid) -> list[tuple[PrimeIdeal, int]]:
    """(p_F, τ(F)) über τ-abgeschlossene, τ-untrennbare F mit τ(F) ≥ 1"""
    n = poly.ambient_dim
    out = []
    for f in subsets(n):
        t = poly.tau(f)
        if t >= 1 and poly.tau_closed(f) and not poly.tau_separable(f):
            out.append((PrimeIdeal(n, f), t))
    return out


def tau_decomposition(ideal: MonomialIdeal) -> PrimePowerDecomposition:
    poly = _require_polymatroid(ideal)
    decomp = PrimePowerDecomposition.verified(ideal, tau_components(poly))
    log.debug("τ-Zerlegung: %d Komponenten, irredundant=%s", len(decomp), decomp.irredundant)
    return decomp


def tau_decomposition_reduced(ideal: MonomialIdeal) -> PrimePowerDecomposition:
    decomp = tau_decomposition(ideal)
    return eliminate_redundant(decomp.components, ideal.ambient_dim)


def generators_dominate_tau(ideal: MonomialIdeal) -> bool:
    """u(F) ≥ τ(F) für jede Basis u und jedes F"""
    poly = _require_polymatroid(ideal)
    return all(
        sum(u[i] for i in f) >= t
        for f, t in poly.tau_table().items()
        for u in poly.bases
    )


# -----------------------------------------------------------------------------
# Veronese-Typ
# -----------------------------------------------------------------------------
def veronese_ideal(d: int, caps: Sequence[int]) -> MonomialIdeal:
    """I_{d;a_1..a_n}: alle Monome vom Grad d mit c_i ≤ a_i"""
    n = len(caps)
    if d < 1 or any(a < 1 for a in caps):
        raise PreconditionError("d und alle Schranken a_i müssen positiv sein")
    if sum(caps) < d:
        raise PreconditionError(f"Σ a_i = {sum(caps)} < d = {d}: das Ideal wäre leer")
    rows = monomials_of_degree(n, d)
    rows = rows[(rows <= np.asarray(caps, dtype=np.int64)).all(axis=1)]
    return ideal_from_rows(rows, n)


def veronese_rank(d: int, caps: Sequence[int], f: Iterable[int]) -> int:
    return min(d, sum(caps[i] for i in f))


def veronese_ass(d: int, caps: Sequence[int], verify: bool = True) -> tuple[PrimeIdeal, ...]:
    """
    Geschlossene Form: p_F ∈ Ass ⟺ Σ_i a_i ≥ d − 1 + |F| und Σ_{i∉F} a_i ≤ d − 1.
    Gilt für d ≥ a_i ≥ 1.
    """
    n = len(caps)
    if any(a < 1 or a > d for a in caps):
        raise PreconditionError("Formel verlangt d ≥ a_i ≥ 1")
    total = sum(caps)
    primes = tuple(
        PrimeIdeal(n, f)
        for f in subsets(n)
        if total >= d - 1 + len(f) and sum(caps[i] for i in range(n) if i not in f) <= d - 1
    )
    primes = tuple(sorted(primes, key=PrimeIdeal.sort_key))
    if verify:
        via_socle = associated_primes(veronese_ideal(d, caps))
        if via_socle != primes:
            raise ConsistencyError("Veronese-Ass: Formel != Sockel", primes, via_socle)
    return primes


def squarefree_veronese(n: int, d: int) -> MonomialIdeal:
    return veronese_ideal(d, [1] * n)


# -----------------------------------------------------------------------------
# Transversale Polymatroide
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class TransversalIdeal:
    """Produkt p_{F_1} ⋯ p_{F_d}. Variablen außerhalb von ⋃F_i kommen im Ideal nicht vor
    und haben Rang 0; `restricted()` streicht sie."""

    ambient_dim: int
    factors: tuple[Subset, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise PreconditionError("mindestens ein Faktor nötig")
        for f in self.factors:
            if not f:
                raise PreconditionError("leerer Faktor p_∅")
            if min(f) < 0 or max(f) >= self.ambient_dim:
                raise PreconditionError(f"Faktor {sorted(f)} außerhalb 0..{self.ambient_dim - 1}")

    @property
    def d(self) -> int:
        return len(self.factors)

    @property
    def covered(self) -> tuple[int, ...]:
        return tuple(sorted(frozenset().union(*self.factors)))

    def restricted(self) -> TransversalIdeal:
        """Gleiches Ideal in den Variablen von ⋃F_i, neu durchnummeriert"""
        index = {v: k for k, v in enumerate(self.covered)}
        return TransversalIdeal(
            len(index), tuple(frozenset(index[v] for v in f) for f in self.factors)
        )

    @cached_property
    def ideal(self) -> MonomialIdeal:
        out = unit_ideal(self.ambient_dim)
        for f in self.factors:
            out = multiply(out, PrimeIdeal(self.ambient_dim, f).ideal)
        return out

    @cached_property
    def intersection_graph(self) -> nx.Graph:
        """Knoten = Faktoren, Kante falls F_i ∩ F_j ≠ ∅"""
        g = nx.Graph()
        g.add_nodes_from(range(self.d))
        for i in range(self.d):
            for j in range(i + 1, self.d):
                if self.factors[i] & self.factors[j]:
                    g.add_edge(i, j)
        return g

    def rank(self, f: Iterable[int]) -> int:
        f = frozenset(f)
        return sum(1 for fi in self.factors if fi & f)

    def polymatroid(self) -> DiscretePolymatroid:
        return _require_polymatroid(self.ideal)

    def rank_matches_bases(self) -> bool:
        poly = self.polymatroid()
        return all(self.rank(f) == poly.rank(f) for f in subsets(self.ambient_dim, nonempty=False))

    def exponent_identity(self) -> bool:
        """d = |{i : F_i ⊆ F}| + ρ([n] ∖ F) für alle F"""
        full = frozenset(range(self.ambient_dim))
        return all(
            self.d == sum(1 for fi in self.factors if fi <= f) + self.rank(full - f)
            for f in subsets(self.ambient_dim, nonempty=False)
        )


def transversal_ideal(factors: Iterable[Iterable[int]], n: int) -> TransversalIdeal:
    return TransversalIdeal(n, tuple(frozenset(f) for f in factors))
