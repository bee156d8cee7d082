# =============================================================================
# spectrum.py – Sockel, V*(I), assoziierte und minimale Primideale
# =============================================================================
"""
p ∈ Ass(S/I) genau dann, wenn der Sockel von S(p)/I(p) nicht verschwindet,
also I(p) : m_p ≠ I(p). Alles läuft über monomiale Lokalisierung und
Quotientenideale, ohne Primärzerlegung.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..utils.errors import PreconditionError, PrimeNotInSupportError
from ..utils.parallel import ordered_map
from ..utils.subsets import check_dimension
from .core import (
    Localization,
    Monomial,
    MonomialIdeal,
    PrimeIdeal,
    colon,
    divisible_by_any,
    localize,
    maximal_ideal,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SocleReport:
    """Sockel von S/I: Erzeuger von (I : m), die nicht in I liegen"""

    is_zero: bool
    max_degree: int | None
    witnesses: tuple[Monomial, ...]


@dataclass(frozen=True)
class LocalSocle:
    """Sockel von S(p)/I(p); Zeugen zurück in den ambienten Ring gehoben"""

    prime: PrimeIdeal
    localization: Localization
    socle: SocleReport

    @property
    def min_degree(self) -> int:
        return min(self.localization.ideal.degrees())

    def lifted_witnesses(self) -> tuple[Monomial, ...]:
        return tuple(
            lift_monomial(w, self.localization.index_map, self.prime.ambient_dim)
            for w in self.socle.witnesses
        )


def lift_monomial(m: Monomial, index_map: tuple[int, ...], n: int) -> Monomial:
    exps = [0] * n
    for local_i, ambient_i in enumerate(index_map):
        exps[ambient_i] = m.exponents[local_i]
    return Monomial(tuple(exps))


def _require_proper(ideal: MonomialIdeal, *, allow_zero: bool = True) -> None:
    if ideal.is_unit():
        raise PreconditionError("Einsideal ist hier nicht erlaubt")
    if not allow_zero and ideal.is_zero():
        raise PreconditionError("Nullideal ist hier nicht erlaubt")


# -----------------------------------------------------------------------------
# Sockel
# -----------------------------------------------------------------------------
def socle(ideal: MonomialIdeal) -> SocleReport:
    """
    Sockel-Monome sind genau die minimalen Erzeuger von I : m außerhalb von I.
    Ein echtes Vielfaches eines solchen Erzeugers läge schon in I.
    """
    _require_proper(ideal)
    quotient = colon(ideal, maximal_ideal(ideal.ambient_dim))
    if ideal.is_zero() or quotient.is_zero():
        return SocleReport(True, None, ())
    outside = ~divisible_by_any(quotient.matrix, ideal.matrix)
    witnesses = tuple(g for g, keep in zip(quotient.generators, outside) if keep)
    if not witnesses:
        return SocleReport(True, None, ())
    return SocleReport(False, max(w.degree for w in witnesses), witnesses)


def local_socle(ideal: MonomialIdeal, prime: PrimeIdeal) -> LocalSocle:
    loc = localize(ideal, prime)
    rep = socle(loc.ideal)
    log.debug("Sockel bei %s: %s", prime, "0" if rep.is_zero else rep.max_degree)
    return LocalSocle(prime, loc, rep)


# -----------------------------------------------------------------------------
# V*(I) und Ass(S/I)
# -----------------------------------------------------------------------------
def v_star(ideal: MonomialIdeal) -> tuple[PrimeIdeal, ...]:
    """alle monomialen Primideale p_F ⊇ I, sortiert nach Höhe und Träger"""
    _require_proper(ideal, allow_zero=False)
    n = ideal.ambient_dim
    check_dimension(n)
    masks = np.arange(1, 1 << n, dtype=np.int64)
    ok = np.ones(masks.shape[0], dtype=bool)
    weights = 1 << np.arange(n, dtype=np.int64)
    for gen_mask in (ideal.matrix > 0).astype(np.int64) @ weights:
        ok &= (masks & gen_mask) != 0
    primes = [
        PrimeIdeal(n, frozenset(i for i in range(n) if (int(mask) >> i) & 1))
        for mask in masks[ok]
    ]
    return tuple(sorted(primes, key=PrimeIdeal.sort_key))


def is_associated(ideal: MonomialIdeal, prime: PrimeIdeal) -> bool:
    _require_proper(ideal, allow_zero=False)
    if not prime.contains_ideal(ideal):
        raise PrimeNotInSupportError(f"{prime} enthält {ideal} nicht")
    return not local_socle(ideal, prime).socle.is_zero


def local_socles(ideal: MonomialIdeal) -> list[LocalSocle]:
    """Sockel an jedem p ∈ V*(I), in der Reihenfolge von v_star"""
    candidates = v_star(ideal)
    return ordered_map(lambda p: local_socle(ideal, p), candidates, desc="V*(I)")


def associated_primes(ideal: MonomialIdeal) -> tuple[PrimeIdeal, ...]:
    ass = tuple(ls.prime for ls in local_socles(ideal) if not ls.socle.is_zero)
    log.debug("|Ass(S/I)| = %d", len(ass))
    return ass


def minimal_primes(ideal: MonomialIdeal) -> tuple[PrimeIdeal, ...]:
    candidates = v_star(ideal)
    return tuple(
        p for p in candidates
        if not any(q.support < p.support for q in candidates)
    )
