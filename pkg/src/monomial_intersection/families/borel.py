# borel.py
# ============================================================================
#  Borel-Typ, prinzipale Borel-Ideale, Ketten von Primidealpotenzen.
#
#  ⟨u⟩ = p_1^{u_1} p_2^{u_2} ⋯ p_n^{u_n}   mit p_j = (x_1..x_j)
#  ⋂ p_i^{d_i} (Kette, d_1 < … < d_s) = ⟨x_{n_1}^{d_1} x_{n_2}^{d_2-d_1} ⋯⟩
# ============================================================================
from __future__ import annotations

import enum
import logging
from typing import Iterable, Sequence

from ..algebra.core import (
    Monomial,
    MonomialIdeal,
    PrimeIdeal,
    intersect_prime_power,
    minimal_generators,
    multiply,
    permute,
    prime_power_intersection,
    saturate,
    unit_ideal,
)
from ..algebra.decomp import intersection_type_report
from ..utils.errors import ConsistencyError, PreconditionError

log = logging.getLogger(__name__)

Chain = Sequence[tuple[PrimeIdeal, int]]


class BorelClass(str, enum.Enum):
    STRONG = "strong"
    INTERSECTION_ONLY = "intersection_only"
    NEITHER = "neither"


# --------------------------------------------------------------------------- #
# Borel-Abschluss
# --------------------------------------------------------------------------- #
def borel_closure(monomials: Iterable[Monomial], n: int) -> MonomialIdeal:
    """kleinstes Borel-fixes Ideal, Fixpunkt der Züge x_j → x_i (i < j)"""
    seen = {m.exponents for m in monomials}
    todo = list(seen)
    while todo:
        exps = todo.pop()
        for j in range(1, n):
            if not exps[j]:
                continue
            for i in range(j):
                moved = list(exps)
                moved[j] -= 1
                moved[i] += 1
                key = tuple(moved)
                if key not in seen:
                    seen.add(key)
                    todo.append(key)
    return minimal_generators((Monomial(e) for e in seen), n)


def principal_borel(u: Monomial) -> MonomialIdeal:
    """Produkt-Formel, gegen den Abschluss-Fixpunkt geprüft"""
    if u.is_one():
        raise PreconditionError("prinzipales Borel-Ideal von 1 ist nicht erlaubt")
    n = u.n
    product = unit_ideal(n)
    for j, e in enumerate(u.exponents):
        if e:
            factor = intersect_prime_power(unit_ideal(n), range(j + 1), e)
            product = multiply(product, factor)
    closure = borel_closure([u], n)
    if product != closure:
        log.error("⟨%s⟩: Produkt %s, Abschluss %s", u, product, closure)
        raise ConsistencyError(f"⟨{u}⟩: Produkt-Formel != Borel-Abschluss", product, closure)
    return product


def is_borel_fixed(ideal: MonomialIdeal) -> bool:
    return borel_closure(ideal.generators, ideal.ambient_dim) == ideal


def is_borel_type(ideal: MonomialIdeal) -> bool:
    """I : x_j^∞ = I : (x_1..x_j)^∞ für alle j"""
    if ideal.is_zero():
        raise PreconditionError("Nullideal ist hier nicht erlaubt")
    n = ideal.ambient_dim
    for j in range(n):
        single = saturate(ideal, PrimeIdeal(n, frozenset({j})))
        initial = saturate(ideal, PrimeIdeal(n, frozenset(range(j + 1))))
        if single != initial:
            log.debug("kein Borel-Typ bei j=%d", j + 1)
            return False
    return True


def principal_generator(ideal: MonomialIdeal) -> Monomial | None:
    """u mit I = ⟨u⟩, falls es eines gibt"""
    if ideal.is_zero() or ideal.is_unit() or not ideal.is_equigenerated():
        return None
    for g in reversed(ideal.generators):
        if principal_borel(g) == ideal:
            return g
    return None


# --------------------------------------------------------------------------- #
# Ketten
# --------------------------------------------------------------------------- #
def _validate_chain(chain: Chain) -> None:
    if not chain:
        raise PreconditionError("leere Kette")
    for (p, d), (q, e) in zip(chain, chain[1:]):
        if not p.support < q.support:
            raise PreconditionError(f"{p} ⊂ {q} ist keine echte Inklusion")
        if not d < e:
            raise PreconditionError(f"Exponenten nicht streng wachsend: {d}, {e}")
    if chain[0][1] < 1:
        raise PreconditionError("Exponenten müssen positiv sein")


def chain_ideal(chain: Chain) -> MonomialIdeal:
    _validate_chain(chain)
    return prime_power_intersection(chain, chain[0][0].ambient_dim)


def chain_relabelling(chain: Chain) -> tuple[int, ...]:
    """perm[i] = neuer Index von x_i, sodass die Kette aus Anfangsstücken besteht"""
    n = chain[0][0].ambient_dim
    order: list[int] = []
    for p, _ in chain:
        order.extend(sorted(p.support - set(order)))
    order.extend(i for i in range(n) if i not in order)
    perm = [0] * n
    for new, old in enumerate(order):
        perm[old] = new
    return tuple(perm)


def reconstruct_borel_generator(chain: Chain) -> tuple[Monomial, tuple[int, ...]]:
    """
    u = x_{n_1}^{d_1} x_{n_2}^{d_2-d_1} ⋯ in umbenannten Koordinaten,
    zusammen mit der Umbenennung
    """
    _validate_chain(chain)
    n = chain[0][0].ambient_dim
    perm = chain_relabelling(chain)
    exps = [0] * n
    previous = 0
    for p, d in chain:
        exps[p.height - 1] += d - previous
        previous = d
    return Monomial(tuple(exps)), perm


def chain_as_principal_borel(chain: Chain) -> MonomialIdeal:
    u, perm = reconstruct_borel_generator(chain)
    inverse = [0] * len(perm)
    for old, new in enumerate(perm):
        inverse[new] = old
    return permute(principal_borel(u), inverse)


# --------------------------------------------------------------------------- #
# Klassifikation
# --------------------------------------------------------------------------- #
def borel_intersection_classifier(ideal: MonomialIdeal) -> BorelClass:
    if not is_borel_type(ideal):
        raise PreconditionError(f"{ideal} ist nicht vom Borel-Typ")
    report = intersection_type_report(ideal)
    if not report.is_intersection_type:
        return BorelClass.NEITHER
    chain = sorted(
        ((d.prime, d.socle_degree + 1) for d in report.diagnostics),
        key=lambda c: c[0].height,
    )
    try:
        candidate = chain_as_principal_borel(chain)
    except PreconditionError:
        candidate = None
    if candidate == ideal:
        return BorelClass.STRONG
    log.error("Borel-Typ und Schnitt-Typ, aber nicht prinzipal: %s", ideal)
    return BorelClass.INTERSECTION_ONLY
