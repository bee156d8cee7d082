# =============================================================================
# newton.py – Newton-Polyeder, ganzer Abschluss, symbolische Potenzen
# =============================================================================
"""
con(I) = conv{a : x^a ∈ I} = conv(Erzeuger) + R^n_{≥0}.

Für I = ⋂ p_F^{d_F} vom Schnitt-Typ ist con(I) der Schnitt der Halbräume
H⁺_{F,d_F} = {ξ : Σ_{i∈F} ξ_i ≥ d_F} mit den Koordinaten-Halbräumen.
Allgemein wird c ∈ con(I) über das duale System entschieden:

    c ∉ con(I)  ⟺  ∃ w ≥ 0 :  w·g ≥ 1 für alle Erzeuger g,  w·c < 1

Unlösbar ⇒ Farkas-Multiplikatoren ergeben eine Konvexkombination q der
Erzeuger mit q ≤ c.  Lösbar ⇒ w ist eine trennende Hyperebene.

Suchbox für den ganzen Abschluss: 0 ≤ c ≤ M (M = komponentenweises
Maximum der Erzeuger). Mit c liegt auch min(c, M) in con(I), und
min(c, M) ∈ I zieht c ∈ I nach sich.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from ..algebra.core import (
    Monomial,
    MonomialIdeal,
    PrimeIdeal,
    componentwise_max,
    contains,
    divisible_by_any,
    intersect,
    intersect_all,
    is_subideal,
    localize,
    max_degree,
    power,
)
from ..algebra.decomp import (
    PrimePowerDecomposition,
    canonical_decomposition,
    intersection_type_report,
)
from ..algebra.resolution import regularity
from ..algebra.spectrum import associated_primes, minimal_primes
from ..families.polymatroid import from_ideal
from ..utils.errors import ConsistencyError, PreconditionError
from .fourier_motzkin import FourierMotzkin, Inequality

log = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# Hyperebenen
# -----------------------------------------------------------------------------
class HyperplaneKind(str, enum.Enum):
    PRIME_POWER = "prime_power"
    COORDINATE = "coordinate"


@dataclass(frozen=True)
class Hyperplane:
    support: frozenset[int]
    level: int
    kind: HyperplaneKind

    def __post_init__(self) -> None:
        if not self.support:
            raise PreconditionError("Hyperebene ohne Träger")
        if self.kind is HyperplaneKind.PRIME_POWER and self.level < 1:
            raise PreconditionError("Primpotenz-Hyperebene braucht Niveau ≥ 1")
        if self.kind is HyperplaneKind.COORDINATE and (len(self.support) != 1 or self.level != 0):
            raise PreconditionError("Koordinaten-Hyperebene ist ξ_i = 0")

    def contains_halfspace(self, exponents: Sequence[int]) -> bool:
        return sum(exponents[i] for i in self.support) >= self.level

    def format(self) -> str:
        return f"sum({','.join(str(i + 1) for i in sorted(self.support))}) = {self.level}"

    def as_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "support": [i + 1 for i in sorted(self.support)],
            "level": self.level,
        }


def _require_decomposition(ideal: MonomialIdeal) -> PrimePowerDecomposition:
    decomp = canonical_decomposition(ideal)
    if decomp is None:
        raise PreconditionError(f"{ideal} ist nicht vom Schnitt-Typ")
    return decomp


def supporting_hyperplanes(ideal: MonomialIdeal) -> tuple[Hyperplane, ...]:
    decomp = _require_decomposition(ideal)
    planes = [Hyperplane(p.support, d, HyperplaneKind.PRIME_POWER) for p, d in decomp]
    height_one = {next(iter(p.support)) for p in decomp.primes() if p.height == 1}
    planes += [
        Hyperplane(frozenset({i}), 0, HyperplaneKind.COORDINATE)
        for i in range(ideal.ambient_dim)
        if i not in height_one
    ]
    return tuple(planes)


# -----------------------------------------------------------------------------
# Zugehörigkeit zu con(I)
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class MembershipCertificate:
    member: bool
    weights: tuple[tuple[Monomial, Fraction], ...] = ()
    separator: tuple[Fraction, ...] | None = None


class NewtonPolyhedron:
    """con(I) mit vorberechneter Zerlegung (falls vom Schnitt-Typ)"""

    def __init__(self, ideal: MonomialIdeal):
        if ideal.is_zero():
            raise PreconditionError("Newton-Polyeder des Nullideals ist leer")
        self.ideal = ideal

    @cached_property
    def decomposition(self) -> PrimePowerDecomposition | None:
        if self.ideal.is_unit():
            return None
        return canonical_decomposition(self.ideal)

    def contains_halfspaces(self, m: Monomial) -> bool:
        if self.decomposition is None:
            raise PreconditionError("Halbraum-Test nur für Ideale vom Schnitt-Typ")
        return all(m.partial_degree(p.support) >= d for p, d in self.decomposition)

    def certificate(self, m: Monomial) -> MembershipCertificate:
        """exakte Entscheidung über das duale Trennproblem"""
        n = self.ideal.ambient_dim
        gens = self.ideal.generators
        if self.ideal.is_unit():
            return MembershipCertificate(True, ((gens[0], Fraction(1)),))
        rows = [
            Inequality.make([1 if j == i else 0 for j in range(n)], 0, origin=i)
            for i in range(n)
        ]
        rows += [Inequality.make(g.exponents, -1, origin=n + k) for k, g in enumerate(gens)]
        strict_origin = n + len(gens)
        rows.append(Inequality.make([-e for e in m.exponents], 1, strict=True, origin=strict_origin))
        result = FourierMotzkin(n, rows).solve()
        if result.feasible:
            return MembershipCertificate(False, separator=result.point)
        return self._convex_witness(m, result.farkas)

    def _convex_witness(self, m: Monomial, farkas: dict[int, Fraction]) -> MembershipCertificate:
        n = self.ideal.ambient_dim
        gens = self.ideal.generators
        lam = {k: farkas.get(n + k, Fraction(0)) for k in range(len(gens))}
        total = sum(lam.values(), Fraction(0))
        if total <= 0 or farkas.get(n + len(gens), Fraction(0)) <= 0:
            raise ConsistencyError("Farkas-Zertifikat ohne Erzeuger-Anteil", farkas, m)
        weights = tuple((gens[k], c / total) for k, c in lam.items() if c)
        point = [sum((w * g.exponents[i] for g, w in weights), Fraction(0)) for i in range(n)]
        if any(p > e for p, e in zip(point, m.exponents)):
            raise ConsistencyError("Konvexkombination liegt nicht unter dem Punkt", point, m)
        return MembershipCertificate(True, weights)

    def contains(self, m: Monomial, method: str = "auto") -> bool:
        if method not in ("auto", "halfspace", "polyhedral"):
            raise PreconditionError(f"unbekannte Methode {method!r}")
        if method == "halfspace" or (method == "auto" and self.decomposition is not None):
            return self.contains_halfspaces(m)
        return self.certificate(m).member


def newton_contains(ideal: MonomialIdeal, m: Monomial, method: str = "auto") -> bool:
    return NewtonPolyhedron(ideal).contains(m, method)


def box_points(bound: Sequence[int]) -> np.ndarray:
    """alle Gitterpunkte 0 ≤ c ≤ bound als (N, n)-Matrix"""
    grids = np.indices(tuple(b + 1 for b in bound)).reshape(len(bound), -1).T
    return grids.astype(np.int64)


def is_integrally_closed(ideal: MonomialIdeal, method: str = "auto") -> bool:
    if ideal.is_zero() or ideal.is_unit():
        raise PreconditionError("nur für echte Ideale ≠ 0")
    poly = NewtonPolyhedron(ideal)
    points = box_points(componentwise_max(ideal))
    outside = points[~divisible_by_any(points, ideal.matrix)]
    for row in outside:
        m = Monomial(tuple(int(v) for v in row))
        if poly.contains(m, method):
            log.debug("%s ∈ con(I), aber nicht in I", m)
            return False
    return True


# -----------------------------------------------------------------------------
# Primärkomponenten und symbolische Potenzen
# -----------------------------------------------------------------------------
def minimal_primary_component(ideal: MonomialIdeal, prime: PrimeIdeal) -> MonomialIdeal:
    if prime not in minimal_primes(ideal):
        raise PreconditionError(f"{prime} ist kein minimales Primideal von I")
    component = localize(ideal, prime).embed()
    ass = associated_primes(component)
    if ass != (prime,):
        raise ConsistencyError(f"Komponente bei {prime} ist nicht primär", ass, (prime,))
    return component


def minimal_primary_components(ideal: MonomialIdeal) -> list[MonomialIdeal]:
    return [minimal_primary_component(ideal, p) for p in minimal_primes(ideal)]


def symbolic_power(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    """I^{(t)} = ⋂ Q_i^t über die Primärkomponenten zu minimalen Primidealen"""
    if t < 1:
        raise PreconditionError(f"t = {t} < 1")
    comps = [power(q, t) for q in minimal_primary_components(ideal)]
    comps.sort(key=len)
    return intersect_all(comps, ideal.ambient_dim)


def symbolic_power_associated(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    """Vergleichsdefinition S ∩ ⋂_{p ∈ Ass} I^t S_p; liegt in symbolic_power"""
    if t < 1:
        raise PreconditionError(f"t = {t} < 1")
    it = power(ideal, t)
    out = None
    for p in associated_primes(ideal):
        part = localize(it, p).embed()
        out = part if out is None else intersect(out, part)
    return out


@dataclass(frozen=True)
class ContainmentReport:
    k: int
    power_is_intersection_type: bool
    regularity: int
    contained_at_regularity: bool
    polymatroid_degree: int | None
    contained_at_dk: bool | None
    surrogate_r: int
    contained_at_rk: bool

    def as_json(self) -> dict:
        return {
            "k": self.k,
            "power_is_intersection_type": self.power_is_intersection_type,
            "regularity": self.regularity,
            "contained_at_regularity": self.contained_at_regularity,
            "polymatroid_degree": self.polymatroid_degree,
            "contained_at_dk": self.contained_at_dk,
            "surrogate_r": self.surrogate_r,
            "contained_at_rk": self.contained_at_rk,
        }


def symbolic_containment(ideal: MonomialIdeal, k: int, force: bool = False) -> ContainmentReport:
    """
    s = reg(I^k): ist I^k vom Schnitt-Typ, muss I^{(s)} ⊆ I^k gelten.
    Polymatroidal in Grad d: I^{(dk)} ⊆ I^k.  Sonst nur Daten für r = max(I) + 1.
    """
    if k < 1:
        raise PreconditionError(f"k = {k} < 1")
    ik = power(ideal, k)
    typed = intersection_type_report(ik).is_intersection_type
    s = regularity(ik, force=force)
    at_reg = is_subideal(symbolic_power(ideal, s), ik)
    if typed and not at_reg:
        raise ConsistencyError(f"I^(reg) ⊄ I^{k} trotz Schnitt-Typ", s, ik)

    poly = from_ideal(ideal)
    d = at_dk = None
    if poly is not None:
        d = poly.d
        at_dk = is_subideal(symbolic_power(ideal, d * k), ik)
        if not at_dk:
            raise ConsistencyError(f"I^(dk) ⊄ I^{k} für polymatroidales I", d * k, ik)

    r = max_degree(ideal) + 1
    at_rk = is_subideal(symbolic_power(ideal, r * k), ik)
    return ContainmentReport(k, typed, s, at_reg, d, at_dk, r, at_rk)


@dataclass(frozen=True)
class NormalityRow:
    k: int
    is_intersection_type: bool
    is_integrally_closed: bool


def normality_report(ideal: MonomialIdeal, k_max: int) -> list[NormalityRow]:
    """Potenzen vom Schnitt-Typ müssen ganz abgeschlossen sein"""
    rows = []
    for k in range(1, k_max + 1):
        ik = power(ideal, k)
        typed = intersection_type_report(ik).is_intersection_type
        closed = is_integrally_closed(ik, method="polyhedral")
        if typed and not closed:
            raise ConsistencyError(f"I^{k} vom Schnitt-Typ, aber nicht ganz abgeschlossen", typed, closed)
        rows.append(NormalityRow(k, typed, closed))
    return rows


def power_trace_member(ideal: MonomialIdeal, m: Monomial, t_max: int = 6) -> int | None:
    """kleinstes t ≤ t_max mit m^t ∈ I^t, sonst None"""
    for t in range(1, t_max + 1):
        if contains(power(ideal, t), m ** t):
            return t
    return None
