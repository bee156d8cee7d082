# =============================================================================
# decomp.py – Schnitt-Typ, kanonische Primärzerlegung, starker Schnitt-Typ
# =============================================================================
"""
I ist vom Schnitt-Typ (I = ⋂ p^{d_p}) genau dann, wenn für jedes
p ∈ Ass(S/I) gilt: min(I(p)) > max(Soc(S(p)/I(p))).  Dann ist
d_p = max(Soc(S(p)/I(p))) + 1 und die Zerlegung über Ass(S/I) irredundant.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

from ..utils.errors import ConsistencyError, PreconditionError
from ..utils.subsets import subsets
from .core import (
    Monomial,
    MonomialIdeal,
    PrimeIdeal,
    format_prime,
    intersect_prime_power,
    localize,
    min_degree,
    prime_power_intersection,
    saturate,
    truncate,
    unit_ideal,
)
from .resolution import has_linear_resolution, regularity
from .spectrum import LocalSocle, local_socles

log = logging.getLogger(__name__)

Component = tuple[PrimeIdeal, int]


def component_key(c: Component) -> tuple:
    prime, d = c
    return (prime.height, d, prime.sorted_support)


# -----------------------------------------------------------------------------
# Datentyp Zerlegung
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class PrimePowerDecomposition:
    ambient_dim: int
    components: tuple[Component, ...]
    irredundant: bool

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.components]
        if len(set(primes)) != len(primes):
            raise PreconditionError("Primideal mehrfach in der Zerlegung")
        for p, d in self.components:
            if d < 1:
                raise PreconditionError(f"Exponent {d} < 1 bei {p}")
            if p.ambient_dim != self.ambient_dim:
                raise PreconditionError(f"{p} lebt nicht in Dimension {self.ambient_dim}")

    @classmethod
    def verified(cls, source: MonomialIdeal, components: Iterable[Component]) -> PrimePowerDecomposition:
        """sortiert, prüft ⋂ p^d = source und bestimmt die Irredundanz"""
        comps = tuple(sorted(components, key=component_key))
        n = source.ambient_dim
        assembled = prime_power_intersection(comps, n)
        if assembled != source:
            log.error("Zusammenbau %s != Quelle %s", assembled, source)
            raise ConsistencyError("Zerlegung ergibt nicht das Ideal", source, assembled)
        return cls(n, comps, _is_irredundant(comps, source))

    def primes(self) -> tuple[PrimeIdeal, ...]:
        return tuple(p for p, _ in self.components)

    def exponent(self, prime: PrimeIdeal) -> int | None:
        return dict(self.components).get(prime)

    def reassemble(self) -> MonomialIdeal:
        return prime_power_intersection(self.components, self.ambient_dim)

    def __iter__(self) -> Iterator[Component]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def format(self, names=None) -> str:
        return " ∩ ".join(
            f"{format_prime(p, names)}^{d}" if d > 1 else format_prime(p, names)
            for p, d in self.components
        )


def _is_irredundant(comps: tuple[Component, ...], target: MonomialIdeal) -> bool:
    n = target.ambient_dim
    for skip in range(len(comps)):
        rest = comps[:skip] + comps[skip + 1:]
        if prime_power_intersection(rest, n) == target:
            return False
    return True


def eliminate_redundant(
    components: Iterable[Component], n: int
) -> PrimePowerDecomposition:
    """
    Ein Durchlauf: Komponente weglassen, solange der Schnitt gleich bleibt.
    Der Rest ist irredundant, denn Weglassen vergrößert den Schnitt monoton.
    """
    comps = sorted(components, key=component_key)
    target = prime_power_intersection(comps, n)
    kept = list(comps)
    for comp in reversed(comps):
        trial = [c for c in kept if c != comp]
        if prime_power_intersection(trial, n) == target:
            kept = trial
    return PrimePowerDecomposition(n, tuple(sorted(kept, key=component_key)), True)


# -----------------------------------------------------------------------------
# Schnitt-Typ-Entscheidung
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class PrimeDiagnostic:
    prime: PrimeIdeal
    min_degree: int
    socle_degree: int
    witnesses: tuple[Monomial, ...]

    @property
    def ok(self) -> bool:
        return self.min_degree > self.socle_degree

    @property
    def witness(self) -> Monomial:
        return self.witnesses[0]


@dataclass(frozen=True)
class IntersectionTypeReport:
    ideal: MonomialIdeal
    diagnostics: tuple[PrimeDiagnostic, ...]

    @property
    def is_intersection_type(self) -> bool:
        return all(d.ok for d in self.diagnostics)

    @property
    def associated_primes(self) -> tuple[PrimeIdeal, ...]:
        return tuple(d.prime for d in self.diagnostics)

    @property
    def failing(self) -> tuple[PrimeDiagnostic, ...]:
        return tuple(d for d in self.diagnostics if not d.ok)

    def __bool__(self) -> bool:
        return self.is_intersection_type


def _diagnostic(ls: LocalSocle) -> PrimeDiagnostic:
    top = tuple(w for w in ls.lifted_witnesses() if w.degree == ls.socle.max_degree)
    return PrimeDiagnostic(ls.prime, ls.min_degree, ls.socle.max_degree, top)


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero():
        raise PreconditionError("Nullideal ist hier nicht erlaubt")
    if ideal.is_unit():
        raise PreconditionError("Einsideal ist hier nicht erlaubt")


def intersection_type_report(ideal: MonomialIdeal) -> IntersectionTypeReport:
    """pro p ∈ Ass(S/I): (min I(p), max Sockelgrad, Sockel-Zeuge höchsten Grades)"""
    _require_proper_nonzero(ideal)
    diags = tuple(_diagnostic(ls) for ls in local_socles(ideal) if not ls.socle.is_zero)
    report = IntersectionTypeReport(ideal, diags)
    log.info(
        "Ass: %d Primideale, Schnitt-Typ: %s", len(diags), report.is_intersection_type
    )
    for d in report.failing:
        log.debug("verletzt bei %s: min=%d, Sockel=%d, Zeuge %s",
                  d.prime, d.min_degree, d.socle_degree, d.witness)
    return report


def is_intersection_type(ideal: MonomialIdeal) -> bool:
    return intersection_type_report(ideal).is_intersection_type


def canonical_decomposition(
    ideal: MonomialIdeal, report: IntersectionTypeReport | None = None
) -> PrimePowerDecomposition | None:
    if report is None:
        report = intersection_type_report(ideal)
    if not report.is_intersection_type:
        return None
    comps = [(d.prime, d.socle_degree + 1) for d in report.diagnostics]
    return PrimePowerDecomposition.verified(ideal, comps)


# -----------------------------------------------------------------------------
# Saturierungs-Kriterium
# -----------------------------------------------------------------------------
def saturation_exponent(ideal: MonomialIdeal, prime: PrimeIdeal) -> int | None:
    """
    a mit I(p) = sat(I(p)) ∩ m_p^a, sonst None.  Für p ∈ Ass kommt nur
    a = min(I(p)) in Frage.
    """
    loc = localize(ideal, prime).ideal
    m_p = PrimeIdeal.maximal(loc.ambient_dim)
    a = min_degree(loc)
    if a < 1:
        return None
    return a if truncate(saturate(loc, m_p), a) == loc else None


def verify_saturation_criterion(ideal: MonomialIdeal) -> bool:
    report = intersection_type_report(ideal)
    ok = all(saturation_exponent(ideal, p) is not None for p in report.associated_primes)
    if ok != report.is_intersection_type:
        raise ConsistencyError(
            "Saturierungs-Kriterium widerspricht dem Sockel-Kriterium",
            ok, report.is_intersection_type,
        )
    return ok


# -----------------------------------------------------------------------------
# Starker Schnitt-Typ und Regularitäts-Schranke
# -----------------------------------------------------------------------------
def is_strong_intersection_type(ideal: MonomialIdeal, force: bool = False) -> bool:
    report = intersection_type_report(ideal)
    if not report.is_intersection_type:
        log.info("nicht stark: I ist nicht vom Schnitt-Typ")
        return False
    for prime in report.associated_primes:
        loc = localize(ideal, prime).ideal
        if not loc.is_equigenerated():
            log.info("nicht stark: I(%s) nicht in einem Grad erzeugt", prime)
            return False
        if not has_linear_resolution(loc, force=force):
            log.info("nicht stark: I(%s) hat keine lineare Auflösung", prime)
            return False
    return True


def exponent_bound_check(ideal: MonomialIdeal, force: bool = False) -> bool:
    """d_p ≤ reg(I(p)) für alle p; beide Seiten unabhängig berechnet"""
    decomp = canonical_decomposition(ideal)
    if decomp is None:
        raise PreconditionError("I ist nicht vom Schnitt-Typ")
    ok = True
    for prime, d in decomp:
        reg = regularity(localize(ideal, prime).ideal, force=force)
        if d > reg:
            log.error("d_p=%d > reg(I(p))=%d bei %s", d, reg, prime)
            ok = False
    return ok


# -----------------------------------------------------------------------------
# Orakel: kleinstes Schnitt-Typ-Ideal über I
# -----------------------------------------------------------------------------
def hull_exponent(ideal: MonomialIdeal, support: frozenset[int]) -> int:
    """größtes e mit I ⊆ p_F^e"""
    return min(g.partial_degree(support) for g in ideal.generators)


def intersection_hull(ideal: MonomialIdeal, cap: int | None = None) -> MonomialIdeal:
    """
    ⋂_F p_F^{e_F} mit e_F = min über Erzeuger des F-Grads (optional ≤ cap).
    Jede Darstellung I = ⋂ p^d hat d_F ≤ e_F, daher: I vom Schnitt-Typ ⟺ I = Hülle.
    """
    _require_proper_nonzero(ideal)
    n = ideal.ambient_dim
    out = unit_ideal(n)
    for f in subsets(n):
        e = hull_exponent(ideal, f)
        if cap is not None:
            e = min(e, cap)
        if e > 0:
            out = intersect_prime_power(out, f, e)
    return out


def is_intersection_type_bruteforce(ideal: MonomialIdeal, cap: int | None = None) -> bool:
    return intersection_hull(ideal, cap) == ideal

