# =============================================================================
# report.py – gemeinsames Datenmodell für Konsolen- und JSON-Ausgabe
# =============================================================================
"""
Jeder Befehl baut zuerst ein JSON-fähiges dict; die Konsolen-Ausgabe wird
daraus abgeleitet. JSON wird mit sortierten Schlüsseln geschrieben, Monome
und Primideale stehen in kanonischer Ordnung, damit die Ausgabe
byte-stabil ist (auch bei --jobs > 1).
"""
from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from typing import Sequence

from tabulate import tabulate

from ..algebra.core import (
    Monomial,
    MonomialIdeal,
    PrimeIdeal,
    format_ideal,
    format_monomial,
    format_prime,
    localize,
)
from ..algebra.decomp import (
    PrimePowerDecomposition,
    canonical_decomposition,
    intersection_type_report,
    is_strong_intersection_type,
)
from ..algebra.resolution import regularity

log = logging.getLogger(__name__)

RULE = "=" * 78


def dump_json(payload: object) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def print_table(rows: Sequence[Sequence], headers: Sequence[str], title: str | None = None) -> None:
    if title:
        print("\n" + RULE)
        print(title)
        print(RULE)
    if not rows:
        print("(keine Daten)")
        return
    print(tabulate(rows, headers=headers, tablefmt="github"))


# -----------------------------------------------------------------------------
# JSON-Bausteine
# -----------------------------------------------------------------------------
def prime_json(p: PrimeIdeal, names: Sequence[str]) -> dict:
    return {"support": [i + 1 for i in p.sorted_support], "text": format_prime(p, names)}


def monomial_json(m: Monomial, names: Sequence[str]) -> dict:
    return {"exponents": list(m.exponents), "text": format_monomial(m, names)}


def ideal_json(ideal: MonomialIdeal, names: Sequence[str]) -> dict:
    return {
        "ambient_dim": ideal.ambient_dim,
        "generators": [list(g.exponents) for g in ideal.generators],
        "text": format_ideal(ideal, names),
    }


def decomposition_json(decomp: PrimePowerDecomposition, names: Sequence[str]) -> dict:
    return {
        "components": [
            {"prime": prime_json(p, names), "exponent": d} for p, d in decomp
        ],
        "irredundant": decomp.irredundant,
        "text": decomp.format(names),
    }


# -----------------------------------------------------------------------------
# AnalysisReport
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Diagnostic:
    prime: PrimeIdeal
    min_degree: int
    socle_degree: int
    witness: Monomial


@dataclass(frozen=True)
class AnalysisReport:
    ideal: MonomialIdeal
    names: tuple[str, ...]
    is_intersection_type: bool
    decomposition: PrimePowerDecomposition | None
    is_strong: bool
    associated_primes: tuple[PrimeIdeal, ...]
    diagnostics: tuple[Diagnostic, ...]
    local_regularity: tuple[tuple[PrimeIdeal, int], ...] | None = None
    elapsed: float = field(default=0.0, compare=False)

    def as_json(self) -> dict:
        n = self.names
        payload = {
            "ideal": ideal_json(self.ideal, n),
            "variables": list(n),
            "is_intersection_type": self.is_intersection_type,
            "is_strong_intersection_type": self.is_strong,
            "associated_primes": [prime_json(p, n) for p in self.associated_primes],
            "decomposition": (
                decomposition_json(self.decomposition, n) if self.decomposition is not None else None
            ),
            "diagnostics": [
                {
                    "prime": prime_json(d.prime, n),
                    "min_degree": d.min_degree,
                    "socle_degree": d.socle_degree,
                    "witness": monomial_json(d.witness, n),
                }
                for d in self.diagnostics
            ],
        }
        if self.local_regularity is not None:
            payload["local_regularity"] = [
                {"prime": prime_json(p, n), "regularity": r} for p, r in self.local_regularity
            ]
        return payload

    def render(self) -> None:
        n = self.names
        print(RULE)
        print(f"I = {format_ideal(self.ideal, n)}")
        print(RULE)
        print(f"Schnitt-Typ        : {'ja' if self.is_intersection_type else 'nein'}")
        print(f"starker Schnitt-Typ: {'ja' if self.is_strong else 'nein'}")
        if self.decomposition is not None:
            print(f"Zerlegung          : {self.decomposition.format(n)}")
        reg = dict(self.local_regularity or ())
        rows = [
            [format_prime(p, n), p.height]
            + ([reg[p]] if self.local_regularity is not None else [])
            + ([self.decomposition.exponent(p)] if self.decomposition is not None else [])
            for p in self.associated_primes
        ]
        headers = ["p ∈ Ass", "Höhe"]
        if self.local_regularity is not None:
            headers.append("reg I(p)")
        if self.decomposition is not None:
            headers.append("d_p")
        print_table(rows, headers, f"Assoziierte Primideale ({len(self.associated_primes)})")
        if self.diagnostics:
            print_table(
                [
                    [format_prime(d.prime, n), d.min_degree, d.socle_degree, format_monomial(d.witness, n)]
                    for d in self.diagnostics
                ],
                ["p", "min I(p)", "Sockelgrad", "Zeuge"],
                "Verletzte Bedingungen",
            )


def analyze(
    ideal: MonomialIdeal,
    names: Sequence[str],
    with_regularity: bool = False,
    force: bool = False,
) -> AnalysisReport:
    t0 = time.time()
    report = intersection_type_report(ideal)
    decomp = canonical_decomposition(ideal, report)
    strong = is_strong_intersection_type(ideal, force=force) if decomp is not None else False
    local_reg = None
    if with_regularity:
        local_reg = tuple(
            (p, regularity(localize(ideal, p).ideal, force=force)) for p in report.associated_primes
        )
    diagnostics = tuple(
        Diagnostic(d.prime, d.min_degree, d.socle_degree, d.witness) for d in report.failing
    )
    dt = time.time() - t0
    log.info("Analyse fertig: %d Primideale | %.2f s", len(report.associated_primes), dt)
    return AnalysisReport(
        ideal, tuple(names), report.is_intersection_type, decomp, strong,
        report.associated_primes, diagnostics, local_reg, dt,
    )
