# =============================================================================
# resolution.py – Betti-Zahlen, Regularität, lineare Auflösungen
# =============================================================================
"""
Zwei unabhängige Wege zu den multigraduierten Betti-Zahlen von I:

1. Oberer Koszul-Komplex  K^b(I) = {τ ⊆ supp(b) quadratfrei : x^{b-τ} ∈ I},
   β_{i,b}(I) = dim H̃_{i-1}(K^b(I)).  b läuft über den kgV-Verband.
2. Taylor-Komplex, Grad-b-Stück nach Tensorieren mit K: Teilmengen der
   Erzeuger mit kgV = b, Differential nur zwischen Teilmengen gleichen kgVs.
   Exponentiell in der Erzeugerzahl, daher nur als Orakel.
"""
from __future__ import annotations

import logging
import time
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
import pandas as pd
from tabulate import tabulate

from ..utils.errors import ConsistencyError, PreconditionError, SizeGuardError
from ..utils.parallel import ordered_map
from ..utils.settings import get_settings
from .core import MonomialIdeal, divisible_by_any
from .homology import chain_homology, reduced_homology, simplicial_boundary

log = logging.getLogger(__name__)

Multidegree = tuple[int, ...]


# -----------------------------------------------------------------------------
# Betti-Tabelle
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class BettiTable:
    ambient_dim: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    characteristic: int = 0

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @property
    def regularity(self) -> int:
        return max(j - i for (i, j) in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for (i, _) in self.entries)

    def degrees(self, i: int) -> dict[int, int]:
        return {j: b for (k, j), b in sorted(self.entries.items()) if k == i}

    def is_linear(self) -> bool:
        return len({j - i for (i, j) in self.entries}) == 1

    def to_frame(self) -> pd.DataFrame:
        """Zeilen j-i, Spalten i – das übliche Betti-Diagramm"""
        rows = [{"i": i, "row": j - i, "beta": b} for (i, j), b in self.entries.items()]
        df = pd.DataFrame(rows, columns=["i", "row", "beta"])
        table = df.pivot_table(index="row", columns="i", values="beta", aggfunc="sum")
        return table.fillna(0).astype(int).sort_index()

    def render(self) -> str:
        frame = self.to_frame()
        body = [[row, *[v if v else "." for v in frame.loc[row]]] for row in frame.index]
        return tabulate(body, headers=["j-i", *frame.columns], tablefmt="github")

    def as_json(self) -> dict:
        return {
            "field": "QQ" if self.characteristic == 0 else f"GF({self.characteristic})",
            "entries": [[i, j, b] for (i, j), b in sorted(self.entries.items())],
            "regularity": self.regularity,
            "projective_dimension": self.projective_dimension,
        }


def _require_nonzero_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero():
        raise PreconditionError("Betti-Zahlen des Nullideals sind nicht definiert")
    if ideal.is_unit():
        raise PreconditionError("Betti-Zahlen des Einsideals sind nicht definiert")


def _guard(ideal: MonomialIdeal, force: bool) -> None:
    settings = get_settings()
    if len(ideal) > settings.max_generators:
        if not (force or settings.force_large):
            raise SizeGuardError(
                f"{len(ideal)} Erzeuger > max_generators={settings.max_generators} "
                "(--force-large hebt die Grenze auf)"
            )
        log.warning("Größenwächter übersprungen: %d Erzeuger", len(ideal))


# -----------------------------------------------------------------------------
# kgV-Verband
# -----------------------------------------------------------------------------
def lcm_lattice(ideal: MonomialIdeal) -> list[Multidegree]:
    """alle kgVs nichtleerer Erzeuger-Teilmengen (Abschluss unter kgV mit Erzeugern)"""
    gens = ideal.matrix
    seen = {tuple(int(v) for v in row) for row in gens}
    frontier = np.unique(gens, axis=0)
    while frontier.shape[0]:
        joins = np.maximum(frontier[:, None, :], gens[None, :, :]).reshape(-1, ideal.ambient_dim)
        fresh = []
        for row in np.unique(joins, axis=0):
            key = tuple(int(v) for v in row)
            if key not in seen:
                seen.add(key)
                fresh.append(row)
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, ideal.ambient_dim)
    log.debug("kgV-Verband: %d Elemente", len(seen))
    return sorted(seen, key=lambda b: (sum(b), b))


# -----------------------------------------------------------------------------
# Weg 1: oberer Koszul-Komplex
# -----------------------------------------------------------------------------
def upper_koszul_faces(ideal: MonomialIdeal, b: Multidegree) -> list[tuple[int, ...]]:
    supp = [i for i, e in enumerate(b) if e]
    cands = [c for r in range(len(supp) + 1) for c in combinations(supp, r)]
    rows = np.tile(np.asarray(b, dtype=np.int64), (len(cands), 1))
    for r, tau in enumerate(cands):
        rows[r, list(tau)] -= 1
    inside = divisible_by_any(rows, ideal.matrix)
    return [tau for tau, ok in zip(cands, inside) if ok]


def _koszul_betti_at(ideal: MonomialIdeal, b: Multidegree, characteristic: int) -> dict[int, int]:
    faces = upper_koszul_faces(ideal, b)
    return {k + 1: h for k, h in reduced_homology(faces, characteristic).items()}


def multigraded_betti(ideal: MonomialIdeal, force: bool = False) -> dict[tuple[int, Multidegree], int]:
    """β_{i,b}(I) ≠ 0 über alle b des kgV-Verbands"""
    _require_nonzero_proper(ideal)
    _guard(ideal, force)
    settings = get_settings()
    if settings.characteristic:
        log.warning("Homologie über %s – Werte können von QQ abweichen", settings.field_name)
    lattice = lcm_lattice(ideal)
    per_b = ordered_map(
        lambda b: _koszul_betti_at(ideal, b, settings.characteristic),
        lattice,
        desc="Koszul",
    )
    out: dict[tuple[int, Multidegree], int] = {}
    for b, ranks in zip(lattice, per_b):
        for i, h in ranks.items():
            out[(i, b)] = h
    return out


def _collapse(multi: dict[tuple[int, Multidegree], int], n: int, characteristic: int) -> BettiTable:
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for (i, b), h in multi.items():
        entries[(i, sum(b))] += h
    return BettiTable(n, dict(sorted(entries.items())), characteristic)


def betti(ideal: MonomialIdeal, force: bool = False) -> BettiTable:
    t0 = time.perf_counter()
    table = _collapse(
        multigraded_betti(ideal, force), ideal.ambient_dim, get_settings().characteristic
    )
    generator_profile = defaultdict(int)
    for d in ideal.degrees():
        generator_profile[d] += 1
    if table.degrees(0) != dict(sorted(generator_profile.items())):
        raise ConsistencyError(
            "β_0 passt nicht zu den Erzeugergraden", table.degrees(0), dict(generator_profile)
        )
    log.debug("Betti-Tabelle in %.2fs: %s", time.perf_counter() - t0, table.entries)
    return table


# -----------------------------------------------------------------------------
# Weg 2: Taylor-Komplex (Orakel)
# -----------------------------------------------------------------------------
def _taylor_groups(ideal: MonomialIdeal) -> dict[Multidegree, dict[int, list[tuple[int, ...]]]]:
    settings = get_settings()
    g = len(ideal)
    if g > settings.taylor_max_generators:
        raise SizeGuardError(
            f"Taylor-Komplex mit {g} Erzeugern (> {settings.taylor_max_generators}) ist zu groß"
        )
    gens = [m.exponents for m in ideal.generators]
    groups: dict[Multidegree, dict[int, list[tuple[int, ...]]]] = defaultdict(lambda: defaultdict(list))
    for r in range(1, g + 1):
        for sigma in combinations(range(g), r):
            b = tuple(max(col) for col in zip(*(gens[s] for s in sigma)))
            groups[b][r - 1].append(sigma)
    return groups


def multigraded_betti_taylor(ideal: MonomialIdeal) -> dict[tuple[int, Multidegree], int]:
    _require_nonzero_proper(ideal)
    characteristic = get_settings().characteristic
    out = {}
    for b, chains in sorted(_taylor_groups(ideal).items()):
        for i, h in chain_homology(dict(chains), simplicial_boundary, characteristic).items():
            out[(i, b)] = h
    return out


def betti_taylor(ideal: MonomialIdeal) -> BettiTable:
    return _collapse(
        multigraded_betti_taylor(ideal), ideal.ambient_dim, get_settings().characteristic
    )


def taylor_euler_characteristic(ideal: MonomialIdeal, b: Multidegree) -> int:
    """Σ (-1)^{|σ|-1} über Erzeuger-Teilmengen σ mit kgV(σ) = b"""
    chains = _taylor_groups(ideal).get(tuple(b), {})
    return sum((-1) ** k * len(basis) for k, basis in chains.items())


def cross_check(ideal: MonomialIdeal) -> bool:
    """beide Wege vergleichen; Abweichung ist ein Konsistenzfehler"""
    koszul = multigraded_betti(ideal, force=True)
    taylor = multigraded_betti_taylor(ideal)
    if koszul != taylor:
        log.error("Koszul %s != Taylor %s", koszul, taylor)
        raise ConsistencyError("Betti-Wege widersprechen sich", koszul, taylor)
    return True


# -----------------------------------------------------------------------------
# Regularität
# -----------------------------------------------------------------------------
def regularity(ideal: MonomialIdeal, force: bool = False) -> int:
    return betti(ideal, force).regularity


def has_linear_resolution(ideal: MonomialIdeal, force: bool = False) -> bool:
    _require_nonzero_proper(ideal)
    if not ideal.is_equigenerated():
        return False
    return regularity(ideal, force) == ideal.degrees()[0]
