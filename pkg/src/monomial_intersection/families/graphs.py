# =============================================================================
# graphs.py – Kantenideale und zentrale 3-Kreise
# =============================================================================
"""
Ein 3-Kreis C heißt zentral, wenn jede Ecke von G Nachbar von C ist; die
Ecken von C selbst zählen als Nachbarn. Für G ohne isolierte Ecken ist I(G)²
genau dann vom Schnitt-Typ, wenn alle 3-Kreise zentral sind; sonst ist keine
Potenz I(G)^k (k ≥ 2) vom Schnitt-Typ.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable

import networkx as nx

from ..algebra.core import (
    Monomial,
    MonomialIdeal,
    PrimeIdeal,
    contains,
    ideal_from_rows,
    localize,
    power,
)
from ..algebra.decomp import intersection_type_report, is_intersection_type
from ..algebra.spectrum import associated_primes, socle
from ..utils.errors import ConsistencyError, IdealParseError, PreconditionError

log = logging.getLogger(__name__)

Triple = tuple[int, int, int]

_INLINE_EDGE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


# -----------------------------------------------------------------------------
# Graph
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Graph:
    """einfacher Graph auf den Ecken 0..n-1"""

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        clean = set()
        for a, b in self.edges:
            a, b = int(a), int(b)
            if a == b:
                raise PreconditionError(f"Schleife an Ecke {a + 1}")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise PreconditionError(f"Kante {{{a + 1},{b + 1}}} außerhalb 1..{self.vertex_count}")
            clean.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", tuple(sorted(clean)))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        """1-basierte Paare; n wird sonst aus der größten Ecke geschlossen"""
        pairs = [(int(a), int(b)) for a, b in pairs]
        if any(a < 1 or b < 1 for a, b in pairs):
            raise PreconditionError("Ecken sind 1-basiert")
        top = max((max(p) for p in pairs), default=0)
        return cls(n or top, tuple((a - 1, b - 1) for a, b in pairs))

    @classmethod
    def from_inline(cls, text: str, n: int | None = None) -> Graph:
        """--edges "1-2,2-3,1-3" """
        pairs = []
        pos = 0
        for chunk in text.split(","):
            m = _INLINE_EDGE.match(chunk)
            if not m:
                raise IdealParseError(f"Kante {chunk.strip()!r} ist nicht von der Form i-j", pos)
            pairs.append((int(m.group(1)), int(m.group(2))))
            pos += len(chunk) + 1
        return cls.from_pairs(pairs, n)

    @classmethod
    def from_edge_list(cls, lines: Iterable[str], n: int | None = None) -> Graph:
        """eine Kante `i j` pro Zeile, 1-basiert; # leitet Kommentare ein"""
        pairs = []
        for lineno, raw in enumerate(lines, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise IdealParseError(f"Zeile {lineno}: erwartet `i j`, gefunden {line!r}")
            pairs.append((int(parts[0]), int(parts[1])))
        return cls.from_pairs(pairs, n)

    @classmethod
    def from_file(cls, path: Path, n: int | None = None) -> Graph:
        with open(path, encoding="utf-8") as fh:
            return cls.from_edge_list(fh, n)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        """Ecken werden in sortierter Reihenfolge auf 0..n-1 abgebildet"""
        index = {v: i for i, v in enumerate(sorted(g.nodes))}
        return cls(len(index), tuple((index[a], index[b]) for a, b in g.edges))

    @cached_property
    def nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def neighbors(self, v: int) -> set[int]:
        return set(self.nx.neighbors(v))

    def has_isolated_vertices(self) -> bool:
        return any(True for _ in nx.isolates(self.nx))

    def is_connected(self) -> bool:
        return self.vertex_count > 0 and nx.is_connected(self.nx)

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.nx)


def cycle_graph(length: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(length))


# -----------------------------------------------------------------------------
# Kantenideal, 3-Kreise
# -----------------------------------------------------------------------------
def edge_ideal(g: Graph) -> MonomialIdeal:
    if not g.edges:
        raise PreconditionError("Graph ohne Kanten hat kein Kantenideal")
    rows = []
    for a, b in g.edges:
        row = [0] * g.vertex_count
        row[a] = row[b] = 1
        rows.append(row)
    return ideal_from_rows(rows, g.vertex_count)


def three_cycles(g: Graph) -> tuple[Triple, ...]:
    out = []
    for a, b in g.edges:
        for c in sorted(g.neighbors(a) & g.neighbors(b)):
            if c > b:
                out.append((a, b, c))
    return tuple(sorted(out))


def _require_triangle(g: Graph, cycle: Iterable[int]) -> Triple:
    c = tuple(sorted(cycle))
    if len(c) != 3 or len(set(c)) != 3 or c not in three_cycles(g):
        raise PreconditionError(f"{[v + 1 for v in c]} ist kein 3-Kreis")
    return c  # type: ignore[return-value]


def cycle_neighbourhood(g: Graph, cycle: Triple) -> set[int]:
    out = set(cycle)
    for v in cycle:
        out |= g.neighbors(v)
    return out


def is_central(g: Graph, cycle: Iterable[int]) -> bool:
    c = _require_triangle(g, cycle)
    return len(cycle_neighbourhood(g, c)) == g.vertex_count


def central_cycles(g: Graph) -> list[tuple[Triple, bool]]:
    return [(c, is_central(g, c)) for c in three_cycles(g)]


def _require_no_isolated(g: Graph) -> None:
    if g.has_isolated_vertices():
        raise PreconditionError("Graph hat isolierte Ecken")
    if not g.edges:
        raise PreconditionError("Graph ohne Kanten")


# -----------------------------------------------------------------------------
# Quadrat des Kantenideals
# -----------------------------------------------------------------------------
def square_is_intersection_type(g: Graph, cross_check: bool = True) -> bool:
    _require_no_isolated(g)
    by_graph = all(central for _, central in central_cycles(g))
    if cross_check:
        direct = is_intersection_type(power(edge_ideal(g), 2))
        if direct != by_graph:
            log.error("Graph-Kriterium %s, Sockel-Test %s für %s", by_graph, direct, g.edges)
            raise ConsistencyError("zentrale 3-Kreise vs. Sockel-Test von I²", by_graph, direct)
    return by_graph


def square_extra_primes(g: Graph) -> tuple[PrimeIdeal, ...]:
    """Ass(S/I²) ∖ (Ass(S/I) ∪ {m})"""
    _require_no_isolated(g)
    ideal = edge_ideal(g)
    base = set(associated_primes(ideal)) | {PrimeIdeal.maximal(g.vertex_count)}
    return tuple(p for p in associated_primes(power(ideal, 2)) if p not in base)


def ass_square_bound(g: Graph) -> bool:
    holds = not square_extra_primes(g)
    by_graph = square_is_intersection_type(g, cross_check=False)
    if holds != by_graph:
        raise ConsistencyError("Ass-Schranke vs. zentrale 3-Kreise", holds, by_graph)
    return holds


@dataclass(frozen=True)
class DepthZeroReport:
    depth_zero: bool
    witness: Monomial | None
    ideal: MonomialIdeal


def depth_zero_square(h: Graph, extra: int = 0) -> DepthZeroReport:
    """
    I = (y_1..y_k, I(H)) in den Variablen x_1..x_n, y_1..y_k.
    depth R/I² = 0 ⟺ H zusammenhängend mit zentralem 3-Kreis; dann ist
    das Produkt der Kreisvariablen ein Sockel-Element vom Grad 3.
    """
    n = h.vertex_count + extra
    rows = []
    for a, b in h.edges:
        row = [0] * n
        row[a] = row[b] = 1
        rows.append(row)
    for k in range(extra):
        row = [0] * n
        row[h.vertex_count + k] = 1
        rows.append(row)
    ideal = ideal_from_rows(rows, n)
    square = power(ideal, 2)

    centrals = [c for c, central in central_cycles(h) if central] if h.edges else []
    by_graph = h.is_connected() and bool(centrals)
    direct = not socle(square).is_zero
    if by_graph != direct:
        raise ConsistencyError("depth R/I² = 0: Graph-Kriterium vs. Sockel", by_graph, direct)
    if not by_graph:
        return DepthZeroReport(False, None, ideal)

    witness = Monomial.product_of(centrals[0], n)
    if contains(square, witness) or not all(
        contains(square, witness * Monomial.variable(i, n)) for i in range(n)
    ):
        raise ConsistencyError("Kreisprodukt ist kein Sockel-Element", witness, square)
    return DepthZeroReport(True, witness, ideal)


# -----------------------------------------------------------------------------
# Höhere Potenzen
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class HigherPowerRow:
    k: int
    is_intersection_type: bool
    prime: PrimeIdeal
    witness: Monomial

    @property
    def witness_degree(self) -> int:
        return self.witness.degree


def _independent_outside(g: Graph, cycle: Triple) -> frozenset[int]:
    """gierig, in aufsteigender Eckenreihenfolge"""
    chosen: set[int] = set()
    for v in sorted(set(range(g.vertex_count)) - cycle_neighbourhood(g, cycle)):
        if not g.neighbors(v) & chosen:
            chosen.add(v)
    return frozenset(chosen)


def higher_powers_not_intersection_type(g: Graph, k_max: int) -> list[HigherPowerRow]:
    """
    Für einen nicht-zentralen 3-Kreis C sei D eine maximale unabhängige Menge
    unter den Ecken, die keine Nachbarn von C sind, und p = (x_i : i ∉ D).
    Dann ist I(p) = I(H) + Q mit C zentral in H, und
    (x_a x_b)^{k-2} x_a x_b x_c ein Sockel-Element von S(p)/I(p)^k vom Grad 2k-1.
    """
    if square_is_intersection_type(g, cross_check=False):
        raise PreconditionError("I(G)² ist vom Schnitt-Typ, alle 3-Kreise sind zentral")
    n = g.vertex_count
    cycle = next(c for c, central in central_cycles(g) if not central)
    prime = PrimeIdeal(n, frozenset(range(n)) - _independent_outside(g, cycle))
    a, b, c = cycle
    ideal = edge_ideal(g)
    rows = []
    for k in range(2, k_max + 1):
        ik = power(ideal, k)
        report = intersection_type_report(ik)
        if report.is_intersection_type:
            raise ConsistencyError(f"I^{k} ist doch vom Schnitt-Typ", k, report)
        exps = [0] * n
        exps[a] = exps[b] = k - 1
        exps[c] = 1
        witness = Monomial(tuple(exps))
        local = localize(ik, prime)
        w_local = Monomial(tuple(witness.exponents[i] for i in local.index_map))
        in_socle = not contains(local.ideal, w_local) and all(
            contains(local.ideal, w_local * Monomial.variable(i, local.ideal.ambient_dim))
            for i in range(local.ideal.ambient_dim)
        )
        if not in_socle:
            raise ConsistencyError(f"kein Sockel-Zeuge für I^{k} bei {prime}", witness, local.ideal)
        rows.append(HigherPowerRow(k, False, prime, witness))
    return rows


# -----------------------------------------------------------------------------
# Daten für offene Fragen
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class PowerRow:
    s: int
    ass_count: int
    extra_primes: tuple[PrimeIdeal, ...]
    is_intersection_type: bool


def odd_cycle_report(length: int, s_max: int) -> list[PowerRow]:
    """Ass-Stabilisierung und Schnitt-Typ von I(C_{2k+1})^s – nur Daten"""
    if length < 3 or length % 2 == 0:
        raise PreconditionError(f"{length} ist keine ungerade Kreislänge ≥ 3")
    return power_report(cycle_graph(length), s_max)


def power_report(g: Graph, s_max: int) -> list[PowerRow]:
    ideal = edge_ideal(g)
    base = set(associated_primes(ideal))
    rows = []
    for s in range(1, s_max + 1):
        report = intersection_type_report(power(ideal, s))
        extra = tuple(p for p in report.associated_primes if p not in base)
        rows.append(PowerRow(s, len(report.associated_primes), extra, report.is_intersection_type))
        log.debug("s=%d: |Ass|=%d, Schnitt-Typ=%s", s, len(report.associated_primes),
                  report.is_intersection_type)
    return rows


def persistence_report(g: Graph, k_max: int) -> list[bool]:
    """[Ass(I^k) ⊆ Ass(I^{k+1}) für k = 1..k_max-1]"""
    ideal = edge_ideal(g)
    ass = [set(associated_primes(power(ideal, k))) for k in range(1, k_max + 1)]
    return [a <= b for a, b in zip(ass, ass[1:])]
