# =============================================================================
# core.py – Monome, monomiale Ideale, monomiale Primideale
# =============================================================================
"""
Exakte Arithmetik monomialer Ideale in S = K[x_1..x_n].

Ein Ideal wird ausschließlich durch seine minimalen Erzeuger dargestellt,
in fester Ordnung (Grad aufsteigend, dann lexikographisch absteigend auf dem
Exponentenvektor). Gleiche Ideale sind damit strukturell gleich.

Variablen werden intern 0-basiert indiziert, Ausgaben sind 1-basiert
(x1..xn) oder benutzen die vom Aufrufer übergebenen Namen.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

import numpy as np

from ..utils.errors import (
    ConsistencyError,
    DimensionMismatchError,
    PreconditionError,
)

log = logging.getLogger(__name__)

# Obergrenze für Zwischen-Arrays beim Teilbarkeitstest (Anzahl bool-Zellen)
_CHUNK_CELLS = 4_000_000


# -----------------------------------------------------------------------------
# Monome
# -----------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise PreconditionError(f"negative Exponenten in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int) -> Monomial:
        exps = [0] * n
        exps[i] = 1
        return cls(tuple(exps))

    @classmethod
    def product_of(cls, indices: Iterable[int], n: int) -> Monomial:
        """quadratfreies bzw. beliebiges Produkt x_i für i in indices"""
        exps = [0] * n
        for i in indices:
            exps[i] += 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> Monomial:
        return Monomial(tuple(a * k for a in self.exponents))

    def quotient(self, other: Monomial) -> Monomial:
        """self / gcd(self, other) – Erzeuger von (self) : other"""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def partial_degree(self, support: Iterable[int]) -> int:
        return sum(self.exponents[i] for i in support)

    def in_prime_power(self, support: Iterable[int], a: int) -> bool:
        """x^c ∈ p_F^a  ⟺  Σ_{i∈F} c_i ≥ a"""
        return self.partial_degree(support) >= a

    def sort_key(self) -> tuple:
        return (self.degree, tuple(-e for e in self.exponents))

    def __lt__(self, other: Monomial) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_monomial(self)


# -----------------------------------------------------------------------------
# Formatierung
# -----------------------------------------------------------------------------
def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def format_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or default_names(m.n)
    parts = []
    for name, e in zip(names, m.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(ideal: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    if ideal.is_zero():
        return "(0)"
    return "(" + ", ".join(format_monomial(g, names) for g in ideal.generators) + ")"


def format_prime(p: PrimeIdeal, names: Sequence[str] | None = None) -> str:
    names = names or default_names(p.ambient_dim)
    return "(" + ",".join(names[i] for i in p.sorted_support) + ")"


# -----------------------------------------------------------------------------
# Numpy-Helfer (Teilbarkeit, Minimalisierung, kanonische Ordnung)
# -----------------------------------------------------------------------------
def _as_rows(rows: object, n: int) -> np.ndarray:
    arr = np.asarray(rows, dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    return arr.reshape(-1, n)


def divisible_by_any(candidates: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """bool-Vektor: Kandidat i wird von mindestens einem Erzeuger geteilt"""
    out = np.zeros(candidates.shape[0], dtype=bool)
    if candidates.shape[0] == 0 or gens.shape[0] == 0:
        return out
    n = max(candidates.shape[1], 1)
    step = max(1, _CHUNK_CELLS // (gens.shape[0] * n))
    for start in range(0, candidates.shape[0], step):
        block = candidates[start:start + step]
        out[start:start + step] = (
            (block[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
        )
    return out


def _canonical_rows(rows: np.ndarray) -> tuple[tuple[int, ...], ...]:
    tuples = {tuple(int(v) for v in row) for row in rows}
    return tuple(sorted(tuples, key=lambda e: (sum(e), tuple(-x for x in e))))


def _minimal_rows(rows: np.ndarray, n: int) -> tuple[tuple[int, ...], ...]:
    if rows.shape[0] == 0:
        return ()
    rows = np.unique(rows, axis=0)
    degrees = rows.sum(axis=1)
    kept = np.zeros((0, n), dtype=np.int64)
    # gleicher Grad + Teilbarkeit ⇒ Gleichheit, also genügt der Test gegen
    # die bereits behaltenen Erzeuger kleineren Grades
    for d in np.unique(degrees):
        block = rows[degrees == d]
        if kept.shape[0]:
            block = block[~divisible_by_any(block, kept)]
        if block.shape[0]:
            kept = np.vstack([kept, block])
    return _canonical_rows(kept)


# -----------------------------------------------------------------------------
# Monomiale Ideale
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class MonomialIdeal:
    ambient_dim: int
    generators: tuple[Monomial, ...] = field(default=())

    @classmethod
    def _canonical(cls, n: int, rows: Iterable[tuple[int, ...]]) -> MonomialIdeal:
        return cls(n, tuple(Monomial(r) for r in rows))

    @cached_property
    def matrix(self) -> np.ndarray:
        """Erzeuger als (g, n)-Integer-Matrix"""
        return _as_rows([g.exponents for g in self.generators], self.ambient_dim)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def degrees(self) -> list[int]:
        return [g.degree for g in self.generators]

    def is_equigenerated(self) -> bool:
        return len(set(self.degrees())) <= 1

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g.exponents)

    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for g in self.generators:
            out |= g.support
        return frozenset(out)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __str__(self) -> str:
        return format_ideal(self)


def _check_dim(n: int, *others: int) -> None:
    for other in others:
        if other != n:
            raise DimensionMismatchError(n, other)


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (Monomial.one(n),))


def ideal_from_rows(rows: object, n: int) -> MonomialIdeal:
    if n < 1:
        raise PreconditionError("ambiente Dimension muss positiv sein")
    arr = _as_rows(rows, n)
    if (arr < 0).any():
        raise PreconditionError("negative Exponenten")
    return MonomialIdeal._canonical(n, _minimal_rows(arr, n))


def minimal_generators(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """teilbarkeits-minimale Teilmenge in kanonischer Ordnung"""
    gens = list(gens)
    for g in gens:
        _check_dim(n, g.n)
    return ideal_from_rows([g.exponents for g in gens], n)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    _check_dim(ideal.ambient_dim, m.n)
    return any(g.divides(m) for g in ideal.generators)


def is_subideal(small: MonomialIdeal, big: MonomialIdeal) -> bool:
    _check_dim(small.ambient_dim, big.ambient_dim)
    if small.is_zero():
        return True
    return bool(divisible_by_any(small.matrix, big.matrix).all())


# -----------------------------------------------------------------------------
# Ideal-Operationen
# -----------------------------------------------------------------------------
def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """erzeugt von kgV aller Erzeuger-Paare, minimalisiert"""
    n = a.ambient_dim
    _check_dim(n, b.ambient_dim)
    if a.is_zero() or b.is_zero():
        return zero_ideal(n)
    if is_subideal(a, b):
        return a
    if is_subideal(b, a):
        return b
    rows = np.maximum(a.matrix[:, None, :], b.matrix[None, :, :]).reshape(-1, n)
    return MonomialIdeal._canonical(n, _minimal_rows(rows, n))


def intersect_all(ideals: Sequence[MonomialIdeal], n: int) -> MonomialIdeal:
    return reduce(intersect, ideals, unit_ideal(n))


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    n = a.ambient_dim
    _check_dim(n, b.ambient_dim)
    if a.is_zero() or b.is_zero():
        return zero_ideal(n)
    rows = (a.matrix[:, None, :] + b.matrix[None, :, :]).reshape(-1, n)
    return MonomialIdeal._canonical(n, _minimal_rows(rows, n))


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k; Konvention: k = 0 liefert das Einsideal"""
    if k < 0:
        raise PreconditionError(f"negativer Exponent {k}")
    out = unit_ideal(ideal.ambient_dim)
    for _ in range(k):
        out = multiply(out, ideal)
    return out


def colon_monomial(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    n = ideal.ambient_dim
    _check_dim(n, m.n)
    if ideal.is_zero():
        return ideal
    rows = np.maximum(ideal.matrix - np.asarray(m.exponents, dtype=np.int64), 0)
    return MonomialIdeal._canonical(n, _minimal_rows(rows, n))


def colon(ideal: MonomialIdeal, divisor: MonomialIdeal) -> MonomialIdeal:
    """I : J = ⋂_{g ∈ G(J)} (I : g)"""
    _check_dim(ideal.ambient_dim, divisor.ambient_dim)
    if divisor.is_zero():
        raise PreconditionError("Quotient nach dem Nullideal ist nicht definiert")
    if ideal.is_zero():
        return ideal
    parts = [colon_monomial(ideal, g) for g in divisor.generators]
    # kleinste Teilideale zuerst – hält die kgV-Listen kurz
    parts.sort(key=len)
    return reduce(intersect, parts)


def saturate(ideal: MonomialIdeal, prime: PrimeIdeal) -> MonomialIdeal:
    """I : p^∞ durch wiederholtes Teilen durch p bis zur Stabilität"""
    _check_dim(ideal.ambient_dim, prime.ambient_dim)
    if ideal.is_zero() or ideal.is_unit():
        return ideal
    p_ideal = prime.ideal
    # I : p^k hängt ab k = Σ_{i∈F} max_g g_i nicht mehr von k ab
    cap = 1 + int(ideal.matrix[:, list(prime.sorted_support)].max(axis=0, initial=0).sum())
    current = ideal
    for _ in range(cap + 1):
        nxt = colon(current, p_ideal)
        if nxt == current:
            return current
        current = nxt
    raise ConsistencyError(
        f"Saturierung nach {cap} Schritten nicht stabil", ideal, current
    )


def monomials_of_degree(n: int, d: int) -> np.ndarray:
    return _monomials_of_degree(n, d).copy()


@lru_cache(maxsize=256)
def _monomials_of_degree(n: int, d: int) -> np.ndarray:
    if d < 0:
        return np.zeros((0, n), dtype=np.int64)
    rows = []
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        rows.append(exps)
    return _as_rows(rows, n)


def intersect_prime_power(ideal: MonomialIdeal, support: Iterable[int], a: int) -> MonomialIdeal:
    """I ∩ p_F^a ohne p_F^a auszumultiplizieren"""
    n = ideal.ambient_dim
    cols = sorted(set(support))
    if a <= 0 or ideal.is_zero():
        return ideal
    rows = ideal.matrix
    deficit = a - rows[:, cols].sum(axis=1)
    blocks = [rows[deficit <= 0]]
    for d in np.unique(deficit[deficit > 0]):
        local = _monomials_of_degree(len(cols), int(d))
        fill = np.zeros((local.shape[0], n), dtype=np.int64)
        fill[:, cols] = local
        base = rows[deficit == d]
        blocks.append((base[:, None, :] + fill[None, :, :]).reshape(-1, n))
    return MonomialIdeal._canonical(n, _minimal_rows(np.vstack(blocks), n))


def truncate(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """I_{≥k} = I ∩ m^k"""
    if k < 0:
        raise PreconditionError(f"negativer Grad {k}")
    return intersect_prime_power(ideal, range(ideal.ambient_dim), k)


def min_degree(ideal: MonomialIdeal) -> int:
    if ideal.is_zero():
        raise PreconditionError("min_degree des Nullideals ist nicht definiert")
    return min(ideal.degrees())


def max_degree(ideal: MonomialIdeal) -> int:
    if ideal.is_zero():
        raise PreconditionError("max_degree des Nullideals ist nicht definiert")
    return max(ideal.degrees())


def componentwise_max(ideal: MonomialIdeal) -> tuple[int, ...]:
    if ideal.is_zero():
        return (0,) * ideal.ambient_dim
    return tuple(int(v) for v in ideal.matrix.max(axis=0))


def permute(ideal: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """Umbenennung x_i ↦ x_{perm[i]}"""
    n = ideal.ambient_dim
    if sorted(perm) != list(range(n)):
        raise PreconditionError(f"{list(perm)} ist keine Permutation von 0..{n - 1}")
    rows = np.zeros_like(ideal.matrix)
    rows[:, list(perm)] = ideal.matrix
    return ideal_from_rows(rows, n)


# -----------------------------------------------------------------------------
# Monomiale Primideale
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class PrimeIdeal:
    ambient_dim: int
    support: frozenset[int]

    def __post_init__(self) -> None:
        supp = frozenset(int(i) for i in self.support)
        if not supp:
            raise PreconditionError("Primideal braucht mindestens eine Variable")
        if min(supp) < 0 or max(supp) >= self.ambient_dim:
            raise PreconditionError(
                f"Träger {sorted(supp)} liegt nicht in 0..{self.ambient_dim - 1}"
            )
        object.__setattr__(self, "support", supp)

    @classmethod
    def maximal(cls, n: int) -> PrimeIdeal:
        return cls(n, frozenset(range(n)))

    @property
    def height(self) -> int:
        return len(self.support)

    @property
    def sorted_support(self) -> tuple[int, ...]:
        return tuple(sorted(self.support))

    def is_maximal(self) -> bool:
        return self.height == self.ambient_dim

    @cached_property
    def ideal(self) -> MonomialIdeal:
        return ideal_from_rows(
            [Monomial.variable(i, self.ambient_dim).exponents for i in self.sorted_support],
            self.ambient_dim,
        )

    def power(self, a: int) -> MonomialIdeal:
        """p^a ausmultipliziert – nur als Test-Orakel gedacht"""
        return intersect_prime_power(unit_ideal(self.ambient_dim), self.support, a)

    def contains_ideal(self, ideal: MonomialIdeal) -> bool:
        """I ⊆ p ⟺ jeder Erzeuger trifft den Träger"""
        return all(g.support & self.support for g in ideal.generators)

    def sort_key(self) -> tuple:
        return (self.height, self.sorted_support)

    def __lt__(self, other: PrimeIdeal) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_prime(self)


def prime_power_intersection(
    components: Iterable[tuple[PrimeIdeal, int]], n: int
) -> MonomialIdeal:
    """⋂ p^d – kleine Komponenten zuerst, Schnitt ohne Ausmultiplizieren"""
    comps = sorted(components, key=lambda c: (c[0].height, c[1], c[0].sorted_support))
    out = unit_ideal(n)
    for prime, a in comps:
        _check_dim(n, prime.ambient_dim)
        out = intersect_prime_power(out, prime.support, a)
    return out


# -----------------------------------------------------------------------------
# Monomiale Lokalisierung
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Localization:
    """I(p) ⊂ S(p) mit Indexabbildung lokal → ambient"""

    ideal: MonomialIdeal
    index_map: tuple[int, ...]
    prime: PrimeIdeal

    def embed(self) -> MonomialIdeal:
        return embed(self.ideal, self.index_map, self.prime.ambient_dim)

    def local_names(self, names: Sequence[str] | None = None) -> tuple[str, ...]:
        names = names or default_names(self.prime.ambient_dim)
        return tuple(names[i] for i in self.index_map)


def localize(ideal: MonomialIdeal, prime: PrimeIdeal) -> Localization:
    """φ(x_i) = x_i für x_i ∈ p, sonst 1; Ergebnis lebt in |F| Variablen"""
    _check_dim(ideal.ambient_dim, prime.ambient_dim)
    cols = list(prime.sorted_support)
    local_n = len(cols)
    if ideal.is_zero():
        local = zero_ideal(local_n)
    else:
        local = ideal_from_rows(ideal.matrix[:, cols], local_n)
    return Localization(local, tuple(cols), prime)


def embed(local: MonomialIdeal, index_map: Sequence[int], n: int) -> MonomialIdeal:
    if len(index_map) != local.ambient_dim:
        raise DimensionMismatchError(local.ambient_dim, len(index_map))
    rows = np.zeros((len(local), n), dtype=np.int64)
    if len(local):
        rows[:, list(index_map)] = local.matrix
    return ideal_from_rows(rows, n)


def maximal_ideal(n: int) -> MonomialIdeal:
    return PrimeIdeal.maximal(n).ideal
