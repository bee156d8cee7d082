# subsets.py – Teilmengen-Aufzählung mit Größenwächter
from __future__ import annotations

from itertools import chain, combinations
from typing import Iterable, Iterator

from .errors import SizeGuardError
from .settings import get_settings


def check_dimension(n: int) -> None:
    limit = get_settings().max_n
    if n > limit:
        raise SizeGuardError(
            f"n={n} Variablen überschreitet max_n={limit} (2^n-Schleifen)"
        )


def powerset(iterable: Iterable[int]) -> Iterator[tuple[int, ...]]:
    "powerset([1,2,3]) → () (1,) (2,) (3,) (1,2) (1,3) (2,3) (1,2,3)"
    s = list(iterable)
    return chain.from_iterable(combinations(s, r) for r in range(len(s) + 1))


def subsets(n: int, *, nonempty: bool = True) -> Iterator[frozenset[int]]:
    """alle Teilmengen von {0..n-1}, nach Größe und dann lexikographisch"""
    check_dimension(n)
    for combo in powerset(range(n)):
        if nonempty and not combo:
            continue
        yield frozenset(combo)


def proper_subsets(f: frozenset[int]) -> Iterator[frozenset[int]]:
    items = sorted(f)
    for r in range(len(items)):
        for combo in combinations(items, r):
            yield frozenset(combo)


def bipartitions(f: frozenset[int]) -> Iterator[tuple[frozenset[int], frozenset[int]]]:
    """ungeordnete Zerlegungen F = G ⊔ H mit G, H nicht leer"""
    items = sorted(f)
    if len(items) < 2:
        return
    first, rest = items[0], items[1:]
    # G enthält immer das kleinste Element, so kommt jedes Paar nur einmal
    for r in range(len(rest)):
        for combo in combinations(rest, r):
            g = frozenset((first, *combo))
            yield g, f - g
