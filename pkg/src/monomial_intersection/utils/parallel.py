# parallel.py – geordnetes map() über einen Thread-Pool, optional mit Fortschritt
from __future__ import annotations

import concurrent.futures as cf
from typing import Callable, Iterable, TypeVar

from tqdm import tqdm

from .settings import get_settings

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], desc: str = "") -> list[R]:
    """
    Wendet fn auf alle items an. Die Ergebnisliste hat immer die Reihenfolge
    der Eingabe, egal wie viele Threads laufen.
    """
    items = list(items)
    settings = get_settings()
    bar = tqdm(total=len(items), desc=desc, unit="it", disable=not settings.progress)
    try:
        if settings.jobs <= 1 or len(items) < 2:
            out = []
            for item in items:
                out.append(fn(item))
                bar.update()
            return out
        with cf.ThreadPoolExecutor(settings.jobs) as ex:
            out = []
            for res in ex.map(fn, items):
                out.append(res)
                bar.update()
            return out
    finally:
        bar.close()
