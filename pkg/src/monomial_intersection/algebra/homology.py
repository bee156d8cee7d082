# homology.py – reduzierte Homologie kleiner Komplexe über QQ oder GF(p)
from __future__ import annotations

import logging
from itertools import combinations
from typing import Sequence

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

log = logging.getLogger(__name__)

Face = tuple[int, ...]


def coefficient_field(characteristic: int):
    return QQ if characteristic == 0 else GF(characteristic)


def matrix_rank(rows: Sequence[Sequence[int]], n_cols: int, characteristic: int = 0) -> int:
    """exakter Rang einer ganzzahligen Matrix über QQ bzw. GF(p)"""
    if not rows or n_cols == 0:
        return 0
    dom = coefficient_field(characteristic)
    mat = DomainMatrix(
        [[dom.convert(v) for v in row] for row in rows], (len(rows), n_cols), dom
    )
    return int(mat.rank())


def _graded(faces: Sequence[Face]) -> dict[int, list[Face]]:
    by_dim: dict[int, list[Face]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for k in by_dim:
        by_dim[k].sort()
    return by_dim


def simplicial_boundary(upper: Sequence[Face], lower: Sequence[Face]) -> list[list[int]]:
    """∂: C_k → C_{k-1} als Zeilen = lower, Spalten = upper; fehlende Seiten fallen weg"""
    index = {f: r for r, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for c, face in enumerate(upper):
        for pos in range(len(face)):
            side = face[:pos] + face[pos + 1:]
            r = index.get(side)
            if r is not None:
                rows[r][c] = -1 if pos % 2 else 1
    return rows


def reduced_homology(faces: Sequence[Face], characteristic: int = 0) -> dict[int, int]:
    """
    dim H̃_k für einen Komplex, gegeben durch seine Seiten (inkl. leerer Seite).
    Der Komplex {∅} hat H̃_{-1} = 1, der leere Komplex hat keine Homologie.
    """
    by_dim = _graded(faces)
    if not by_dim:
        return {}
    top = max(by_dim)
    ranks: dict[int, int] = {}
    for k in range(0, top + 1):
        upper, lower = by_dim.get(k, []), by_dim.get(k - 1, [])
        ranks[k] = matrix_rank(simplicial_boundary(upper, lower), len(upper), characteristic)
    out = {}
    for k in range(-1, top + 1):
        dim_k = len(by_dim.get(k, []))
        h = dim_k - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def chain_homology(
    chains: dict[int, list[tuple]], boundary, characteristic: int = 0
) -> dict[int, int]:
    """
    Homologie eines allgemeinen endlichen Kettenkomplexes.
    chains[k] sind Basiselemente, boundary(upper, lower) liefert die Matrix ∂_k.
    """
    if not chains:
        return {}
    ranks = {}
    for k in chains:
        lower = chains.get(k - 1, [])
        ranks[k] = matrix_rank(boundary(chains[k], lower), len(chains[k]), characteristic)
    out = {}
    for k, basis in chains.items():
        h = len(basis) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def full_simplex(vertices: Sequence[int]) -> list[Face]:
    verts = sorted(vertices)
    return [c for r in range(len(verts) + 1) for c in combinations(verts, r)]
