# =============================================================================
# fourier_motzkin.py – exakte Fourier-Motzkin-Elimination über Q
# =============================================================================
"""
System aus Ungleichungen  a·x + b ≥ 0  (bzw. > 0 bei strict).  Jede Zeile
merkt sich, aus welchen Ausgangszeilen sie mit welchen Multiplikatoren
entstanden ist. Ist das System unlösbar, liefert das direkt ein
Farkas-Zertifikat; sonst wird ein Punkt durch Rückeinsetzen bestimmt.

Pro eliminierter Variable: Zeilen in z (Koeffizient 0), p (> 0) und n (< 0)
aufteilen, alle Paare aus p × n kombinieren.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..utils.errors import ConsistencyError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Inequality:
    coeffs: tuple[Fraction, ...]
    const: Fraction
    strict: bool = False
    history: tuple[tuple[int, Fraction], ...] = field(default=())

    @classmethod
    def make(cls, coeffs: Sequence, const, strict: bool = False, origin: int | None = None) -> Inequality:
        hist = ((origin, Fraction(1)),) if origin is not None else ()
        return cls(tuple(Fraction(c) for c in coeffs), Fraction(const), strict, hist)

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return sum((a * x for a, x in zip(self.coeffs, point)), Fraction(0)) + self.const

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        v = self.evaluate(point)
        return v > 0 if self.strict else v >= 0

    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def is_contradiction(self) -> bool:
        return self.is_constant() and (self.const < 0 or (self.strict and self.const <= 0))

    def key(self) -> tuple:
        return (self.coeffs, self.const, self.strict)


def _scaled_history(
    left: tuple[tuple[int, Fraction], ...], lf: Fraction,
    right: tuple[tuple[int, Fraction], ...], rf: Fraction,
) -> tuple[tuple[int, Fraction], ...]:
    acc: dict[int, Fraction] = {}
    for idx, c in left:
        acc[idx] = acc.get(idx, Fraction(0)) + lf * c
    for idx, c in right:
        acc[idx] = acc.get(idx, Fraction(0)) + rf * c
    return tuple(sorted((i, c) for i, c in acc.items() if c))


def _combine(pos: Inequality, neg: Inequality, var: int) -> Inequality:
    """eliminiert var: (-b)·pos + a·neg, danach normiert"""
    a, b = pos.coeffs[var], -neg.coeffs[var]
    coeffs = [b * p + a * q for p, q in zip(pos.coeffs, neg.coeffs)]
    const = b * pos.const + a * neg.const
    hist = _scaled_history(pos.history, b, neg.history, a)
    scale = max((abs(c) for c in coeffs), default=Fraction(0)) or abs(const) or Fraction(1)
    return Inequality(
        tuple(c / scale for c in coeffs),
        const / scale,
        pos.strict or neg.strict,
        tuple((i, c / scale) for i, c in hist),
    )


@dataclass(frozen=True)
class FMResult:
    feasible: bool
    point: tuple[Fraction, ...] | None = None
    farkas: dict[int, Fraction] | None = None


class FourierMotzkin:
    """
    Löst ein System über n Variablen. Nur Zeilen ohne strikten Anteil werden
    nach der Chernikov-Regel verworfen.
    """

    def __init__(self, n_vars: int, rows: Sequence[Inequality]):
        self.n_vars = n_vars
        self.rows = list(rows)
        self.stages: list[list[Inequality]] = []

    def _eliminate(self, rows: list[Inequality], var: int, step: int) -> list[Inequality]:
        zero = [r for r in rows if r.coeffs[var] == 0]
        pos = [r for r in rows if r.coeffs[var] > 0]
        neg = [r for r in rows if r.coeffs[var] < 0]
        out, seen = [], set()
        for r in zero:
            if r.key() not in seen:
                seen.add(r.key())
                out.append(r)
        for p in pos:
            for q in neg:
                new = _combine(p, q, var)
                if not new.strict and len(new.history) > step + 1:
                    continue
                if new.key() in seen:
                    continue
                seen.add(new.key())
                out.append(new)
        log.debug("FM x%d: z=%d p=%d n=%d → %d Zeilen", var + 1, len(zero), len(pos), len(neg), len(out))
        return out

    def solve(self) -> FMResult:
        rows = list(self.rows)
        self.stages = []
        for var in range(self.n_vars):
            bad = next((r for r in rows if r.is_contradiction()), None)
            if bad is not None:
                return FMResult(False, farkas=dict(bad.history))
            rows = [r for r in rows if not r.is_constant()]
            self.stages.append(rows)
            rows = self._eliminate(rows, var, var + 1)
        bad = next((r for r in rows if r.is_contradiction()), None)
        if bad is not None:
            return FMResult(False, farkas=dict(bad.history))
        point = self._back_substitute()
        for r in self.rows:
            if not r.satisfied_by(point):
                raise ConsistencyError("FM-Rückeinsetzen verletzt eine Zeile", r, point)
        return FMResult(True, point=point)

    def _back_substitute(self) -> tuple[Fraction, ...]:
        values = [Fraction(0)] * self.n_vars
        for var in reversed(range(self.n_vars)):
            lo, lo_strict, hi, hi_strict = None, False, None, False
            for r in self.stages[var]:
                a = r.coeffs[var]
                if a == 0:
                    continue
                rest = r.const + sum(
                    (c * values[j] for j, c in enumerate(r.coeffs) if j > var), Fraction(0)
                )
                bound = -rest / a
                if a > 0:
                    if lo is None or bound > lo or (bound == lo and r.strict):
                        lo, lo_strict = bound, r.strict
                else:
                    if hi is None or bound < hi or (bound == hi and r.strict):
                        hi, hi_strict = bound, r.strict
            if lo is not None and hi is not None:
                if lo < hi and (lo_strict or hi_strict):
                    values[var] = (lo + hi) / 2
                else:
                    values[var] = lo
            elif lo is not None:
                values[var] = lo + 1 if lo_strict else lo
            elif hi is not None:
                values[var] = hi - 1 if hi_strict else hi
        return tuple(values)
