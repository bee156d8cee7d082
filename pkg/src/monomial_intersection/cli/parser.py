# =============================================================================
# parser.py – Eingabe-Grammatik für Ideale, Monome und Primideale
# =============================================================================
"""
Grammatik
---------
    ideal    := "(" liste ")" | liste | "(0)" | "0"
    liste    := monom ("," monom)*
    monom    := faktor (["*"] faktor)*
    faktor   := name ["^" zahl] | "1"
    name     := buchstabe [ziffern]         x1, x12, y, t …

Ohne Ziffern steht jeder Buchstabe für sich (`xyz` = x*y*z). Indizierte
Namen (x1..xN) und Einzelbuchstaben dürfen nicht gemischt werden.
Die Variablenmenge wird aus der Eingabe geschlossen oder per --vars gesetzt:
`--vars 6` ergibt x1..x6, `--vars x,y,z,t,u,v` legt Namen und Reihenfolge fest.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from ..algebra.core import Monomial, MonomialIdeal, PrimeIdeal, default_names, ideal_from_rows, zero_ideal
from ..utils.errors import IdealParseError

log = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z]\d*)|(?P<num>\d+)|(?P<op>[(),*^]))")
_INDEXED = re.compile(r"^([A-Za-z])(\d+)$")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise IdealParseError(f"unerwartetes Zeichen {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# -----------------------------------------------------------------------------
# Variablen
# -----------------------------------------------------------------------------
def parse_vars(text: str) -> tuple[str, ...]:
    """`6` → x1..x6; `x,y,z` oder `xyz` → genau diese Namen"""
    text = text.strip()
    if text.isdigit():
        n = int(text)
        if n < 1:
            raise IdealParseError("--vars braucht mindestens eine Variable", 0)
        return default_names(n)
    if "," in text:
        names = tuple(s.strip() for s in text.split(","))
    else:
        names = tuple(t.text for t in tokenize(text) if t.kind == "name")
    for name in names:
        if not re.fullmatch(r"[A-Za-z]\d*", name):
            raise IdealParseError(f"ungültiger Variablenname {name!r}", text.find(name))
    if len(set(names)) != len(names):
        raise IdealParseError(f"Variablen doppelt angegeben: {text}", 0)
    return names


def _infer_names(seen: Sequence[Token]) -> tuple[str, ...]:
    indexed = [t for t in seen if _INDEXED.match(t.text)]
    plain = [t for t in seen if not _INDEXED.match(t.text)]
    if indexed and plain:
        raise IdealParseError(
            f"gemischte Variablen {indexed[0].text!r} und {plain[0].text!r}", plain[0].pos
        )
    if indexed:
        letters = {t.text[0] for t in indexed}
        if len(letters) > 1:
            raise IdealParseError(f"mehrere Präfixe {sorted(letters)}", indexed[0].pos)
        prefix = letters.pop()
        for t in indexed:
            if int(t.text[1:]) < 1:
                raise IdealParseError(f"Index von {t.text!r} muss ≥ 1 sein", t.pos)
        top = max(int(t.text[1:]) for t in indexed)
        return tuple(f"{prefix}{i}" for i in range(1, top + 1))
    # Einzelbuchstaben in Reihenfolge des ersten Auftretens
    return tuple(dict.fromkeys(t.text for t in plain))


# -----------------------------------------------------------------------------
# Parser
# -----------------------------------------------------------------------------
class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            found = tok.text or "Ende der Eingabe"
            raise IdealParseError(f"erwartet {want!r}, gefunden {found!r}", tok.pos)
        self.i += 1
        return tok

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        tok = self.peek()
        if tok.kind == kind and (text is None or tok.text == text):
            self.i += 1
            return tok
        return None

    def ideal(self) -> list[list[tuple[Token, int]]] | None:
        """None steht für das Nullideal"""
        wrapped = self.accept("op", "(") is not None
        if self.peek().kind == "num" and self.peek().text == "0":
            self.i += 1
            monomials = None
        else:
            monomials = [self.monomial()]
            while self.accept("op", ","):
                monomials.append(self.monomial())
        if wrapped:
            self.take("op", ")")
        self.take("end")
        return monomials

    def monomial(self) -> list[tuple[Token, int]]:
        factors = [self.factor()]
        while True:
            if self.accept("op", "*"):
                factors.append(self.factor())
            elif self.peek().kind in ("name", "num"):
                factors.append(self.factor())
            else:
                return [f for f in factors if f is not None]

    def factor(self) -> tuple[Token, int] | None:
        tok = self.peek()
        if tok.kind == "num":
            if tok.text != "1":
                raise IdealParseError(f"Koeffizient {tok.text!r} nicht erlaubt", tok.pos)
            self.i += 1
            return None
        name = self.take("name")
        exp = 1
        if self.accept("op", "^"):
            exp = int(self.take("num").text)
        return name, exp


def _parse(text: str, names: Sequence[str] | None) -> tuple[list[list[tuple[Token, int]]] | None, tuple[str, ...]]:
    if not text.strip():
        raise IdealParseError("leere Eingabe", 0)
    monomials = _Parser(text).ideal()
    seen = [tok for mono in (monomials or []) for tok, _ in mono]
    if names is None:
        names = _infer_names(seen)
        if not names:
            raise IdealParseError("Dimension nicht bestimmbar – bitte --vars angeben", 0)
    names = tuple(names)
    index = {name: i for i, name in enumerate(names)}
    for tok in seen:
        if tok.text not in index:
            raise IdealParseError(f"Variable {tok.text!r} fehlt in --vars {','.join(names)}", tok.pos)
    return monomials, names


def _rows(monomials: list[list[tuple[Token, int]]], names: tuple[str, ...]) -> Iterator[list[int]]:
    index = {name: i for i, name in enumerate(names)}
    for mono in monomials:
        row = [0] * len(names)
        for tok, exp in mono:
            row[index[tok.text]] += exp
        yield row


def parse_ideal_with_names(
    text: str, names: Sequence[str] | None = None
) -> tuple[MonomialIdeal, tuple[str, ...]]:
    monomials, names = _parse(text, names)
    if monomials is None:
        return zero_ideal(len(names)), names
    ideal = ideal_from_rows(list(_rows(monomials, names)), len(names))
    log.debug("eingelesen: %d Erzeuger in %d Variablen", len(ideal), len(names))
    return ideal, names


def parse_ideal(text: str, names: Sequence[str] | None = None) -> MonomialIdeal:
    return parse_ideal_with_names(text, names)[0]


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    ideal = parse_ideal(text, names)
    if len(ideal) != 1:
        raise IdealParseError(f"genau ein Monom erwartet: {text!r}", 0)
    return ideal.generators[0]


def parse_prime(text: str, names: Sequence[str]) -> PrimeIdeal:
    """`(x1,x3)`, `x,z` oder 1-basierte Indizes `1,3`"""
    names = tuple(names)
    stripped = text.strip().strip("()")
    if re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*", stripped):
        idx = [int(s) for s in stripped.split(",")]
        bad = [i for i in idx if not 1 <= i <= len(names)]
        if bad:
            raise IdealParseError(f"Index {bad[0]} außerhalb 1..{len(names)}", text.find(str(bad[0])))
        return PrimeIdeal(len(names), frozenset(i - 1 for i in idx))
    ideal = parse_ideal(text, names)
    if ideal.is_zero() or any(g.degree != 1 for g in ideal.generators):
        raise IdealParseError(f"{text!r} ist kein von Variablen erzeugtes Primideal", 0)
    return PrimeIdeal(len(names), ideal.support())
