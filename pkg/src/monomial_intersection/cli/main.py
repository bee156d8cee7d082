#!/usr/bin/env python3
# =============================================================================
# main.py – Kommandozeile für monomiale Ideale vom Schnitt-Typ
# =============================================================================
"""
Beispiele
---------
    monomial_intersection analyze "x1^3*x2, x1^3*x3, x1^2*x2^2, x1^2*x2*x3, x1*x2^2*x3"
    monomial_intersection --json decompose "(x*y, x*z, y*z)"
    monomial_intersection graph square-type --edges "1-2,1-3,2-3,3-4,4-5"
    monomial_intersection polymatroid veronese -d 4 --caps 3,2,1

Exit-Codes: 0 ok, 2 Eingabe, 3 Vorbedingung, 4 Größenwächter,
5 interne Inkonsistenz (beide Seiten stehen im Log).
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence

import networkx as nx

from ..algebra.core import (
    MonomialIdeal,
    PrimeIdeal,
    format_ideal,
    format_monomial,
    format_prime,
    is_subideal,
    localize,
    power,
)
from ..algebra.decomp import canonical_decomposition, intersection_type_report
from ..algebra.resolution import betti, betti_taylor, cross_check, regularity
from ..algebra.spectrum import associated_primes
from ..families.borel import (
    borel_intersection_classifier,
    chain_ideal,
    principal_borel,
    principal_generator,
    reconstruct_borel_generator,
)
from ..families.graphs import (
    Graph,
    ass_square_bound,
    central_cycles,
    edge_ideal,
    higher_powers_not_intersection_type,
    odd_cycle_report,
    power_report,
    square_extra_primes,
    square_is_intersection_type,
)
from ..families.polymatroid import (
    canonical_decomposition_polymatroidal,
    from_ideal,
    tau_decomposition,
    tau_decomposition_reduced,
    transversal_ideal,
    veronese_ass,
    veronese_ideal,
)
from ..geometry.newton import (
    NewtonPolyhedron,
    is_integrally_closed,
    normality_report,
    supporting_hyperplanes,
    symbolic_containment,
    symbolic_power,
    symbolic_power_associated,
)
from ..utils.errors import IdealParseError, MonomialIdealError, PreconditionError
from ..utils.settings import configure
from ..utils.subsets import check_dimension
from .parser import parse_ideal_with_names, parse_monomial, parse_prime, parse_vars
from .report import (
    analyze,
    decomposition_json,
    dump_json,
    ideal_json,
    monomial_json,
    prime_json,
    print_table,
)

log = logging.getLogger("monomial_intersection")


# -----------------------------------------------------------------------------
# Logging
# -----------------------------------------------------------------------------
def init_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.INFO
    fmt = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
    logging.basicConfig(level=level, format=fmt, stream=sys.stderr, force=True)


# -----------------------------------------------------------------------------
# Eingabe-Helfer
# -----------------------------------------------------------------------------
def read_ideal(args: argparse.Namespace) -> tuple[MonomialIdeal, tuple[str, ...]]:
    names = parse_vars(args.vars) if args.vars else None
    ideal, names = parse_ideal_with_names(args.ideal, names)
    check_dimension(ideal.ambient_dim)
    return ideal, names


def read_graph(args: argparse.Namespace) -> Graph:
    if args.edges and args.edge_file:
        raise PreconditionError("--edges und --edge-file schließen sich aus")
    if args.edge_file:
        g = Graph.from_file(Path(args.edge_file), args.vertices)
    elif args.edges:
        g = Graph.from_inline(args.edges, args.vertices)
    else:
        raise PreconditionError("Graph fehlt: --edges oder --edge-file angeben")
    check_dimension(g.vertex_count)
    return g


def graph_names(g: Graph) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(g.vertex_count))


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise IdealParseError(f"Zahlenliste erwartet: {text!r}", 0) from None


def parse_subset_list(text: str, n: int | None) -> tuple[list[list[int]], int]:
    """"1,2;2,3;3" → 0-basierte Teilmengen und n"""
    groups = [parse_int_list(chunk) for chunk in text.split(";")]
    top = max((max(g) for g in groups if g), default=0)
    n = n or top
    for g in groups:
        if not g or min(g) < 1 or max(g) > n:
            raise IdealParseError(f"Faktor {g} außerhalb 1..{n}", text.find(str(g[0]) if g else ";"))
    return [[i - 1 for i in g] for g in groups], n


def parse_chain(text: str, names: Sequence[str]) -> list[tuple[PrimeIdeal, int]]:
    """"(x1):1; (x1,x2):3" – Primideal und Exponent, durch ';' getrennt"""
    chain = []
    for chunk in text.split(";"):
        prime_txt, sep, exp_txt = chunk.rpartition(":")
        if not sep or not exp_txt.strip().isdigit():
            raise IdealParseError(f"Kettenglied {chunk.strip()!r} ist nicht von der Form p:d", text.find(chunk))
        chain.append((parse_prime(prime_txt, names), int(exp_txt)))
    return chain


def emit(args: argparse.Namespace, payload: dict, human: Callable[[], None]) -> None:
    if args.json:
        print(dump_json(payload))
    else:
        human()


def _fmt_subset(f: frozenset[int]) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(f)) + "}"


# -----------------------------------------------------------------------------
# Befehle: Ideale
# -----------------------------------------------------------------------------
def cmd_analyze(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    report = analyze(ideal, names, with_regularity=args.regularity, force=args.force_large)
    emit(args, report.as_json(), report.render)


def cmd_ass(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    primes = associated_primes(ideal)
    payload = {"ideal": ideal_json(ideal, names), "associated_primes": [prime_json(p, names) for p in primes]}
    emit(args, payload, lambda: print_table(
        [[format_prime(p, names), p.height] for p in primes], ["p", "Höhe"], f"Ass(S/I): {len(primes)}"
    ))


def cmd_decompose(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    report = intersection_type_report(ideal)
    decomp = canonical_decomposition(ideal, report)
    payload = {
        "ideal": ideal_json(ideal, names),
        "is_intersection_type": decomp is not None,
        "decomposition": decomposition_json(decomp, names) if decomp is not None else None,
        "diagnostics": [
            {"prime": prime_json(d.prime, names), "witness": monomial_json(d.witness, names)}
            for d in report.failing
        ],
    }

    def human() -> None:
        if decomp is None:
            print("nicht vom Schnitt-Typ")
            for d in report.failing:
                print(f"  {format_prime(d.prime, names)}: Sockel-Zeuge {format_monomial(d.witness, names)} "
                      f"vom Grad {d.socle_degree} ≥ min I(p) = {d.min_degree}")
            return
        for p, e in decomp:
            print(format_prime(p, names) if e == 1 else f"{format_prime(p, names)}^{e}")
    emit(args, payload, human)


def cmd_betti(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    table = betti_taylor(ideal) if args.taylor else betti(ideal, force=args.force_large)
    if args.check:
        cross_check(ideal)
    payload = {"ideal": ideal_json(ideal, names), "betti": table.as_json(), "cross_checked": args.check}
    emit(args, payload, lambda: print(table.render()))


def cmd_reg(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    reg = regularity(ideal, force=args.force_large)
    emit(args, {"ideal": ideal_json(ideal, names), "regularity": reg}, lambda: print(reg))


def cmd_power(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    if args.k < 0:
        raise PreconditionError(f"k = {args.k} < 0")
    result = power(ideal, args.k)
    payload = {"k": args.k, "power": ideal_json(result, names)}
    emit(args, payload, lambda: print(format_ideal(result, names)))


def cmd_localize(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    prime = parse_prime(args.prime, names)
    loc = localize(ideal, prime)
    local_names = loc.local_names(names)
    payload = {
        "prime": prime_json(prime, names),
        "local": ideal_json(loc.ideal, local_names),
        "index_map": [i + 1 for i in loc.index_map],
    }
    emit(args, payload, lambda: print(format_ideal(loc.ideal, local_names)))


# -----------------------------------------------------------------------------
# Befehle: Polymatroide
# -----------------------------------------------------------------------------
def _require_poly(ideal: MonomialIdeal):
    poly = from_ideal(ideal)
    if poly is None:
        raise PreconditionError("Ideal ist nicht polymatroidal")
    return poly


def cmd_poly_rank(args: argparse.Namespace) -> None:
    ideal, _ = read_ideal(args)
    table = _require_poly(ideal).rank_table()
    payload = {"rank": [{"subset": [i + 1 for i in sorted(f)], "value": v} for f, v in table.items()]}
    emit(args, payload, lambda: print_table(
        [[_fmt_subset(f), v] for f, v in table.items()], ["F", "ρ(F)"]
    ))


def cmd_poly_tau(args: argparse.Namespace) -> None:
    ideal, _ = read_ideal(args)
    poly = _require_poly(ideal)
    # τ-abgeschlossen und τ-trennbar sind nur für F ≠ ∅ erklärt
    rows = [
        (f, v, poly.tau_closed(f) if f else None, poly.tau_separable(f) if f else None)
        for f, v in poly.tau_table().items()
    ]
    payload = {
        "tau": [
            {"subset": [i + 1 for i in sorted(f)], "value": v, "closed": c, "separable": s}
            for f, v, c, s in rows
        ]
    }
    emit(args, payload, lambda: print_table(
        [[_fmt_subset(f), v, "ja" if c else "", "ja" if s else ""] for f, v, c, s in rows],
        ["F", "τ(F)", "τ-abgeschlossen", "τ-trennbar"],
    ))


def cmd_poly_tau_decomp(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    decomp = tau_decomposition_reduced(ideal) if args.reduced else tau_decomposition(ideal)
    emit(args, {"decomposition": decomposition_json(decomp, names)},
         lambda: print(decomp.format(names)))


def cmd_poly_veronese(args: argparse.Namespace) -> None:
    caps = parse_int_list(args.caps)
    check_dimension(len(caps))
    names = parse_vars(args.vars) if args.vars else tuple(f"x{i + 1}" for i in range(len(caps)))
    ideal = veronese_ideal(args.degree, caps)
    ass = veronese_ass(args.degree, caps) if all(a <= args.degree for a in caps) else associated_primes(ideal)
    routes = {
        "socle": canonical_decomposition(ideal),
        "rank": canonical_decomposition_polymatroidal(ideal),
        "tau_reduced": tau_decomposition_reduced(ideal),
    }
    agree = len({r.components for r in routes.values()}) == 1
    payload = {
        "ideal": ideal_json(ideal, names),
        "associated_primes": [prime_json(p, names) for p in ass],
        "decompositions": {k: decomposition_json(v, names) for k, v in routes.items()},
        "routes_agree": agree,
    }

    def human() -> None:
        print(f"I = {format_ideal(ideal, names)}")
        print("Ass: " + " ".join(format_prime(p, names) for p in ass))
        for key, d in routes.items():
            print(f"{key:<12}: {d.format(names)}")
        print(f"Wege stimmen überein: {'ja' if agree else 'nein'}")
    emit(args, payload, human)


def cmd_poly_transversal(args: argparse.Namespace) -> None:
    factors, n = parse_subset_list(args.factors, args.vertices)
    check_dimension(n)
    names = tuple(f"x{i + 1}" for i in range(n))
    t = transversal_ideal(factors, n)
    decomp = canonical_decomposition(t.ideal)
    payload = {
        "ideal": ideal_json(t.ideal, names),
        "intersection_graph_connected": nx.is_connected(t.intersection_graph),
        "rank_matches_bases": t.rank_matches_bases(),
        "exponent_identity": t.exponent_identity(),
        "decomposition": decomposition_json(decomp, names) if decomp is not None else None,
    }
    emit(args, payload, lambda: print(dump_json(payload)))


def cmd_poly_borel(args: argparse.Namespace) -> None:
    names = parse_vars(args.vars) if args.vars else None
    if args.chain:
        if names is None:
            raise PreconditionError("--chain braucht --vars")
        chain = parse_chain(args.chain, names)
        ideal = chain_ideal(chain)
        u, perm = reconstruct_borel_generator(chain)
        payload = {
            "chain_ideal": ideal_json(ideal, names),
            "generator": monomial_json(u, names),
            "relabelling": [p + 1 for p in perm],
        }
        emit(args, payload, lambda: print(
            f"{format_ideal(ideal, names)} = ⟨{format_monomial(u, names)}⟩ nach Umbenennung {payload['relabelling']}"
        ))
        return
    if args.principal:
        if names is None:
            raise PreconditionError("--principal braucht --vars")
        u = parse_monomial(args.principal, names)
        ideal = principal_borel(u)
        emit(args, {"principal_borel": ideal_json(ideal, names)},
             lambda: print(format_ideal(ideal, names)))
        return
    if not args.ideal:
        raise PreconditionError("Ideal, --chain oder --principal angeben")
    ideal, names = read_ideal(args)
    cls = borel_intersection_classifier(ideal)
    u = principal_generator(ideal)
    payload = {"class": cls.value, "principal_generator": monomial_json(u, names) if u is not None else None}
    emit(args, payload, lambda: print(cls.value + (f" (⟨{format_monomial(u, names)}⟩)" if u is not None else "")))


# -----------------------------------------------------------------------------
# Befehle: Graphen
# -----------------------------------------------------------------------------
def cmd_graph_edge_ideal(args: argparse.Namespace) -> None:
    g = read_graph(args)
    names = graph_names(g)
    ideal = edge_ideal(g)
    emit(args, {"edge_ideal": ideal_json(ideal, names)}, lambda: print(format_ideal(ideal, names)))


def cmd_graph_central(args: argparse.Namespace) -> None:
    g = read_graph(args)
    rows = central_cycles(g)
    payload = {"cycles": [{"vertices": [v + 1 for v in c], "central": ok} for c, ok in rows]}
    emit(args, payload, lambda: print_table(
        [["-".join(str(v + 1) for v in c), "ja" if ok else "nein"] for c, ok in rows],
        ["3-Kreis", "zentral"],
    ))


def cmd_graph_square(args: argparse.Namespace) -> None:
    g = read_graph(args)
    names = graph_names(g)
    typed = square_is_intersection_type(g)
    bound = ass_square_bound(g)
    extra = square_extra_primes(g)
    payload = {
        "is_intersection_type": typed,
        "ass_bound_holds": bound,
        "extra_primes": [prime_json(p, names) for p in extra],
    }
    emit(args, payload, lambda: print("true" if typed else "false"))


def cmd_graph_powers(args: argparse.Namespace) -> None:
    g = read_graph(args)
    names = graph_names(g)
    rows = power_report(g, args.k)
    witnesses = []
    if args.k >= 2 and not square_is_intersection_type(g, cross_check=False):
        witnesses = higher_powers_not_intersection_type(g, args.k)
    payload = {
        "powers": [
            {"s": r.s, "ass_count": r.ass_count, "is_intersection_type": r.is_intersection_type,
             "extra_primes": [prime_json(p, names) for p in r.extra_primes]}
            for r in rows
        ],
        "witnesses": [
            {"k": w.k, "prime": prime_json(w.prime, names), "witness": monomial_json(w.witness, names)}
            for w in witnesses
        ],
    }

    def human() -> None:
        print_table(
            [[r.s, r.ass_count, len(r.extra_primes), "ja" if r.is_intersection_type else "nein"] for r in rows],
            ["s", "|Ass|", "neu", "Schnitt-Typ"],
        )
        for w in witnesses:
            print(f"k={w.k}: Zeuge {format_monomial(w.witness, names)} (Grad {w.witness_degree}) "
                  f"bei {format_prime(w.prime, names)}")
    emit(args, payload, human)


def cmd_graph_odd_cycle(args: argparse.Namespace) -> None:
    rows = odd_cycle_report(args.length, args.s_max)
    names = tuple(f"x{i + 1}" for i in range(args.length))
    payload = {
        "length": args.length,
        "powers": [
            {"s": r.s, "ass_count": r.ass_count, "is_intersection_type": r.is_intersection_type,
             "extra_primes": [prime_json(p, names) for p in r.extra_primes]}
            for r in rows
        ],
    }
    emit(args, payload, lambda: print_table(
        [[r.s, r.ass_count, "ja" if r.is_intersection_type else "nein"] for r in rows],
        ["s", "|Ass|", "Schnitt-Typ"], f"I(C_{args.length})^s",
    ))


# -----------------------------------------------------------------------------
# Befehle: Newton-Polyeder
# -----------------------------------------------------------------------------
def cmd_newton_hyperplanes(args: argparse.Namespace) -> None:
    ideal, _ = read_ideal(args)
    planes = supporting_hyperplanes(ideal)
    emit(args, {"hyperplanes": [h.as_json() for h in planes]},
         lambda: print("\n".join(h.format() for h in planes)))


def cmd_newton_closed(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    closed = is_integrally_closed(ideal, method=args.method)
    payload = {"ideal": ideal_json(ideal, names), "is_integrally_closed": closed}
    if args.powers:
        payload["powers"] = [
            {"k": r.k, "is_intersection_type": r.is_intersection_type,
             "is_integrally_closed": r.is_integrally_closed}
            for r in normality_report(ideal, args.powers)
        ]
    emit(args, payload, lambda: print("true" if closed else "false"))


def cmd_newton_contains(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    m = parse_monomial(args.monomial, names)
    cert = NewtonPolyhedron(ideal).certificate(m)
    payload = {
        "member": cert.member,
        "weights": [[format_monomial(g, names), str(w)] for g, w in cert.weights],
        "separator": [str(v) for v in cert.separator] if cert.separator is not None else None,
    }
    emit(args, payload, lambda: print(dump_json(payload)))


def cmd_newton_symbolic(args: argparse.Namespace) -> None:
    ideal, names = read_ideal(args)
    sym = symbolic_power(ideal, args.t)
    alt = symbolic_power_associated(ideal, args.t)
    payload = {
        "t": args.t,
        "symbolic_power": ideal_json(sym, names),
        "associated_variant_contained": is_subideal(alt, sym),
    }
    emit(args, payload, lambda: print(format_ideal(sym, names)))


def cmd_newton_containment(args: argparse.Namespace) -> None:
    ideal, _ = read_ideal(args)
    report = symbolic_containment(ideal, args.k, force=args.force_large)
    payload = report.as_json()
    emit(args, payload, lambda: print_table(
        [[k, v] for k, v in sorted(payload.items())], ["Größe", "Wert"]
    ))


# -----------------------------------------------------------------------------
# Argumente
# -----------------------------------------------------------------------------
def _ideal_arg(p: argparse.ArgumentParser, optional: bool = False) -> None:
    p.add_argument("ideal", nargs="?" if optional else None,
                   help='z. B. "x1^3*x2, x1*x3" oder "(xy, yz)"')


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--edges", help='Kanten 1-basiert, z. B. "1-2,2-3,1-3"')
    p.add_argument("--edge-file", help="Datei mit einer Kante `i j` pro Zeile")
    p.add_argument("--vertices", type=int, help="Eckenzahl (sonst größte Ecke)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="monomial_intersection",
        description="Monomiale Ideale vom Schnitt-Typ: Ass, Zerlegung, Betti-Zahlen, Polyeder",
    )
    ap.add_argument("--vars", help="Variablen: Anzahl (x1..xN) oder Namen x,y,z")
    ap.add_argument("--json", action="store_true", help="JSON statt Tabellen")
    ap.add_argument("--max-n", type=int, help="Obergrenze für die Variablenzahl")
    ap.add_argument("--force-large", action="store_true", help="Größenwächter für Betti aufheben")
    ap.add_argument("--jobs", type=int, help="Threads für Primideal-/Multigrad-Schleifen")
    ap.add_argument("--progress", action="store_true", help="Fortschrittsbalken")
    ap.add_argument("--char", type=int, help="Charakteristik des Koeffizientenkörpers (0 = QQ)")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="vollständiger Bericht")
    _ideal_arg(p)
    p.add_argument("--regularity", action="store_true", help="reg I(p) pro Primideal")
    p.set_defaults(func=cmd_analyze)

    for name, func, text in (
        ("ass", cmd_ass, "assoziierte Primideale"),
        ("decompose", cmd_decompose, "kanonische Zerlegung"),
        ("reg", cmd_reg, "Castelnuovo-Mumford-Regularität"),
    ):
        p = sub.add_parser(name, help=text)
        _ideal_arg(p)
        p.set_defaults(func=func)

    p = sub.add_parser("betti", help="graduierte Betti-Tabelle")
    _ideal_arg(p)
    p.add_argument("--taylor", action="store_true", help="über den Taylor-Komplex rechnen")
    p.add_argument("--check", action="store_true", help="Koszul- und Taylor-Weg vergleichen")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("power", help="I^k")
    _ideal_arg(p)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("localize", help="monomiale Lokalisierung I(p)")
    _ideal_arg(p)
    p.add_argument("-p", "--prime", required=True, help='z. B. "x1,x3" oder "1,3"')
    p.set_defaults(func=cmd_localize)

    # -- polymatroid -----------------------------------------------------------
    poly = sub.add_parser("polymatroid", help="polymatroidale Ideale").add_subparsers(
        dest="action", required=True
    )
    for name, func, text in (
        ("rank", cmd_poly_rank, "ρ-Tabelle"),
        ("tau", cmd_poly_tau, "τ-Tabelle mit Abschluss/Trennbarkeit"),
    ):
        p = poly.add_parser(name, help=text)
        _ideal_arg(p)
        p.set_defaults(func=func)
    p = poly.add_parser("tau-decomp", help="τ-Zerlegung")
    _ideal_arg(p)
    p.add_argument("--reduced", action="store_true", help="redundante Komponenten streichen")
    p.set_defaults(func=cmd_poly_tau_decomp)
    p = poly.add_parser("veronese", help="Veronese-Typ I_{d;a}")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("--caps", required=True, help="a_1,..,a_n")
    p.set_defaults(func=cmd_poly_veronese)
    p = poly.add_parser("transversal", help="p_{F_1} ⋯ p_{F_r}")
    p.add_argument("--factors", required=True, help='z. B. "1,2;2,3;3"')
    p.add_argument("--vertices", type=int, help="Variablenzahl")
    p.set_defaults(func=cmd_poly_transversal)
    p = poly.add_parser("borel", help="Borel-Klassifikation, Ketten, prinzipale Borel-Ideale")
    _ideal_arg(p, optional=True)
    p.add_argument("--chain", help='z. B. "x1:1; x1,x2:3"')
    p.add_argument("--principal", help="Monom u für ⟨u⟩")
    p.set_defaults(func=cmd_poly_borel)

    # -- graph -----------------------------------------------------------------
    graph = sub.add_parser("graph", help="Kantenideale").add_subparsers(dest="action", required=True)
    for name, func, text in (
        ("edge-ideal", cmd_graph_edge_ideal, "I(G)"),
        ("central-cycles", cmd_graph_central, "3-Kreise und Zentralität"),
        ("square-type", cmd_graph_square, "ist I(G)² vom Schnitt-Typ?"),
    ):
        p = graph.add_parser(name, help=text)
        _graph_args(p)
        p.set_defaults(func=func)
    p = graph.add_parser("powers", help="I(G)^s für s = 1..k")
    _graph_args(p)
    p.add_argument("-k", type=int, default=3)
    p.set_defaults(func=cmd_graph_powers)
    p = graph.add_parser("odd-cycle", help="Daten zu I(C_{2k+1})^s")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--s-max", type=int, default=4)
    p.set_defaults(func=cmd_graph_odd_cycle)

    # -- newton ----------------------------------------------------------------
    newton = sub.add_parser("newton", help="Newton-Polyeder").add_subparsers(dest="action", required=True)
    p = newton.add_parser("hyperplanes", help="stützende Hyperebenen")
    _ideal_arg(p)
    p.set_defaults(func=cmd_newton_hyperplanes)
    p = newton.add_parser("closed", help="ganz abgeschlossen?")
    _ideal_arg(p)
    p.add_argument("--method", choices=("auto", "polyhedral", "halfspace"), default="auto")
    p.add_argument("--powers", type=int, default=0, help="zusätzlich I^k für k ≤ N prüfen")
    p.set_defaults(func=cmd_newton_closed)
    p = newton.add_parser("contains", help="liegt ein Monom in con(I)?")
    _ideal_arg(p)
    p.add_argument("-m", "--monomial", required=True)
    p.set_defaults(func=cmd_newton_contains)
    p = newton.add_parser("symbolic", help="symbolische Potenz I^(t)")
    _ideal_arg(p)
    p.add_argument("-t", type=int, required=True)
    p.set_defaults(func=cmd_newton_symbolic)
    p = newton.add_parser("containment", help="I^(s) ⊆ I^k für s = reg(I^k), dk, rk")
    _ideal_arg(p)
    p.add_argument("-k", type=int, default=1)
    p.set_defaults(func=cmd_newton_containment)
    return ap


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


# -----------------------------------------------------------------------------
# Main
# -----------------------------------------------------------------------------
def main(argv: Sequence[str] | None = None) -> None:
    args = parse_args(argv)
    init_logging(args.verbose)

    try:
        configure(
            max_n=args.max_n,
            force_large=args.force_large or None,
            jobs=args.jobs,
            progress=args.progress or None,
            characteristic=args.char,
        )
        args.func(args)

    except MonomialIdealError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        sys.exit(exc.exit_code)
    except KeyboardInterrupt:
        log.warning("Abbruch durch Benutzer")
        sys.exit(1)
    except Exception:
        log.exception("Unerwarteter Fehler")
        sys.exit(1)


if __name__ == "__main__":
    main()
