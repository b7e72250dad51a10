"""Command-line front end.

    chromsf compute bowtie --basis e
    chromsf compute kab:6,6 --basis e --q --json
    chromsf tableaux bowtie --shape 2,2,1
    chromsf orientations --hessenberg 3,3,5,5,5 --sinks 1
    chromsf verify claw --all
    chromsf sweep --nmax 7 --family nuig
    chromsf enumerate --n 4

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import algebra, graphs, tableaux, verify
from .algebra import (
    BASES,
    ELEMENTARY,
    MONOMIAL,
    QPolynomial,
    SymFuncExpansion,
    expansion_to_json,
    format_expansion,
    format_poly,
    poly_to_json,
)
from .csf import e_expansion, monomial_expansion, schur_expansion_via_tableaux
from .graphs import Graph


class UsageError(Exception):
    pass


# -- graph sources ------------------------------------------------------------------

def builtin_graph(name: str) -> Graph:
    key, _, arg = name.partition(":")
    try:
        if key == "bowtie" and not arg:
            return graphs.bowtie()
        if key == "claw" and not arg:
            return graphs.claw()
        if key == "kab":
            a, b = (int(x) for x in arg.split(","))
            return graphs.k_ab(a, b)
        if key == "complete":
            return graphs.complete_graph(int(arg))
        if key == "path":
            return graphs.path_graph(int(arg))
        if key == "empty":
            return graphs.empty_graph(int(arg))
        if key == "triangles":
            return graphs.glued_triangles(int(arg))
    except ValueError as exc:
        raise UsageError(f"bad builtin graph {name!r}: {exc}") from exc
    raise UsageError(f"unknown builtin graph {name!r} "
                     "(try bowtie, claw, kab:a,b, complete:n, path:n, empty:n, triangles:k)")


def load_graph(args) -> Graph:
    sources = [s for s in (args.graph, args.hessenberg, args.edges) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one graph source: a builtin name, --hessenberg or --edges")
    try:
        if args.graph is not None:
            return builtin_graph(args.graph)
        if args.hessenberg is not None:
            return graphs.graph_from_hessenberg(graphs.parse_hessenberg(args.hessenberg))
        with open(args.edges, encoding="utf-8") as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            return graphs.graph_from_json(json.loads(text))
        return graphs.parse_edge_list(text)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc


def _require_q_ok(G: Graph, with_q: bool) -> None:
    if with_q and not graphs.is_natural_unit_interval(G):
        raise UsageError("--q needs a natural unit interval graph: "
                         "otherwise the chromatic quasisymmetric function is not guaranteed symmetric")


# -- text parsing (inverse of format_poly / format_expansion) ------------------------

_POLY_TERM = re.compile(r"^(-?)(\d+)?(?:\*?q(?:\^(\d+))?)?$")
_EXP_TERM = re.compile(r"^(?:(.*)\*)?([mes])\[([\d,]*)\]$")


def parse_poly(text: str) -> QPolynomial:
    text = text.strip()
    if text == "0":
        return QPolynomial()
    coeffs: dict[int, int] = {}
    for tok in text.replace(" - ", " + -").split(" + "):
        tok = tok.replace(" ", "")
        m = _POLY_TERM.match(tok)
        if not m or tok in ("", "-"):
            raise ValueError(f"cannot parse polynomial term {tok!r}")
        sign, mag, power = m.groups()
        has_q = "q" in tok
        k = (int(power) if power else 1) if has_q else 0
        c = int(mag) if mag else 1
        coeffs[k] = coeffs.get(k, 0) + (-c if sign else c)
    top = max(coeffs)
    return QPolynomial([coeffs.get(k, 0) for k in range(top + 1)])


def _split_top_level(text: str) -> list[tuple[int, str]]:
    """Split ``a + b - c`` at depth-zero separators, keeping signs."""
    out, depth, start, sign = [], 0, 0, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and text.startswith((" + ", " - "), i):
            out.append((sign, text[start:i]))
            sign = 1 if text[i + 1] == "+" else -1
            i += 3
            start = i
            continue
        i += 1
    out.append((sign, text[start:]))
    return out


def parse_expansion(text: str) -> SymFuncExpansion:
    text = text.strip()
    terms: dict[tuple[int, ...], QPolynomial] = {}
    basis = None
    for sign, tok in _split_top_level(text):
        tok = tok.strip()
        if tok.startswith("-"):
            sign, tok = -sign, tok[1:]
        m = _EXP_TERM.match(tok)
        if not m:
            raise ValueError(f"cannot parse expansion term {tok!r}")
        coef, b, parts = m.groups()
        if basis not in (None, b):
            raise ValueError("mixed bases in one expansion")
        basis = b
        if coef is None:
            c = QPolynomial((1,))
        elif coef.startswith("(") and coef.endswith(")"):
            c = parse_poly(coef[1:-1])
        else:
            c = parse_poly(coef)
        lam = tuple(int(x) for x in parts.split(",") if x)
        terms[lam] = terms.get(lam, QPolynomial()) + c * sign
    degree = sum(next(iter(terms))) if terms else 0
    return SymFuncExpansion(basis or ELEMENTARY, degree, terms)


# -- subcommands -----------------------------------------------------------------------

def _emit(obj, as_json: bool, text: str, out) -> None:
    if as_json:
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def cmd_compute(args, out) -> int:
    G = load_graph(args)
    _require_q_ok(G, args.q)
    if args.basis == MONOMIAL:
        f = monomial_expansion(G, with_q=args.q)
    elif args.basis == ELEMENTARY:
        f = e_expansion(G, with_q=args.q)
    elif graphs.is_natural_unit_interval(G):
        f = schur_expansion_via_tableaux(G)
        if not args.q:
            f = f.at_q_equals_1()
    else:
        f = algebra.monomial_to_schur(monomial_expansion(G, with_q=False))
    _emit(expansion_to_json(f), args.json, format_expansion(f), out)
    return 0


def cmd_tableaux(args, out) -> int:
    G = load_graph(args)
    if not graphs.is_natural_unit_interval(G):
        raise UsageError("G-tableaux need a natural unit interval graph")
    if args.fixed_points:
        found = tableaux.fixed_points(G)
    else:
        if args.shape is None:
            raise UsageError("give --shape or --fixed-points")
        try:
            shape = algebra.partition(int(x) for x in args.shape.split(","))
        except ValueError as exc:
            raise UsageError(f"bad shape: {exc}") from exc
        if sum(shape) != G.n:
            raise UsageError(f"shape {shape} is not a partition of n={G.n}")
        found = tableaux.enumerate_g_tableaux(G, shape)
    if args.json:
        for T in found:
            rec = tableaux.tableau_to_json(T)
            rec["inversions"] = [list(p) for p in sorted(tableaux.inversions(T, G))]
            out.write(json.dumps(rec, sort_keys=True) + "\n")
        return 0
    for k, T in enumerate(found):
        inv_set = ", ".join(f"({i},{j})" for i, j in sorted(tableaux.inversions(T, G)))
        if k:
            out.write("\n")
        out.write(tableaux.format_tableau(T) + "\n")
        out.write(f"Inv = {{{inv_set}}}  inv = {tableaux.inv(T, G)}\n")
    out.write(f"\n{len(found)} tableaux\n")
    return 0


def cmd_orientations(args, out) -> int:
    G = load_graph(args)
    if G.n > graphs.MAX_ORIENTATION_VERTICES:
        raise UsageError(f"orientation enumeration is limited to n <= {graphs.MAX_ORIENTATION_VERTICES}")
    table = graphs.orientation_census(G)
    js = range(G.n + 1) if args.sinks is None else [args.sinks]
    for j in js:
        p = QPolynomial(int(x) for x in table[j]) if 0 <= j <= G.n else QPolynomial()
        if args.sinks is None and p.is_zero():
            continue
        _emit({"sinks": j, "poly": poly_to_json(p)}, args.json, f"sinks={j}: {format_poly(p)}", out)
    return 0


def cmd_verify(args, out) -> int:
    G = load_graph(args)
    _require_q_ok(G, args.q)
    names = _check_names(args)
    reports = verify.run_checks(G, names, with_q=args.q)
    if args.json:
        out.write(verify.reports_to_jsonl(reports))
    else:
        for r in reports:
            extra = f"  {json.dumps(r.witness or r.details, sort_keys=True)}" if (r.witness or r.details) else ""
            out.write(f"{r.verdict.upper():4}  {r.check}{extra}\n")
    return 1 if verify.any_failed(reports) else 0


def cmd_sweep(args, out) -> int:
    names = _check_names(args, default_all=True)
    reports = verify.sweep(args.nmax, names, family=args.family, with_q=args.q,
                           workers=args.workers, n_min=args.nmin)
    if args.json:
        out.write(verify.reports_to_jsonl(reports))
    else:
        for r in reports:
            if r.verdict == verify.FAIL:
                out.write(f"FAIL  {r.check}  {r.graph}  {json.dumps(r.witness, sort_keys=True)}\n")
        s = verify.summarize(reports)["summary"]
        out.write(f"{s['graphs']} graphs, {s['reports']} reports: "
                  f"{s['pass']} pass, {s['fail']} fail, {s['skip']} skip\n")
    return 1 if verify.any_failed(reports) else 0


def cmd_enumerate(args, out) -> int:
    for G in verify.family_graphs(args.family, args.n, args.n):
        if args.json:
            out.write(json.dumps(graphs.graph_to_json(G), sort_keys=True) + "\n")
        else:
            out.write(graphs.graph_identifier(G) + "\n")
    return 0


def _check_names(args, default_all: bool = False) -> list[str]:
    if args.checks:
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in names if c not in verify.CHECKS]
        if unknown:
            raise UsageError(f"unknown checks {unknown}; available: {', '.join(verify.CHECKS)}")
        return names
    if getattr(args, "all", False) or default_all:
        return list(verify.DEFAULT_CHECKS)
    raise UsageError("give --all or --checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromsf", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_opts(p):
        p.add_argument("graph", nargs="?", help="builtin: bowtie, claw, kab:a,b, complete:n, path:n, empty:n")
        p.add_argument("--hessenberg", help='Hessenberg function, e.g. "3,3,5,5,5"')
        p.add_argument("--edges", help="edge-list file (first line n, then 'i j' per edge) or graph JSON")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("compute", help="expand X_G in a basis")
    graph_opts(p)
    p.add_argument("--basis", choices=BASES, default=ELEMENTARY)
    p.add_argument("--q", action="store_true", help="keep the q-refinement (NUIGs only)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("tableaux", help="list G-tableaux with their inversion sets")
    graph_opts(p)
    p.add_argument("--shape", help='shape such as "2,2,1"')
    p.add_argument("--fixed-points", action="store_true", help="list the fixed points of the hook involution")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("orientations", help="sink generating functions of acyclic orientations")
    graph_opts(p)
    p.add_argument("--sinks", type=int, help="number of sinks (default: all)")
    p.set_defaults(func=cmd_orientations)

    p = sub.add_parser("verify", help="run theorem checkers on one graph")
    graph_opts(p)
    p.add_argument("--all", action="store_true", help="run every checker")
    p.add_argument("--checks", help=f"comma-separated subset of: {', '.join(verify.CHECKS)}")
    p.add_argument("--q", action="store_true", help="check the q-refined statements")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run checkers over a graph family")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--family", choices=verify.FAMILIES, default="nuig")
    p.add_argument("--checks", help=f"comma-separated subset of: {', '.join(verify.CHECKS)}")
    q = p.add_mutually_exclusive_group()
    q.add_argument("--q", dest="q", action="store_true", default=None, help="q-refined checks (default for nuig)")
    q.add_argument("--no-q", dest="q", action="store_false", help="q = 1 checks (default otherwise)")
    p.add_argument("--workers", type=int, default=None,
                   help=f"worker processes (default: ${verify.WORKERS_ENV} or available CPUs)")
    p.add_argument("--json", action="store_true", help="JSON lines with a trailing summary object")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("enumerate", help="list the graphs of a family on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=verify.FAMILIES, default="nuig")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"chromsf: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
