"""Theorem checkers and conjecture sweeps over graph families.

Every checker returns a :class:`CheckReport`.  A ``fail`` always carries a
witness (the offending partition and coefficient plus the full expansion), so
a single report is enough to replay a counterexample.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial
from typing import Callable, Iterable, Iterator, Sequence

from .algebra import (
    ONE,
    QPolynomial,
    conjugate,
    dominates,
    expansion_to_json,
    poly_divides,
    poly_is_log_concave,
    poly_is_nonnegative,
    poly_is_unimodal,
    poly_to_json,
    q_factorial,
    q_integer,
)
from .csf import (
    coefficient_en_formula,
    coefficient_en_peo,
    coefficient_sum_by_length,
    e_expansion,
)
from .graphs import (
    Graph,
    all_labeled_graphs,
    alpha_profile,
    clique_number,
    enumerate_nuig,
    equivalence_classes,
    graph_identifier,
    independence_number,
    is_natural_unit_interval,
    lambda_g,
    omega_profile,
    orientation_census,
    perfect_elimination_order,
)
from .tableaux import cn_via_fixed_points, signed_hook_sum

PASS, FAIL, SKIP = "pass", "fail", "skip"
FAMILIES = ("nuig", "all-graphs", "chordal")
WORKERS_ENV = "CHROMSF_WORKERS"


@dataclass(frozen=True)
class CheckReport:
    check: str
    graph: str
    verdict: str
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, SKIP):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == FAIL and not self.witness:
            raise ValueError("a failing report needs a witness")

    def to_json(self) -> dict:
        out = {"check": self.check, "graph": self.graph, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        return out


class GraphFacts:
    """Lazily computed data shared by all checks run on one graph."""

    def __init__(self, G: Graph):
        self.G = G

    @cached_property
    def ident(self) -> str:
        return graph_identifier(self.G)

    @cached_property
    def nuig(self) -> bool:
        return is_natural_unit_interval(self.G)

    @cached_property
    def e_q(self):
        return e_expansion(self.G, with_q=True)

    @cached_property
    def e_1(self):
        if self.nuig:
            return self.e_q.at_q_equals_1()
        return e_expansion(self.G, with_q=False)

    def expansion(self, with_q: bool):
        return self.e_q if with_q else self.e_1

    @cached_property
    def census(self):
        return orientation_census(self.G)

    @cached_property
    def peo(self):
        return perfect_elimination_order(self.G)


def _facts(G: Graph | GraphFacts) -> GraphFacts:
    return G if isinstance(G, GraphFacts) else GraphFacts(G)


def _skip(name: str, F: GraphFacts, reason: str) -> CheckReport:
    return CheckReport(name, F.ident, SKIP, details={"reason": reason})


def _fail(name: str, F: GraphFacts, f, **witness) -> CheckReport:
    witness["expansion"] = expansion_to_json(f)
    return CheckReport(name, F.ident, FAIL, witness=witness)


def _nonzero_terms(f):
    return sorted(f.terms.items())


# -- checks ---------------------------------------------------------------------

def check_alpha_omega(G: Graph | GraphFacts, with_q: bool = True) -> CheckReport:
    """Nonzero c_lam forces alpha_k >= lam'_1+...+lam'_k and omega_k <= lam_1+...+lam_k for all k."""
    name = "alpha_omega"
    F = _facts(G)
    if with_q and not F.nuig:
        return _skip(name, F, "q-refinement needs a natural unit interval graph")
    f = F.expansion(with_q)
    n = F.G.n
    alphas = alpha_profile(F.G)
    omegas = omega_profile(F.G)
    assert alphas[0] == independence_number(F.G) and omegas[0] == clique_number(F.G)
    for lam, c in _nonzero_terms(f):
        lc = conjugate(lam)
        for k in range(1, n + 1):
            if alphas[k - 1] < sum(lc[:k]):
                return _fail(name, F, f, partition=list(lam), poly=poly_to_json(c),
                             inequality="alpha_k", k=k, bound=alphas[k - 1])
            if omegas[k - 1] > sum(lam[:k]):
                return _fail(name, F, f, partition=list(lam), poly=poly_to_json(c),
                             inequality="omega_k", k=k, bound=omegas[k - 1])
    return CheckReport(name, F.ident, PASS, details={"alpha": alphas[0], "omega": omegas[0]})


def check_lambda_g_minimal(G: Graph | GraphFacts, with_q: bool = True) -> CheckReport:
    """c_{lambda_G} is nonzero and every nonzero c_lam has lam dominating lambda_G."""
    name = "lambda_g"
    F = _facts(G)
    if not F.nuig:
        return _skip(name, F, "lambda_G is defined for natural unit interval graphs")
    lam_g = lambda_g(F.G)
    for f in ([F.e_q, F.e_1] if with_q else [F.e_1]):
        if f[lam_g].is_zero():
            return _fail(name, F, f, partition=list(lam_g), poly=[], reason="c_{lambda_G} vanishes")
        for lam, c in _nonzero_terms(f):
            if not dominates(lam, lam_g):
                return _fail(name, F, f, partition=list(lam), poly=poly_to_json(c),
                             reason="does not dominate lambda_G", lambda_g=list(lam_g))
    return CheckReport(name, F.ident, PASS, details={"lambda_g": list(lam_g)})


def class_divisor(G: Graph, with_q: bool) -> QPolynomial:
    out = ONE
    for C in equivalence_classes(G):
        out = out * (q_factorial(len(C)) if with_q else QPolynomial.constant(factorial(len(C))))
    return out


def check_divisibility(G: Graph | GraphFacts, with_q: bool = True) -> CheckReport:
    """Every coefficient is divisible by the product of (q-)factorials of the closed-neighbourhood classes."""
    name = "divisibility"
    F = _facts(G)
    if with_q and not F.nuig:
        return _skip(name, F, "q-refinement needs a natural unit interval graph")
    f = F.expansion(with_q)
    d = class_divisor(F.G, with_q)
    for lam, c in _nonzero_terms(f):
        if not poly_divides(d, c):
            return _fail(name, F, f, partition=list(lam), poly=poly_to_json(c), divisor=poly_to_json(d))
    return CheckReport(name, F.ident, PASS, details={"divisor": poly_to_json(d)})


def check_sink_theorem(G: Graph | GraphFacts, with_q: bool = True) -> CheckReport:
    """Coefficient sums over partitions with j parts equal the acyclic orientations with j sinks."""
    name = "sink_theorem"
    F = _facts(G)
    if with_q and not F.nuig:
        return _skip(name, F, "q-refinement needs a natural unit interval graph")
    f = F.expansion(with_q)
    for j in range(F.G.n + 1):
        lhs = coefficient_sum_by_length(f, j)
        gf = QPolynomial(int(x) for x in F.census[j])
        rhs = gf if with_q else QPolynomial.constant(gf(1))
        if lhs != rhs:
            return _fail(name, F, f, sinks=j, poly=poly_to_json(lhs), orientations=poly_to_json(rhs))
    return CheckReport(name, F.ident, PASS)


def check_e_properties(G: Graph | GraphFacts, with_q: bool = True) -> CheckReport:
    """Nonnegativity, unimodality and log-concavity of every c_lam(q)."""
    name = "e_properties"
    F = _facts(G)
    if not F.nuig:
        return _skip(name, F, "the positivity statements concern natural unit interval graphs")
    f = F.e_q
    for lam, c in _nonzero_terms(f):
        for prop, test in (("nonnegative", poly_is_nonnegative), ("unimodal", poly_is_unimodal),
                           ("log_concave", poly_is_log_concave)):
            if not test(c):
                return _fail(name, F, f, partition=list(lam), poly=poly_to_json(c), property=prop)
    return CheckReport(name, F.ident, PASS)


def check_en_coherence(G: Graph | GraphFacts, with_q: bool = True) -> CheckReport:
    """Agreement of every available route to the coefficient of e_n.

    For NUIGs: the expansion, the q-integer product, the fixed-point sum and the
    signed hook sum (and the peo product at q = 1).  For other graphs only the
    q = 1 routes apply: the expansion, unique-sink orientations, and the peo
    product when G is chordal.
    """
    name = "en_coherence"
    F = _facts(G)
    n = F.G.n
    if with_q and not F.nuig:
        return _skip(name, F, "q-refinement needs a natural unit interval graph")
    routes: dict[str, QPolynomial] = {}
    if F.nuig:
        routes["expansion"] = F.e_q[(n,)]
        routes["formula"] = coefficient_en_formula(F.G)
        routes["fixed_points"] = cn_via_fixed_points(F.G)
        routes["signed_hooks"] = signed_hook_sum(F.G)
        if not with_q:
            routes = {k: QPolynomial.constant(v(1)) for k, v in routes.items()}
    else:
        routes["expansion"] = F.e_1[(n,)]
    if not with_q:
        routes["unique_sink"] = QPolynomial.constant(int(F.census[1].sum()))
        if F.peo is not None:
            routes["peo_product"] = QPolynomial.constant(coefficient_en_peo(F.G, F.peo))
    values = list(routes.values())
    if any(v != values[0] for v in values):
        return _fail(name, F, F.expansion(with_q), partition=[n],
                     routes={k: poly_to_json(v) for k, v in routes.items()})
    return CheckReport(name, F.ident, PASS,
                       details={"routes": sorted(routes), "c_n": poly_to_json(values[0])})


def path_components(G: Graph) -> list[int] | None:
    """Sizes of the connected components if every one is a path, else None."""
    seen: set[int] = set()
    sizes = []
    for v in G.vertices:
        if v in seen:
            continue
        comp, stack = {v}, [v]
        while stack:
            u = stack.pop()
            for w in G.neighbours(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        n_edges = sum(1 for i, j in G.edges if i in comp)
        if n_edges != len(comp) - 1 or any(len(G.neighbours(u)) > 2 for u in comp):
            return None
        sizes.append(len(comp))
    return sizes


def check_path_forest(G: Graph | GraphFacts, with_q: bool = True) -> CheckReport:
    """Two-column coefficients of a disjoint union of paths.

    c_{2^a 1^b}(q) vanishes unless b equals the number of odd paths, and is
    then q^d (1+q)^e with e the number of even paths.  The shift d is
    reported; it is compared against sum over paths of floor((k-1)/2).
    """
    name = "path_forest"
    F = _facts(G)
    sizes = path_components(F.G)
    if sizes is None or not F.nuig:
        return _skip(name, F, "graph is not a naturally labelled union of paths")
    f = F.e_q if with_q else F.e_1
    odd = sum(1 for k in sizes if k % 2)
    even = len(sizes) - odd
    n = F.G.n
    shift = None
    for a in range(n // 2 + 1):
        b = n - 2 * a
        lam = (2,) * a + (1,) * b
        c = f[lam]
        if b != odd:
            if not c.is_zero():
                return _fail(name, F, f, partition=list(lam), poly=poly_to_json(c), reason="expected zero")
            continue
        base = QPolynomial((1, 1)) ** even if with_q else QPolynomial.constant(2**even)
        d = c.low_degree if with_q else 0
        if c != QPolynomial.monomial(max(d, 0)) * base:
            return _fail(name, F, f, partition=list(lam), poly=poly_to_json(c),
                         reason="not a monomial multiple of (1+q)^e", e=even)
        shift = d
    expected = sum((k - 1) // 2 for k in sizes) if with_q else 0
    if shift != expected:
        return _fail(name, F, f, partition=[], poly=[], reason="unexpected monomial shift",
                     shift=shift, expected=expected)
    return CheckReport(name, F.ident, PASS, details={"shift": shift, "even_paths": even, "odd_paths": odd})


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "alpha_omega": check_alpha_omega,
    "lambda_g": check_lambda_g_minimal,
    "divisibility": check_divisibility,
    "sink_theorem": check_sink_theorem,
    "e_properties": check_e_properties,
    "en_coherence": check_en_coherence,
    "path_forest": check_path_forest,
}
DEFAULT_CHECKS = tuple(CHECKS)


def run_checks(G: Graph, checks: Sequence[str] = DEFAULT_CHECKS, with_q: bool = True) -> list[CheckReport]:
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    F = GraphFacts(G)
    return [CHECKS[c](F, with_q=with_q) for c in checks]


# -- sweeps ------------------------------------------------------------------------

def family_graphs(family: str, n_max: int, n_min: int = 1) -> Iterator[Graph]:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    for n in range(n_min, n_max + 1):
        if family == "nuig":
            yield from enumerate_nuig(n)
        elif family == "all-graphs":
            yield from all_labeled_graphs(n)
        else:
            yield from (G for G in all_labeled_graphs(n) if perfect_elimination_order(G) is not None)


def _run_one(args) -> list[CheckReport]:
    G, checks, with_q = args
    return run_checks(G, checks, with_q)


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def sweep(
    n_max: int,
    checks: Sequence[str] = DEFAULT_CHECKS,
    family: str = "nuig",
    with_q: bool | None = None,
    workers: int | None = None,
    n_min: int = 1,
) -> list[CheckReport]:
    """Run ``checks`` on every graph of ``family`` with n_min..n_max vertices.

    ``with_q`` defaults to True for the NUIG family and False otherwise.
    Reports come back ordered by graph index, then by check order.
    """
    if with_q is None:
        with_q = family == "nuig"
    checks = tuple(checks)
    if not checks:
        return []
    graphs = family_graphs(family, n_max, n_min)
    workers = default_workers() if workers is None else workers
    tasks = ((G, checks, with_q) for G in graphs)
    out: list[CheckReport] = []
    if workers <= 1:
        for t in tasks:
            out.extend(_run_one(t))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for reports in pool.map(_run_one, tasks, chunksize=32):
                out.extend(reports)
    return out


def summarize(reports: Iterable[CheckReport]) -> dict:
    reports = list(reports)
    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    for r in reports:
        counts[r.verdict] += 1
    return {"summary": {"graphs": len({r.graph for r in reports}), "reports": len(reports), **counts}}


def reports_to_jsonl(reports: Iterable[CheckReport]) -> str:
    reports = list(reports)
    lines = [json.dumps(r.to_json(), sort_keys=True) for r in reports]
    lines.append(json.dumps(summarize(reports), sort_keys=True))
    return "\n".join(lines) + "\n"


def any_failed(reports: Iterable[CheckReport]) -> bool:
    return any(r.verdict == FAIL for r in reports)
