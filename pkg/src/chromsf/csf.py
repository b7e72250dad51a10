"""Chromatic symmetric and quasisymmetric functions of graphs."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import _kernels
from .algebra import (
    ELEMENTARY,
    MONOMIAL,
    SCHUR,
    ONE,
    ZERO,
    QPolynomial,
    SymFuncExpansion,
    monomial_to_elementary,
    partitions_of,
    q_factorial,
    q_integer,
)
from .graphs import (
    Graph,
    earlier_neighbour_counts,
    is_natural_unit_interval,
    is_perfect_elimination_order,
    require_nuig,
)


def ascent_number(G: Graph, kappa: Sequence[int]) -> int:
    """Number of edges ij with i < j and kappa(i) < kappa(j)."""
    if len(kappa) != G.n:
        raise ValueError("colouring must assign a colour to every vertex")
    asc = 0
    for i, j in G.edges:
        if kappa[i - 1] == kappa[j - 1]:
            raise ValueError(f"colouring is not proper on edge {(i, j)}")
        if kappa[i - 1] < kappa[j - 1]:
            asc += 1
    return asc


def _lower_neighbour_table(G: Graph) -> tuple[np.ndarray, np.ndarray]:
    n = G.n
    nbr = np.zeros((n, max(n, 1)), dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    for v in G.vertices:
        lower = G.smaller_neighbours(v)
        deg[v - 1] = len(lower)
        nbr[v - 1, : len(lower)] = [u - 1 for u in lower]
    return nbr, deg


def colouring_ascent_distribution(G: Graph, mu: Sequence[int]) -> QPolynomial:
    """Sum of q^asc over proper colourings using colour i exactly mu_i times."""
    nbr, deg = _lower_neighbour_table(G)
    counts = _kernels.colouring_census(nbr, deg, np.array(mu, dtype=np.int64), len(G.edges))
    return QPolynomial(int(x) for x in counts)


def _check_q(G: Graph, with_q: bool) -> None:
    if with_q and not is_natural_unit_interval(G):
        raise ValueError(
            "the q-refined chromatic function is not guaranteed symmetric: "
            "with_q requires a natural unit interval graph"
        )


def monomial_expansion(G: Graph, with_q: bool = True) -> SymFuncExpansion:
    """``X_G`` in the monomial basis; coefficient of m_mu sums q^asc over colourings of type mu."""
    _check_q(G, with_q)
    terms = {}
    for mu in partitions_of(G.n):
        c = colouring_ascent_distribution(G, mu)
        terms[mu] = c if with_q else QPolynomial.constant(c(1))
    return SymFuncExpansion(MONOMIAL, G.n, terms)


def e_expansion(G: Graph, with_q: bool = True) -> SymFuncExpansion:
    return monomial_to_elementary(monomial_expansion(G, with_q))


def schur_expansion_via_tableaux(G: Graph) -> SymFuncExpansion:
    """Coefficient of s_lam is the sum of q^inv(T) over G-tableaux T of shape lam."""
    from .tableaux import enumerate_g_tableaux, inv

    require_nuig(G, "the G-tableau Schur expansion")
    terms = {}
    for lam in partitions_of(G.n):
        c = [0]
        for T in enumerate_g_tableaux(G, lam):
            k = inv(T, G)
            if k >= len(c):
                c += [0] * (k + 1 - len(c))
            c[k] += 1
        terms[lam] = QPolynomial(c)
    return SymFuncExpansion(SCHUR, G.n, terms)


def coefficient_en_formula(G: Graph) -> QPolynomial:
    """``[n]_q [b_2]_q ... [b_n]_q`` with b_k the number of smaller neighbours of k."""
    require_nuig(G, "the closed form for the e_n coefficient")
    if G.n == 0:
        return ONE
    out = q_integer(G.n)
    for k in range(2, G.n + 1):
        out = out * q_integer(len(G.smaller_neighbours(k)))
    return out


def coefficient_en_peo(G: Graph, order: Sequence[int]) -> int:
    """``n * b_2 * ... * b_n`` for a perfect elimination order of a chordal graph."""
    if not is_perfect_elimination_order(G, order):
        raise ValueError("order is not a perfect elimination order of G")
    out = G.n
    for b in earlier_neighbour_counts(G, order)[1:]:
        out *= b
    return out


def closed_form_kab(a: int, b: int) -> SymFuncExpansion:
    """e-expansion of two cliques of sizes a and b glued at one vertex."""
    if a < 1 or b < 1:
        raise ValueError("clique sizes must be positive")
    n = a + b - 1
    prefactor = q_factorial(a - 1) * q_factorial(b - 1)
    terms = {}
    for k in range(max(a, b), n + 1):
        lam = (k, n - k) if n - k else (k,)
        terms[lam] = prefactor * QPolynomial.monomial(n - k) * q_integer(2 * k - n)
    return SymFuncExpansion(ELEMENTARY, n, terms)


def coefficient_sum_by_length(f: SymFuncExpansion, j: int) -> QPolynomial:
    """Sum of the coefficients of e_lam over partitions lam with exactly j parts."""
    if f.basis != ELEMENTARY:
        raise ValueError(f"expected an elementary-basis expansion, got {f.basis!r}")
    out = ZERO
    for lam, c in f.terms.items():
        if len(lam) == j:
            out = out + c
    return out
