"""Brute-force reference computations used only by the tests.

Nothing here imports the code paths it is used to check: symmetric functions
are expanded as explicit polynomials in n variables, colourings are
enumerated over all of [n]^n, and linear systems are solved by plain
Gaussian elimination over the rationals.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction


def partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def poly_mul(a: Counter, b: Counter) -> Counter:
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def elementary_poly(k: int, nvars: int) -> Counter:
    out = Counter()
    for S in itertools.combinations(range(nvars), k):
        out[tuple(1 if i in S else 0 for i in range(nvars))] += 1
    return out


def e_lambda_poly(lam, nvars: int) -> Counter:
    out = Counter({(0,) * nvars: 1})
    for k in lam:
        out = poly_mul(out, elementary_poly(k, nvars))
    return out


def monomial_coeffs(poly: Counter, n: int) -> dict:
    """Read off m_mu coefficients (mu |- n) as coefficients of x^mu."""
    return {mu: poly.get(tuple(mu) + (0,) * (n - len(mu)), 0) for mu in partitions(n)}


def e_to_m_matrix(n: int) -> dict:
    return {lam: monomial_coeffs(e_lambda_poly(lam, n), n) for lam in partitions(n)}


def brute_force_monomial(n: int, edges, with_q: bool = True) -> dict:
    """m_mu coefficient as {ascents: count}, summing over all maps [n] -> [n]."""
    edges = [tuple(sorted(e)) for e in edges]
    out = {mu: Counter() for mu in partitions(n)}
    for kappa in itertools.product(range(1, n + 1), repeat=n):
        if any(kappa[i - 1] == kappa[j - 1] for i, j in edges):
            continue
        counts = tuple(kappa.count(c) for c in range(1, n + 1))
        mu = tuple(x for x in counts if x)
        # only colourings whose exponent vector is itself a partition
        if any(counts[i] < counts[i + 1] for i in range(n - 1)):
            continue
        asc = sum(1 for i, j in edges if kappa[i - 1] < kappa[j - 1]) if with_q else 0
        out[mu][asc] += 1
    return {mu: dict(c) for mu, c in out.items() if c}


def solve(matrix_rows, rhs):
    """Solve A x = b by Gauss-Jordan elimination over Fractions; A is square."""
    n = len(rhs)
    A = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix_rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[-1] for row in A]


def brute_force_e_expansion(n: int, edges, with_q: bool = True) -> dict:
    """{lam: {q_power: coeff}} with zero coefficients dropped."""
    mono = brute_force_monomial(n, edges, with_q)
    lams = list(partitions(n))
    mus = list(partitions(n))
    M = e_to_m_matrix(n)
    # X = sum_lam c_lam e_lam  =>  a_mu = sum_lam c_lam M[lam][mu]
    rows = [[M[lam][mu] for lam in lams] for mu in mus]
    top = max((max(c) for c in mono.values()), default=0)
    out = {}
    for k in range(top + 1):
        rhs = [mono.get(mu, {}).get(k, 0) for mu in mus]
        if not any(rhs):
            continue
        sol = solve(rows, rhs)
        for lam, x in zip(lams, sol):
            assert x.denominator == 1
            if x:
                out.setdefault(lam, {})[k] = int(x)
    return out


def ssyt_count(shape, content) -> int:
    """Kostka number by filling cells in row-major order."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    remaining = list(content)
    grid = {}

    def rec(k):
        if k == len(cells):
            return 1
        r, c = cells[k]
        total = 0
        for v in range(len(remaining)):
            if not remaining[v]:
                continue
            if c and grid[(r, c - 1)] > v:
                continue
            if r and grid[(r - 1, c)] >= v:
                continue
            grid[(r, c)] = v
            remaining[v] -= 1
            total += rec(k + 1)
            remaining[v] += 1
        return total

    return rec(0)


def count_colourings(n: int, edges, t: int) -> int:
    return sum(
        1
        for kappa in itertools.product(range(t), repeat=n)
        if all(kappa[i - 1] != kappa[j - 1] for i, j in edges)
    )


def orientations_by_sinks(n: int, edges) -> Counter:
    """{(sinks, ascents): count} by checking every direction vector with DFS."""
    edges = sorted(tuple(sorted(e)) for e in edges)
    out = Counter()
    for dirs in itertools.product((0, 1), repeat=len(edges)):
        succ = {v: [] for v in range(1, n + 1)}
        asc = 0
        for (i, j), d in zip(edges, dirs):
            if d:
                succ[i].append(j)
                asc += 1
            else:
                succ[j].append(i)
        state = {}

        def has_cycle(v):
            state[v] = 1
            for w in succ[v]:
                if state.get(w) == 1 or (w not in state and has_cycle(w)):
                    return True
            state[v] = 2
            return False

        if any(v not in state and has_cycle(v) for v in range(1, n + 1)):
            continue
        sinks = sum(1 for v in range(1, n + 1) if not succ[v])
        out[(sinks, asc)] += 1
    return out
