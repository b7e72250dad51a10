"""Enumeration kernels: colouring census and acyclic-orientation census.

Both kernels are written in the numba-compatible subset of Python.  They are
compiled with ``numba.njit`` unless numba is missing or the environment
variable ``CHROMSF_DISABLE_NUMBA`` is set to a true value, in which case the
identical source runs as plain Python.  The uncompiled versions stay available
as ``*_py`` for benchmarking and cross-checking.
"""

import os

import numpy as np

_FLAG = "CHROMSF_DISABLE_NUMBA"

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is an optional accelerator
    njit = None

USE_NUMBA = njit is not None and os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")


def colouring_census_py(nbr, deg, mu, n_edges):
    """Proper colourings of type ``mu`` tallied by ascent number.

    ``nbr[v, :deg[v]]`` lists the smaller neighbours of vertex ``v``
    (0-based).  Colour ``c`` must be used exactly ``mu[c]`` times.  Returns
    ``out`` with ``out[a]`` = number of such colourings with ``a`` ascents.
    """
    n = nbr.shape[0]
    ncol = mu.shape[0]
    out = np.zeros(n_edges + 1, dtype=np.int64)
    if n == 0:
        out[0] = 1
        return out
    remaining = mu.copy()
    colour = np.full(n, -1, dtype=np.int64)
    asc = np.zeros(n + 1, dtype=np.int64)
    v = 0
    while v >= 0:
        c = colour[v]
        if c >= 0:
            remaining[c] += 1
        c += 1
        found = False
        gain = 0
        while c < ncol:
            if remaining[c] > 0:
                ok = True
                gain = 0
                for t in range(deg[v]):
                    cu = colour[nbr[v, t]]
                    if cu == c:
                        ok = False
                        break
                    if cu < c:
                        gain += 1
                if ok:
                    found = True
                    break
            c += 1
        if not found:
            colour[v] = -1
            v -= 1
            continue
        colour[v] = c
        remaining[c] -= 1
        asc[v + 1] = asc[v] + gain
        if v == n - 1:
            out[asc[n]] += 1
        else:
            v += 1
    return out


def orientation_census_py(n, tails, heads):
    """Acyclic orientations tallied by (number of sinks, number of ascents).

    Edge ``k`` joins ``tails[k] < heads[k]`` (0-based).  Bit ``k`` of the
    direction mask set means the arc ``tails[k] -> heads[k]`` (an ascent).
    Every one of the ``2**m`` direction vectors is tested for cycles by
    repeatedly peeling sinks.
    """
    m = tails.shape[0]
    out = np.zeros((n + 1, m + 1), dtype=np.int64)
    outnb = np.zeros(n, dtype=np.int64)
    full = (1 << n) - 1
    for mask in range(1 << m):
        for v in range(n):
            outnb[v] = 0
        nasc = 0
        for k in range(m):
            if (mask >> k) & 1:
                outnb[tails[k]] |= 1 << heads[k]
                nasc += 1
            else:
                outnb[heads[k]] |= 1 << tails[k]
        alive = full
        acyclic = True
        while alive:
            progressed = False
            for v in range(n):
                if (alive >> v) & 1 and (outnb[v] & alive) == 0:
                    alive &= ~(1 << v)
                    progressed = True
            if not progressed:
                acyclic = False
                break
        if acyclic:
            sinks = 0
            for v in range(n):
                if outnb[v] == 0:
                    sinks += 1
            out[sinks, nasc] += 1
    return out


if USE_NUMBA:
    colouring_census = njit(cache=True)(colouring_census_py)
    orientation_census = njit(cache=True)(orientation_census_py)
else:
    colouring_census = colouring_census_py
    orientation_census = orientation_census_py
