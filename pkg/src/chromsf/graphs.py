"""Graphs on [n], natural unit interval graphs and classical invariants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .algebra import QPolynomial, Partition, conjugate

MAX_SUBSET_SEARCH = 16
MAX_ORIENTATION_VERTICES = 8


@dataclass(frozen=True)
class Graph:
    """Simple graph with vertex set 1..n; edges are stored as pairs (i, j) with i < j."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"bad edge {(i, j)} for n={self.n}")

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """``adj[v]`` is the neighbour bitmask of v (bit u set iff uv is an edge); index 0 unused."""
        a = [0] * (self.n + 1)
        for i, j in self.edges:
            a[i] |= 1 << j
            a[j] |= 1 << i
        return tuple(a)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(u for u in range(1, self.n + 1) if self.adj[v] >> u & 1)

    def closed_neighbourhood(self, v: int) -> frozenset[int]:
        return self.neighbours(v) | {v}

    def smaller_neighbours(self, v: int) -> list[int]:
        return [u for u in range(1, v) if self.adj[v] >> u & 1]

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, k: int) -> "Graph":
        """Subgraph induced on 1..k."""
        return Graph(k, frozenset(e for e in self.edges if e[1] <= k))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    es = set()
    for e in edges:
        i, j = (int(x) for x in e)
        if i == j:
            raise ValueError(f"loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"edge {(i, j)} has an endpoint outside 1..{n}")
        es.add((min(i, j), max(i, j)))
    return Graph(n, frozenset(es))


def validate_hessenberg(h: Sequence[int]) -> tuple[int, ...]:
    h = tuple(int(x) for x in h)
    n = len(h)
    for i, x in enumerate(h, start=1):
        if not i <= x <= n:
            raise ValueError(f"Hessenberg function needs {i} <= h({i}) <= {n}, got {x}")
        if i < n and x > h[i]:
            raise ValueError(f"Hessenberg function must be weakly increasing: {h}")
    return h


def graph_from_hessenberg(h: Sequence[int]) -> Graph:
    h = validate_hessenberg(h)
    return Graph(len(h), frozenset((i, j) for i in range(1, len(h) + 1) for j in range(i + 1, h[i - 1] + 1)))


def hessenberg_of(G: Graph) -> tuple[int, ...]:
    """h(i) = largest neighbour of i (or i); only a faithful encoding for NUIGs."""
    return tuple(max([i] + [j for j in G.neighbours(i) if j > i]) for i in G.vertices)


def parse_hessenberg(text: str) -> tuple[int, ...]:
    return validate_hessenberg(int(x) for x in text.replace(" ", "").split(",") if x)


def is_natural_unit_interval(G: Graph) -> bool:
    for i, k in G.edges:
        for j in range(i + 1, k):
            if not (G.has_edge(i, j) and G.has_edge(j, k)):
                return False
    return True


def require_nuig(G: Graph, what: str = "this operation") -> None:
    if not is_natural_unit_interval(G):
        raise ValueError(f"{what} requires a natural unit interval graph")


def hessenberg_functions(n: int) -> Iterator[tuple[int, ...]]:
    """All Hessenberg functions of length n in lexicographic order."""

    def rec(i: int, low: int, acc: list[int]):
        if i > n:
            yield tuple(acc)
            return
        for x in range(max(i, low), n + 1):
            acc.append(x)
            yield from rec(i + 1, x, acc)
            acc.pop()

    yield from rec(1, 1, [])


def enumerate_nuig(n: int) -> Iterator[Graph]:
    if n < 1:
        raise ValueError("n must be at least 1")
    for h in hessenberg_functions(n):
        yield graph_from_hessenberg(h)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


# -- named graphs -----------------------------------------------------------

def bowtie() -> Graph:
    return graph_from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


def claw() -> Graph:
    return graph_from_edges(4, [(1, 3), (2, 3), (3, 4)])


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def k_ab(a: int, b: int) -> Graph:
    """Cliques of sizes a and b glued at vertex a; n = a + b - 1."""
    if a < 1 or b < 1:
        raise ValueError("clique sizes must be positive")
    n = a + b - 1
    edges = set(itertools.combinations(range(1, a + 1), 2))
    edges |= set(itertools.combinations(range(a, n + 1), 2))
    return Graph(n, frozenset(edges))


def glued_triangles(k: int) -> Graph:
    """k triangles sharing vertex 1; triangle t uses vertices 1, 2t, 2t+1."""
    edges = []
    for t in range(1, k + 1):
        a, b = 2 * t, 2 * t + 1
        edges += [(1, a), (1, b), (a, b)]
    return graph_from_edges(2 * k + 1, edges)


# -- invariants ---------------------------------------------------------------

def _masks(G: Graph) -> list[int]:
    """0-based neighbour masks for subset search."""
    return [G.adj[v] >> 1 for v in G.vertices]


def _complement_masks(G: Graph) -> list[int]:
    full = (1 << G.n) - 1
    return [full & ~m & ~(1 << v) for v, m in enumerate(_masks(G))]


def _check_size(G: Graph) -> None:
    if G.n > MAX_SUBSET_SEARCH:
        raise ValueError(f"exhaustive subset search is bounded to n <= {MAX_SUBSET_SEARCH}")


def _max_independent(masks: list[int], S: int) -> int:
    if S == 0:
        return 0
    v = (S & -S).bit_length() - 1
    rest = S & ~(1 << v)
    take = 1 + _max_independent(masks, rest & ~masks[v])
    if not masks[v] & rest:
        return take
    return max(take, _max_independent(masks, rest))


def independence_number(G: Graph) -> int:
    _check_size(G)
    return _max_independent(_masks(G), (1 << G.n) - 1)


def clique_number(G: Graph) -> int:
    _check_size(G)
    return _max_independent(_complement_masks(G), (1 << G.n) - 1)


def _independent_subsets(masks: list[int], S: int) -> list[int]:
    out = [0]
    for v in range(len(masks)):
        if S >> v & 1:
            out += [I | 1 << v for I in out if not masks[v] & I]
    return out


def packing_profile(masks: list[int]) -> list[int]:
    """``out[k-1]`` = most vertices covered by k disjoint independent sets, k = 1..n."""
    n = len(masks)

    @lru_cache(maxsize=None)
    def best(k: int, S: int) -> int:
        if k == 0 or S == 0:
            return 0
        # the least vertex v of S is either uncovered or in one of the sets, say the first
        v = (S & -S).bit_length() - 1
        rest = S & ~(1 << v)
        out = best(k, rest)
        for I in _independent_subsets(masks, rest & ~masks[v]):
            I |= 1 << v
            out = max(out, bin(I).count("1") + best(k - 1, S & ~I))
        return out

    return [best(k, (1 << n) - 1) for k in range(1, n + 1)]


def alpha_profile(G: Graph) -> list[int]:
    """[alpha_1(G), ..., alpha_n(G)]."""
    _check_size(G)
    return packing_profile(_masks(G))


def omega_profile(G: Graph) -> list[int]:
    """[omega_1(G), ..., omega_n(G)]."""
    _check_size(G)
    return packing_profile(_complement_masks(G))


def alpha_k(G: Graph, k: int) -> int:
    """Most vertices covered by k disjoint independent sets."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return alpha_profile(G)[k - 1] if k <= G.n else G.n


def omega_k(G: Graph, k: int) -> int:
    """Most vertices covered by k disjoint cliques."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return omega_profile(G)[k - 1] if k <= G.n else G.n


def is_clique(G: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(G.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


def equivalence_classes(G: Graph) -> list[frozenset[int]]:
    """Classes of vertices sharing a closed neighbourhood, ordered by least element."""
    classes: dict[int, set[int]] = {}
    for v in G.vertices:
        classes.setdefault(G.adj[v] | 1 << v, set()).add(v)
    out = sorted((frozenset(c) for c in classes.values()), key=min)
    for c in out:
        assert is_clique(G, c), f"equivalence class {sorted(c)} is not a clique"
    return out


def greedy_colouring_kappa(G: Graph) -> tuple[int, ...]:
    """Colour 1..n in order, always with the smallest colour unused by smaller neighbours."""
    require_nuig(G, "the greedy colouring kappa_G")
    kappa: list[int] = []
    for j in G.vertices:
        used = {kappa[i - 1] for i in G.smaller_neighbours(j)}
        c = 1
        while c in used:
            c += 1
        kappa.append(c)
    return tuple(kappa)


def type_of(kappa: Sequence[int]) -> tuple[int, ...]:
    """Weak composition counting how often each colour 1..max is used."""
    if not kappa:
        return ()
    counts = [0] * max(kappa)
    for c in kappa:
        counts[c - 1] += 1
    return tuple(counts)


def mu_g(G: Graph) -> Partition:
    kappa = greedy_colouring_kappa(G)
    mu = type_of(kappa)
    assert all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)), f"type {mu} is not a partition"
    assert len(mu) == clique_number(G), "kappa_G must use exactly omega(G) colours"
    return mu


def lambda_g(G: Graph) -> Partition:
    return conjugate(mu_g(G))


def is_proper_colouring(G: Graph, kappa: Sequence[int]) -> bool:
    return len(kappa) == G.n and all(kappa[i - 1] != kappa[j - 1] for i, j in G.edges)


def count_proper_colourings(G: Graph, t: int) -> int:
    """Brute-force count of proper colourings with colours 1..t."""
    colours = [0] * (G.n + 1)

    def rec(v: int) -> int:
        if v > G.n:
            return 1
        total = 0
        for c in range(1, t + 1):
            if all(colours[u] != c for u in G.smaller_neighbours(v)):
                colours[v] = c
                total += rec(v + 1)
        colours[v] = 0
        return total

    return rec(1)


# -- perfect elimination orders ------------------------------------------------

def is_perfect_elimination_order(G: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(G.vertices):
        return False
    seen: set[int] = set()
    for v in order:
        if not is_clique(G, G.neighbours(v) & seen):
            return False
        seen.add(v)
    return True


def perfect_elimination_order(G: Graph) -> list[int] | None:
    """An order whose earlier neighbours always form a clique, or None if G is not chordal."""
    identity = list(G.vertices)
    if is_natural_unit_interval(G):
        return identity
    # maximum cardinality search; its visiting order has the required property
    weight = {v: 0 for v in G.vertices}
    order: list[int] = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        del weight[v]
        order.append(v)
        for u in G.neighbours(v):
            if u in weight:
                weight[u] += 1
    return order if is_perfect_elimination_order(G, order) else None


def earlier_neighbour_counts(G: Graph, order: Sequence[int]) -> list[int]:
    """b_k = number of neighbours of order[k] appearing before it, k = 0..n-1."""
    pos = {v: k for k, v in enumerate(order)}
    return [sum(1 for u in G.neighbours(v) if pos[u] < pos[v]) for v in order]


def chromatic_polynomial_peo(G: Graph, order: Sequence[int]) -> list[int]:
    """Coefficients (ascending in t) of t * prod_{k>=2} (t - b_k)."""
    if not is_perfect_elimination_order(G, order):
        raise ValueError("order is not a perfect elimination order of G")
    if G.n == 0:
        return [1]
    poly = QPolynomial((0, 1))
    for b in earlier_neighbour_counts(G, order)[1:]:
        poly = poly * QPolynomial((-b, 1))
    return list(poly.coeffs)


def evaluate_int_poly(coeffs: Sequence[int], t: int) -> int:
    return sum(c * t**k for k, c in enumerate(coeffs))


# -- acyclic orientations --------------------------------------------------------

@dataclass(frozen=True)
class AcyclicOrientation:
    """Orientation of every edge of ``graph``; ``arcs`` holds (tail, head) pairs."""

    graph: Graph
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        undirected = frozenset((min(a), max(a)) for a in self.arcs)
        if undirected != self.graph.edges or len(self.arcs) != len(self.graph.edges):
            raise ValueError("arcs must orient each edge exactly once")
        if not _is_acyclic(self.graph.n, self.arcs):
            raise ValueError("orientation has a directed cycle")

    def out_neighbours(self, v: int) -> set[int]:
        return {h for t, h in self.arcs if t == v}

    def sinks(self) -> frozenset[int]:
        tails = {t for t, _ in self.arcs}
        return frozenset(v for v in self.graph.vertices if v not in tails)

    def ascents(self) -> frozenset[tuple[int, int]]:
        return frozenset((t, h) for t, h in self.arcs if t < h)

    @property
    def asc(self) -> int:
        return len(self.ascents())


def _is_acyclic(n: int, arcs: Iterable[tuple[int, int]]) -> bool:
    out = [0] * (n + 1)
    for t, h in arcs:
        out[t] |= 1 << h
    alive = set(range(1, n + 1))
    while alive:
        sinks = [v for v in alive if not any(out[v] >> u & 1 for u in alive)]
        if not sinks:
            return False
        alive.difference_update(sinks)
    return True


def acyclic_orientations(G: Graph) -> Iterator[AcyclicOrientation]:
    """Every acyclic orientation, by filtering all 2^|E| direction vectors."""
    if G.n > MAX_ORIENTATION_VERTICES:
        raise ValueError(f"orientation enumeration is bounded to n <= {MAX_ORIENTATION_VERTICES}")
    edges = G.sorted_edges()
    for mask in range(1 << len(edges)):
        arcs = frozenset((i, j) if mask >> k & 1 else (j, i) for k, (i, j) in enumerate(edges))
        if _is_acyclic(G.n, arcs):
            yield AcyclicOrientation(G, arcs)


def sinks(O: AcyclicOrientation) -> frozenset[int]:
    return O.sinks()


def ascents(O: AcyclicOrientation) -> frozenset[tuple[int, int]]:
    return O.ascents()


def orientation_census(G: Graph) -> np.ndarray:
    """``table[j, a]`` = number of acyclic orientations with j sinks and a ascents."""
    if G.n > MAX_ORIENTATION_VERTICES:
        raise ValueError(f"orientation enumeration is bounded to n <= {MAX_ORIENTATION_VERTICES}")
    edges = G.sorted_edges()
    tails = np.array([i - 1 for i, _ in edges], dtype=np.int64)
    heads = np.array([j - 1 for _, j in edges], dtype=np.int64)
    return _kernels.orientation_census(G.n, tails, heads)


def sink_generating_function(G: Graph, j: int) -> QPolynomial:
    """Sum of q^asc(O) over acyclic orientations O with exactly j sinks."""
    table = orientation_census(G)
    if not 0 <= j <= G.n:
        return QPolynomial()
    return QPolynomial(int(x) for x in table[j])


def count_acyclic_orientations(G: Graph) -> int:
    return int(orientation_census(G).sum())


# -- serialisation -----------------------------------------------------------------

def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}


def graph_from_json(data: dict) -> Graph:
    return graph_from_edges(int(data["n"]), data["edges"])


def parse_edge_list(text: str) -> Graph:
    """First line holds n, every further nonblank line one edge "i j"."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list file")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ValueError(f"expected two vertices per edge line, got {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise ValueError(f"malformed edge list: {exc}") from exc
    return graph_from_edges(n, edges)


def format_edge_list(G: Graph) -> str:
    return "\n".join([str(G.n)] + [f"{i} {j}" for i, j in G.sorted_edges()]) + "\n"


def graph_identifier(G: Graph) -> str:
    """Hessenberg string for NUIGs, otherwise an edge list like ``4:1-3,2-3,3-4``."""
    if is_natural_unit_interval(G):
        return ",".join(map(str, hessenberg_of(G)))
    return f"{G.n}:" + ",".join(f"{i}-{j}" for i, j in G.sorted_edges())
