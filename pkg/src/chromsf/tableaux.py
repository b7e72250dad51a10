"""G-tableaux, inversions, the involution on hook tableaux, and the column-tableau/orientation bijection."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .algebra import Partition, QPolynomial, ZERO, partition
from .graphs import AcyclicOrientation, Graph, require_nuig


@dataclass(frozen=True)
class GTableau:
    """Filling of a Young diagram (English notation), rows listed top to bottom."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        partition(len(r) for r in rows)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    @cached_property
    def position(self) -> dict[int, tuple[int, int]]:
        return {x: (r, c) for r, row in enumerate(self.rows) for c, x in enumerate(row)}

    def row_of(self, x: int) -> int:
        return self.position[x][0]

    def is_hook(self) -> bool:
        return all(len(r) == 1 for r in self.rows[1:])

    def is_column(self) -> bool:
        return all(len(r) == 1 for r in self.rows)

    @property
    def corner(self) -> int:
        return self.rows[0][0]

    @property
    def arm(self) -> tuple[int, ...]:
        return self.rows[0][1:]

    @property
    def leg(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self.rows[1:])

    @property
    def column(self) -> tuple[int, ...]:
        """First column read top to bottom."""
        return tuple(r[0] for r in self.rows)

    @property
    def sign(self) -> int:
        """(-1)^(k-1) for a hook of shape k 1^(n-k)."""
        return -1 if (len(self.rows[0]) - 1) % 2 else 1

    def __str__(self) -> str:
        return format_tableau(self)


def hook_from_parts(corner: int, arm: Sequence[int], leg: Sequence[int]) -> GTableau:
    return GTableau(((corner, *arm),) + tuple((x,) for x in leg))


def column_tableau(entries: Sequence[int]) -> GTableau:
    return GTableau(tuple((x,) for x in entries))


def is_g_tableau(T: GTableau, G: Graph) -> bool:
    if sorted(T.position) != list(G.vertices):
        return False
    for r, row in enumerate(T.rows):
        for c, x in enumerate(row):
            if c > 0:
                left = row[c - 1]
                if not left < x or G.has_edge(left, x):
                    return False
            if r > 0:
                above = T.rows[r - 1][c]
                if not (above < x or G.has_edge(above, x)):
                    return False
    return True


def enumerate_g_tableaux(G: Graph, lam: Sequence[int]) -> list[GTableau]:
    """All fillings of shape lam satisfying the row (C1) and column (C2) rules, by row-major backtracking."""
    require_nuig(G, "G-tableaux")
    lam = partition(lam)
    if sum(lam) != G.n:
        raise ValueError(f"shape {lam} is not a partition of n={G.n}")
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    grid = [[0] * length for length in lam]
    out: list[GTableau] = []
    used = [False] * (G.n + 1)

    def rec(k: int):
        if k == len(cells):
            out.append(GTableau(tuple(tuple(row) for row in grid)))
            return
        r, c = cells[k]
        left = grid[r][c - 1] if c else 0
        above = grid[r - 1][c] if r else 0
        start = left + 1 if left else 1
        for x in range(start, G.n + 1):
            if used[x]:
                continue
            if left and G.has_edge(left, x):
                continue
            if above and not (above < x or G.has_edge(above, x)):
                continue
            used[x] = True
            grid[r][c] = x
            rec(k + 1)
            used[x] = False
        grid[r][c] = 0

    rec(0)
    return out


def inversions(T: GTableau, G: Graph) -> frozenset[tuple[int, int]]:
    """Pairs (i, j) with i < j, ij an edge, and i in a strictly lower row than j."""
    return frozenset((i, j) for i, j in G.edges if T.row_of(i) > T.row_of(j))


def inv(T: GTableau, G: Graph) -> int:
    return len(inversions(T, G))


# -- hook tableaux and the involution ------------------------------------------------

def hook_shapes(n: int) -> list[Partition]:
    return [(k,) + (1,) * (n - k) for k in range(1, n + 1)]


def hook_tableaux(G: Graph) -> list[GTableau]:
    out: list[GTableau] = []
    for lam in hook_shapes(G.n):
        out.extend(enumerate_g_tableaux(G, lam))
    return out


def _require_hook(T: GTableau) -> None:
    if not T.is_hook():
        raise ValueError(f"tableau of shape {T.shape} is not a hook")


def movable_entries(T: GTableau, G: Graph) -> frozenset[int]:
    """Arm entries, plus leg entries adjacent to nothing in a higher row."""
    _require_hook(T)
    out = set(T.arm)
    above = set(T.rows[0])
    for j in T.leg:
        if not any(G.has_edge(i, j) for i in above):
            out.add(j)
        above.add(j)
    return frozenset(out)


def _leg_to_arm(T: GTableau, j: int) -> GTableau:
    leg = [x for x in T.leg if x != j]
    arm = sorted(T.arm + (j,))
    return hook_from_parts(T.corner, arm, leg)


def _arm_to_leg(T: GTableau, j: int, G: Graph) -> GTableau:
    column = T.column
    i = 0
    while i < len(column) and column[i] < j and not G.has_edge(column[i], j):
        i += 1
    # j goes directly below column[i - 1]
    new_column = column[:i] + (j,) + column[i:]
    arm = [x for x in T.arm if x != j]
    return hook_from_parts(new_column[0], arm, new_column[1:])


def move_entry(T: GTableau, j: int, G: Graph) -> GTableau:
    """Move a movable entry between arm and leg, keeping the tableau valid and its inversions."""
    if j not in movable_entries(T, G):
        raise ValueError(f"entry {j} is not movable")
    moved = _leg_to_arm(T, j) if j in T.leg else _arm_to_leg(T, j, G)
    assert is_g_tableau(moved, G), f"moving {j} produced an invalid tableau"
    assert inversions(moved, G) == inversions(T, G), f"moving {j} changed the inversion set"
    return moved


def brute_force_moves(T: GTableau, j: int, G: Graph) -> list[GTableau]:
    """Every placement of j in the opposite limb that is a valid tableau with the same inversions."""
    _require_hook(T)
    target = inversions(T, G)
    out = []
    if j in T.leg:
        leg = [x for x in T.leg if x != j]
        for p in range(len(T.arm) + 1):
            arm = list(T.arm)
            arm.insert(p, j)
            cand = hook_from_parts(T.corner, arm, leg)
            if is_g_tableau(cand, G) and inversions(cand, G) == target:
                out.append(cand)
    elif j in T.arm:
        arm = [x for x in T.arm if x != j]
        for p in range(len(T.leg) + 1):
            leg = list(T.leg)
            leg.insert(p, j)
            cand = hook_from_parts(T.corner, arm, leg)
            if is_g_tableau(cand, G) and inversions(cand, G) == target:
                out.append(cand)
    return out


def phi(T: GTableau, G: Graph) -> GTableau:
    """Move the smallest movable entry; tableaux without movable entries are fixed."""
    movable = movable_entries(T, G)
    if not movable:
        return T
    return move_entry(T, min(movable), G)


def fixed_points(G: Graph) -> list[GTableau]:
    require_nuig(G, "fixed points of the hook involution")
    out = [T for T in hook_tableaux(G) if not movable_entries(T, G)]
    for T in out:
        assert T.is_column(), f"fixed point {T.rows} is not a single column"
    return out


def _inv_generating_function(tableaux, G: Graph, signed: bool = False) -> QPolynomial:
    c: list[int] = [0]
    for T in tableaux:
        k = inv(T, G)
        if k >= len(c):
            c += [0] * (k + 1 - len(c))
        c[k] += T.sign if signed else 1
    return QPolynomial(c)


def cn_via_fixed_points(G: Graph) -> QPolynomial:
    return _inv_generating_function(fixed_points(G), G)


def signed_hook_sum(G: Graph) -> QPolynomial:
    require_nuig(G, "the signed hook sum")
    return _inv_generating_function(hook_tableaux(G), G, signed=True)


def fixed_point_sum_by_top(G: Graph, j: int) -> QPolynomial:
    """Sum of q^inv over fixed points whose top entry is j."""
    return _inv_generating_function((T for T in fixed_points(G) if T.column[0] == j), G)


# -- column tableaux and acyclic orientations -------------------------------------------

def psi(T: GTableau, G: Graph) -> AcyclicOrientation:
    """Orient each edge from the entry placed lower in the column to the one placed higher."""
    if not T.is_column():
        raise ValueError(f"psi needs a single-column tableau, got shape {T.shape}")
    depth = {x: k for k, x in enumerate(T.column)}
    arcs = frozenset((i, j) if depth[i] > depth[j] else (j, i) for i, j in G.edges)
    return AcyclicOrientation(G, arcs)


def psi_inverse(O: AcyclicOrientation, G: Graph) -> GTableau:
    """Read off the column by repeatedly removing the smallest sink."""
    out = {v: set() for v in G.vertices}
    for t, h in O.arcs:
        out[t].add(h)
    alive = set(G.vertices)
    column = []
    while alive:
        j = min(v for v in alive if not (out[v] & alive))
        column.append(j)
        alive.remove(j)
    return column_tableau(column)


# -- serialisation ------------------------------------------------------------------

def tableau_to_json(T: GTableau) -> dict:
    return {"shape": list(T.shape), "rows": [list(r) for r in T.rows]}


def tableau_from_json(data: dict) -> GTableau:
    T = GTableau(tuple(tuple(r) for r in data["rows"]))
    if list(T.shape) != list(data["shape"]):
        raise ValueError("shape does not match rows")
    return T


def format_tableau(T: GTableau) -> str:
    width = max((len(str(x)) for x in T.position), default=1)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in T.rows)
