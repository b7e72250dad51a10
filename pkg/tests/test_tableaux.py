import itertools
from collections import Counter

import pytest

from chromsf.algebra import QPolynomial, q_factorial, q_integer
from chromsf.csf import coefficient_en_formula, e_expansion
from chromsf.graphs import (
    AcyclicOrientation,
    bowtie,
    claw,
    complete_graph,
    empty_graph,
    enumerate_nuig,
    graph_from_edges,
    graph_from_hessenberg,
    sink_generating_function,
)
from chromsf.tableaux import (
    GTableau,
    brute_force_moves,
    cn_via_fixed_points,
    column_tableau,
    enumerate_g_tableaux,
    fixed_point_sum_by_top,
    fixed_points,
    format_tableau,
    hook_from_parts,
    hook_tableaux,
    inv,
    inversions,
    is_g_tableau,
    move_entry,
    movable_entries,
    phi,
    psi,
    psi_inverse,
    signed_hook_sum,
    tableau_from_json,
    tableau_to_json,
)

CHORDED_PATH = graph_from_hessenberg((2, 4, 4, 5, 5))
HOOK_T = hook_from_parts(1, [3, 5], [2, 4])


def nuigs_up_to(n):
    for k in range(1, n + 1):
        yield from enumerate_nuig(k)


def connected(G):
    return all(G.has_edge(k - 1, k) for k in range(2, G.n + 1))


# -- basic structure -------------------------------------------------------------

def test_tableau_shape_and_limbs():
    assert HOOK_T.shape == (3, 1, 1)
    assert HOOK_T.corner == 1
    assert HOOK_T.arm == (3, 5) and HOOK_T.leg == (2, 4)
    assert HOOK_T.sign == 1
    assert HOOK_T.is_hook() and not HOOK_T.is_column()
    with pytest.raises(ValueError):
        GTableau(((1,), (2, 3)))


def test_bowtie_two_column_tableaux():
    found = enumerate_g_tableaux(bowtie(), (2, 2, 1))
    expected = {
        ((1, 4), (2, 5), (3,)): {(3, 4), (3, 5)},
        ((1, 5), (2, 4), (3,)): {(3, 4), (3, 5), (4, 5)},
        ((2, 4), (1, 5), (3,)): {(1, 2), (3, 4), (3, 5)},
        ((2, 5), (1, 4), (3,)): {(1, 2), (3, 4), (3, 5), (4, 5)},
    }
    assert {T.rows: set(inversions(T, bowtie())) for T in found} == expected


def test_complete_graph_tableaux():
    for n in range(1, 5):
        cols = enumerate_g_tableaux(complete_graph(n), (1,) * n)
        assert len(cols) == len(list(itertools.permutations(range(n))))
        if n >= 2:
            assert enumerate_g_tableaux(complete_graph(n), (n,)) == []


def test_empty_graph_tableaux_have_no_inversions():
    G = empty_graph(4)
    for lam in ((4,), (2, 2), (1, 1, 1, 1)):
        for T in enumerate_g_tableaux(G, lam):
            assert inversions(T, G) == frozenset()


def test_enumeration_requires_nuig_and_size():
    with pytest.raises(ValueError):
        enumerate_g_tableaux(claw(), (2, 2))
    with pytest.raises(ValueError):
        enumerate_g_tableaux(bowtie(), (2, 2))


@pytest.mark.parametrize("G", list(nuigs_up_to(4)), ids=str)
def test_enumeration_matches_brute_force(G):
    for lam in [(G.n,), (1,) * G.n] + ([(2,) + (1,) * (G.n - 2)] if G.n >= 2 else []):
        cells = [(r, c) for r, k in enumerate(lam) for c in range(k)]
        brute = set()
        for perm in itertools.permutations(G.vertices):
            rows = [[] for _ in lam]
            for (r, _), x in zip(cells, perm):
                rows[r].append(x)
            T = GTableau(tuple(tuple(r) for r in rows))
            if is_g_tableau(T, G):
                brute.add(T)
        assert set(enumerate_g_tableaux(G, lam)) == brute


# -- movable entries and the involution ----------------------------------------

def test_chorded_path_moves():
    G, T = CHORDED_PATH, HOOK_T
    assert inversions(T, G) == {(2, 3), (4, 5)}
    assert movable_entries(T, G) == {3, 5}
    assert move_entry(T, 3, G).rows == ((1, 5), (3,), (2,), (4,))
    assert move_entry(T, 5, G).rows == ((1, 3), (2,), (5,), (4,))
    assert phi(T, G) == move_entry(T, 3, G)
    with pytest.raises(ValueError):
        move_entry(T, 2, G)


def test_column_of_complete_graph_is_fixed():
    G = complete_graph(4)
    T = column_tableau((3, 1, 4, 2))
    assert movable_entries(T, G) == frozenset()
    assert phi(T, G) == T


def test_empty_graph_column_has_every_leg_entry_movable():
    G = empty_graph(4)
    T = column_tableau((1, 2, 3, 4))
    assert movable_entries(T, G) == {2, 3, 4}
    for j in (2, 3, 4):
        assert inversions(move_entry(T, j, G), G) == frozenset()


@pytest.mark.parametrize("n", range(1, 6))
def test_involution_properties(n):
    for G in enumerate_nuig(n):
        for T in hook_tableaux(G):
            U = phi(T, G)
            assert phi(U, G) == T
            assert inversions(U, G) == inversions(T, G)
            if U == T:
                assert T.is_column()
            else:
                assert U.sign == -T.sign
                assert abs(len(U.rows[0]) - len(T.rows[0])) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_moves_round_trip_and_are_unique(n):
    for G in enumerate_nuig(n):
        for T in hook_tableaux(G):
            movable = movable_entries(T, G)
            for j in set(T.arm) | set(T.leg):
                targets = brute_force_moves(T, j, G)
                if j in movable:
                    U = move_entry(T, j, G)
                    assert targets == [U]
                    assert move_entry(U, j, G) == T
                else:
                    assert targets == []


# -- fixed points ----------------------------------------------------------------

def test_bowtie_fixed_point_sum():
    G = bowtie()
    expected = q_integer(5) * q_integer(2) * q_integer(2)
    assert cn_via_fixed_points(G) == expected
    assert signed_hook_sum(G) == expected


def test_complete_graph_fixed_points():
    for n in range(1, 5):
        assert cn_via_fixed_points(complete_graph(n)) == q_factorial(n)


def test_isolated_vertex_has_no_fixed_points():
    G = graph_from_hessenberg((2, 2, 3))
    assert fixed_points(G) == []
    assert cn_via_fixed_points(G).is_zero()
    assert signed_hook_sum(empty_graph(2)).is_zero()


def test_signed_hook_sum_small():
    assert signed_hook_sum(complete_graph(2)) == QPolynomial([1, 1])


@pytest.mark.parametrize("n", range(1, 7))
def test_fixed_points_and_signed_sum_match_formula(n):
    for G in enumerate_nuig(n):
        c = coefficient_en_formula(G)
        assert cn_via_fixed_points(G) == c
        assert signed_hook_sum(G) == c


@pytest.mark.parametrize("n", range(1, 7))
def test_fixed_point_sum_refined_by_top_entry(n):
    for G in enumerate_nuig(n):
        if not connected(G):
            continue
        rest = QPolynomial([1])
        for k in range(2, n + 1):
            rest = rest * q_integer(len(G.smaller_neighbours(k)))
        for j in G.vertices:
            assert fixed_point_sum_by_top(G, j) == QPolynomial.monomial(j - 1) * rest


def insert_top_entry(Tp, G):
    """Fixed points on n vertices built from one on n-1 vertices by the three insertion rules."""
    n = G.n
    col = list(Tp.column)
    nbrs = [k for k, x in enumerate(col) if G.has_edge(x, n)]
    out = {column_tableau(col + [n])}
    for k in nbrs[1:]:
        out.add(column_tableau(col[:k] + [n] + col[k:]))
    if col and G.has_edge(col[0], n):
        out.add(column_tableau([n] + col))
    return out


@pytest.mark.parametrize("n", range(2, 7))
def test_fixed_points_built_by_insertion(n):
    for G in enumerate_nuig(n):
        if not connected(G):
            continue
        Gp = G.induced(n - 1)
        built = set()
        for Tp in fixed_points(Gp):
            built |= insert_top_entry(Tp, G)
        assert built == set(fixed_points(G))


# -- psi -------------------------------------------------------------------------

def test_psi_on_single_edge():
    G = complete_graph(2)
    O = psi(column_tableau((1, 2)), G)
    assert O.arcs == {(2, 1)}
    assert O.sinks() == {1}
    assert O.ascents() == frozenset()


def test_psi_triangle_distribution():
    G = complete_graph(3)
    cols = enumerate_g_tableaux(G, (1, 1, 1))
    assert Counter(inv(T, G) for T in cols) == Counter({0: 1, 1: 2, 2: 2, 3: 1})
    assert Counter(psi(T, G).asc for T in cols) == Counter({0: 1, 1: 2, 2: 2, 3: 1})


def test_psi_rejects_non_column():
    with pytest.raises(ValueError):
        psi(HOOK_T, CHORDED_PATH)


@pytest.mark.parametrize("n", range(1, 6))
def test_psi_bijection(n):
    from chromsf.graphs import count_acyclic_orientations

    for G in enumerate_nuig(n):
        cols = enumerate_g_tableaux(G, (1,) * n)
        images = set()
        for T in cols:
            O = psi(T, G)
            assert isinstance(O, AcyclicOrientation)
            assert O.ascents() == inversions(T, G)
            assert O.sinks() == {T.column[0]} | movable_entries(T, G)
            assert min(O.sinks()) == T.column[0]
            assert psi_inverse(O, G) == T
            images.add(O)
        assert len(images) == len(cols) == count_acyclic_orientations(G)
        fixed = fixed_points(G)
        assert all(len(psi(T, G).sinks()) == 1 for T in fixed)
        assert cn_via_fixed_points(G) == sink_generating_function(G, 1)


# -- serialisation ----------------------------------------------------------------

def test_tableau_json_and_text():
    assert tableau_from_json(tableau_to_json(HOOK_T)) == HOOK_T
    assert format_tableau(HOOK_T) == "1 3 5\n2\n4"
    with pytest.raises(ValueError):
        tableau_from_json({"shape": [2, 2], "rows": [[1, 2], [3]]})
