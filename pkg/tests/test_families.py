import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from copthrottle import families as fam
from copthrottle.graph import distances, domination_number, girth, is_cop_win, is_dominating, is_tree, mask_of, shortest_cycle


def _check_invariants(g):
    for v in range(g.n):
        assert not g.adj[v] >> v & 1
        for u in range(g.n):
            assert (g.adj[v] >> u & 1) == (g.adj[u] >> v & 1)
        assert g.adj[v] >> g.n == 0


def test_stellated_wheel_shape():
    for m in range(3, 11):
        g = fam.stellated_wheel(m)
        _check_invariants(g)
        assert g.n == 2 * m + 1
        assert g.degree(0) == m
        assert sorted(g.degree(v) for v in range(1, m + 1)) == [5] * m
        assert sorted(g.degree(v) for v in range(m + 1, 2 * m + 1)) == [2] * m
    assert domination_number(fam.stellated_wheel(10))[0] == 5
    with pytest.raises(ValueError):
        fam.stellated_wheel(2)


def test_full_binary_tree_shape():
    assert fam.full_binary_tree(1).n == 3
    t = fam.full_binary_tree(2)
    assert t.n == 7 and sum(t.degree(v) == 1 for v in range(7)) == 4
    t3 = fam.full_binary_tree(3)
    assert t3.n == 15 and distances(t3).eccentricity(0) == 3 and is_tree(t3)
    with pytest.raises(ValueError):
        fam.full_binary_tree(0)


def test_projective_planes():
    h = fam.projective_incidence(2)
    assert h.n == 14 and {h.degree(v) for v in range(14)} == {3} and girth(h) == 6
    assert nx.is_isomorphic(nx.Graph(h.edges()), nx.heawood_graph())
    g3 = fam.projective_incidence(3)
    assert g3.n == 26 and {g3.degree(v) for v in range(26)} == {4}
    assert girth(g3) == 6
    with pytest.raises(ValueError):
        fam.projective_incidence(4)


def test_meyniel_extremal_order():
    for n in (14, 15, 20, 25):
        g = fam.meyniel_extremal(n)
        assert g.n == n
    g = fam.meyniel_extremal(20)
    # the path of order k = 7 hangs from point 0
    assert g.n == 14 + 7 - 1
    with pytest.raises(ValueError):
        fam.meyniel_extremal(10)


def test_vertex_and_clique_sums():
    p7 = fam.vertex_sum(fam.path(4), 3, fam.path(4), 0)
    assert nx.is_isomorphic(nx.Graph(p7.edges()), nx.path_graph(7))
    g = fam.clique_sum(fam.complete(3), [0, 1], fam.cycle(3), [2, 1])
    assert g.n == 4 and g.num_edges == 5
    with pytest.raises(ValueError):
        fam.clique_sum(fam.path(3), [0, 2], fam.complete(3), [0, 1])  # not a clique
    with pytest.raises(ValueError):
        fam.clique_sum(fam.complete(3), [0], fam.complete(3), [0, 1])  # size mismatch
    with pytest.raises(ValueError):
        fam.clique_sum(fam.complete(2), [0, 1], fam.complete(3), [0, 1])  # summand too small


def test_h7_fixture():
    h = fam.h7()
    assert h.n == 7 and is_cop_win(h)
    assert is_dominating(h, mask_of([0, 6]))  # labels 1 and 7
    assert domination_number(h)[0] == 2
    for n in range(7, 12):
        hn = fam.max_capture_Hn(n)
        assert hn.n == n and is_cop_win(hn)
    with pytest.raises(ValueError):
        fam.max_capture_Hn(6)


def test_drawn_fixtures_shapes():
    assert is_tree(fam.figure2_tree()) and fam.figure2_tree().n == 10
    g3 = fam.figure3_unicyclic()
    assert g3.n == 11 and g3.num_edges == 11
    assert sorted(shortest_cycle(g3)) == [0, 1, 2, 3, 4, 5, 7]
    assert g3.adj[3] >> 8 & 1  # 9 hangs from 4
    assert [g3.degree(v) for v in (9, 10)] == [2, 1]  # 10 on the path, 11 a leaf
    t4 = fam.figure4_tree()
    assert is_tree(t4) and t4.n == 5


def test_grid_and_hypercube():
    for a in range(1, 5):
        for b in range(1, 5):
            g = fam.grid(a, b)
            assert g.n == a * b and g.num_edges == a * (b - 1) + b * (a - 1)
    for m in range(0, 6):
        q = fam.hypercube(m)
        assert q.n == 2 ** m and all(q.degree(v) == m for v in range(q.n))


def test_gadgets():
    up = fam.clique_sum_upper_gadget(3)
    assert up.n == 3 + 3 + 3
    low = fam.clique_sum_lower_gadget(3)
    assert low.n == 5 and low.degree(0) == 4


@given(st.integers(1, 40), st.integers(0, 10_000))
def test_random_tree(n, seed):
    t = fam.random_tree(n, seed)
    _check_invariants(t)
    assert t.n == n and is_tree(t)
    assert fam.random_tree(n, seed) == t


@given(st.integers(3, 40), st.integers(0, 10_000))
def test_random_unicyclic(n, seed):
    g = fam.random_unicyclic(n, seed)
    _check_invariants(g)
    assert g.n == n and g.num_edges == n
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(n))
    assert nx.is_connected(h) and len(nx.cycle_basis(h)) == 1


@given(st.integers(1, 25), st.integers(0, 10_000))
def test_random_subtree(n, seed):
    t = fam.random_tree(n, seed)
    s = fam.random_subtree(t, seed + 1)
    assert is_tree(s) and 1 <= s.n <= n


def test_family_spec_parser():
    assert fam.parse_family_spec("stellated_wheel m=10") == ("stellated_wheel", {"m": 10})
    assert fam.parse_family_spec(["path", "n=4"]) == ("path", {"n": 4})
    assert fam.parse_family_spec("random_tree n=5") == ("random_tree", {"n": 5, "seed": 0})
    assert fam.build_family("grid a=2 b=3").n == 6
    assert fam.build_family("figure4_tree").n == 5
    for bad in ("", "nosuch n=3", "path", "path m=3", "path n=x", "path n", "stellated_wheel m=2"):
        with pytest.raises(fam.FamilySpecError):
            fam.build_family(bad)
