import math

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from copthrottle.families import complete, cycle, path, petersen, projective_incidence, star
from copthrottle.graph import (
    INF,
    Graph,
    Graph6Error,
    components_avoiding,
    dismantling_order,
    distances,
    domination_number,
    encode_graph6,
    format_edge_list,
    girth,
    is_cop_win,
    is_corner_sequence,
    is_dominating,
    k_center,
    k_radius,
    mask_of,
    parse_edge_list,
    parse_graph6,
    shortest_cycle,
)

import oracles
from conftest import graphs, trees


# ---------------------------------------------------------------- graph6

def test_graph6_star():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert set(g.edges()) == {(0, 4), (1, 4), (2, 4), (3, 4)}
    assert oracles.decode_graph6("D?{") == (5, {(0, 4), (1, 4), (2, 4), (3, 4)})


def test_graph6_small_cases():
    assert parse_graph6("A_").edges() == [(0, 1)]
    k1 = parse_graph6("@")
    assert k1.n == 1 and k1.edges() == []
    assert parse_graph6(">>graph6<<A_").edges() == [(0, 1)]


def test_graph6_long_form_roundtrip():
    g = path(70)
    s = encode_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g
    n, edges = oracles.decode_graph6(s)
    assert n == 70 and edges == set(g.edges())


@pytest.mark.parametrize("text, offset", [
    ("D?{x", 3),      # trailing byte
    ("D?", 2),        # truncated
    ("D?\x07", 2),    # non-printable
    ("", 0),
    ("A`", 1),        # nonzero padding bits
])
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert str(offset) in str(info.value)


@given(graphs(max_n=12))
def test_graph6_roundtrip_and_independent_decoder(g):
    s = encode_graph6(g)
    assert parse_graph6(s) == g
    assert encode_graph6(parse_graph6(s)) == s
    n, edges = oracles.decode_graph6(s)
    assert n == g.n and edges == set(g.edges())
    h = nx.from_graph6_bytes(s.encode())
    assert {tuple(sorted(e)) for e in h.edges()} == set(g.edges())


def test_edge_list_roundtrip():
    g = petersen()
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_edge_list("0 1\n1 2\n").n == 3
    assert parse_edge_list("4\n0 1\n").n == 4


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))


# ---------------------------------------------------------------- distances

def test_path_distances():
    d = distances(path(5))
    assert d[0, 4] == 4
    assert d.eccentricity(2) == 2
    assert d.radius() == 2


def test_cycle_and_disconnected_distances():
    d = distances(cycle(6))
    assert d[0, 3] == 3 and d.radius() == 3
    d2 = distances(Graph(2, (0, 0)))
    assert d2[0, 1] == INF
    assert d2.radius() == INF


@given(graphs(max_n=9))
def test_distances_match_bfs_oracle(g):
    d = distances(g)
    ref = oracles.dist_matrix(oracles.adjacency(g))
    for u in range(g.n):
        assert d[u, u] == 0
        for v in range(g.n):
            assert d[u, v] == ref[u][v] == d[v, u]


@given(graphs(max_n=8, connected=True))
def test_triangle_inequality(g):
    d = distances(g)
    for a in range(g.n):
        for b in range(g.n):
            for c in range(g.n):
                assert d[a, c] <= d[a, b] + d[b, c]


# ---------------------------------------------------------------- girth

def test_girth_examples():
    assert girth(cycle(5)) == 5
    assert girth(path(6)) == INF
    assert girth(projective_incidence(2)) == 6
    assert girth(petersen()) == 5


@given(graphs(max_n=9))
def test_girth_matches_oracle(g):
    ref = oracles.girth(oracles.adjacency(g))
    assert girth(g) == ref
    cyc = shortest_cycle(g)
    if ref == INF:
        assert cyc is None
    else:
        assert len(cyc) == ref
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert g.adj[a] >> b & 1


# ---------------------------------------------------------------- domination and k-radius

def test_domination_examples():
    for n in range(1, 7):
        assert domination_number(complete(n))[0] == 1
    assert domination_number(path(7))[0] == 3


@given(graphs(max_n=8))
def test_domination_matches_oracle(g):
    gamma, w = domination_number(g)
    assert gamma == oracles.domination(oracles.adjacency(g))
    assert len(w) == gamma and is_dominating(g, mask_of(w))


def test_k_radius_examples():
    assert k_radius(path(9), 1) == 4
    assert k_radius(cycle(8), 2) == 2
    assert k_radius(Graph(3, (0, 0, 0)), 2) == INF
    with pytest.raises(ValueError):
        k_radius(path(3), 0)
    with pytest.raises(ValueError):
        k_radius(path(3), 4)


@given(graphs(max_n=7), st.data())
def test_k_radius_matches_oracle(g, data):
    k = data.draw(st.integers(1, g.n))
    rad, witness = k_center(g, k)
    assert rad == oracles.k_radius(oracles.adjacency(g), k)
    if rad < INF:
        assert distances(g).max_to_set(mask_of(witness)) == rad


@given(graphs(max_n=8))
def test_k_radius_properties(g):
    rads = [k_radius(g, k) for k in range(1, g.n + 1)]
    assert rads[0] == distances(g).radius()
    assert all(a >= b for a, b in zip(rads, rads[1:]))
    assert rads[-1] == 0


# ---------------------------------------------------------------- components and cop-win

def test_components_avoiding_examples():
    assert components_avoiding(path(5), 1 << 2) == [0b11, 0b11000]
    assert components_avoiding(cycle(6), 0) == [0b111111]
    assert components_avoiding(cycle(6), mask_of([0, 3])) == [mask_of([1, 2]), mask_of([4, 5])]


@given(graphs(max_n=9), st.integers(0, 511))
def test_components_partition_white_vertices(g, blue):
    blue &= g.full
    comps = components_avoiding(g, blue)
    union = 0
    for c in comps:
        assert c & union == 0 and c & blue == 0
        union |= c
    assert union == g.full & ~blue


def test_cop_win_examples():
    assert is_cop_win(path(6)) and is_cop_win(star(5))
    assert not is_cop_win(cycle(4))
    assert is_cop_win(complete(4))


@given(trees(max_n=15))
def test_trees_are_cop_win(t):
    order = dismantling_order(t)
    assert order is not None and is_corner_sequence(t, order)


@given(graphs(max_n=8))
def test_dismantlability_matches_oracle(g):
    order = dismantling_order(g)
    assert (order is not None) == oracles.is_dismantlable(oracles.adjacency(g))
    if order is not None:
        assert sorted(order) == list(range(g.n))
        assert is_corner_sequence(g, order)


def test_inf_is_a_real_infinity():
    assert INF is math.inf
