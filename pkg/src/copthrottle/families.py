"""Generators for the named graph families.

Numbering conventions (fixtures from drawings use the drawing's 1-based
labels; vertex ``label`` is stored at index ``label - 1``):

* ``path(n)``: ``0 - 1 - ... - n-1``.
* ``cycle(n)``: ``i ~ i+1 (mod n)``.
* ``wheel(m)``: centre ``0``, rim ``1..m`` in cyclic order.
* ``stellated_wheel(m)``: as ``wheel(m)`` plus vertex ``m + i`` adjacent to
  rim vertices ``i`` and ``i % m + 1`` for ``i = 1..m``.
* ``full_binary_tree(h)``: heap order, root ``0``, children ``2i+1, 2i+2``.
* ``grid(a, b)``: vertex ``(i, j)`` is ``i * b + j``.
* ``hypercube(m)``: vertex = bit string, adjacent at Hamming distance one.
* ``projective_incidence(q)``: points ``0..N-1`` then lines ``N..2N-1``,
  ``N = q^2 + q + 1``, each list in lexicographic order of normalised
  vectors over GF(q).
* ``vertex_sum`` / ``clique_sum``: the first graph keeps its labels, the
  second graph's remaining vertices follow in increasing order.
"""
from __future__ import annotations

import random
from itertools import product
from typing import Callable, Sequence

from .graph import Graph, bits

# ---------------------------------------------------------------- basic families


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph(n, (0,) * n)


def star(n: int) -> Graph:
    """K_{1,n-1} with hub 0."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(m: int) -> Graph:
    """W_{m+1}: a dominating centre added to C_m."""
    if m < 3:
        raise ValueError("wheel needs m >= 3")
    edges = [(0, i) for i in range(1, m + 1)]
    edges += [(i, i % m + 1) for i in range(1, m + 1)]
    return Graph.from_edges(m + 1, edges)


def stellated_wheel(m: int) -> Graph:
    """SW_{2m+1}: the wheel W_{m+1} with a degree-two vertex on every rim edge."""
    if m < 3:
        raise ValueError("stellated wheel needs m >= 3")
    edges = list(wheel(m).edges())
    for i in range(1, m + 1):
        s = m + i
        edges += [(s, i), (s, i % m + 1)]
    return Graph.from_edges(2 * m + 1, edges)


def full_binary_tree(h: int) -> Graph:
    if h < 1:
        raise ValueError("full binary tree needs h >= 1")
    n = 2 ** (h + 1) - 1
    return Graph.from_edges(n, [(i, (i - 1) // 2) for i in range(1, n)])


def grid(a: int, b: int) -> Graph:
    """Cartesian product P_a □ P_b."""
    if a < 1 or b < 1:
        raise ValueError("grid sides must be positive")
    edges = []
    for i in range(a):
        for j in range(b):
            v = i * b + j
            if j + 1 < b:
                edges.append((v, v + 1))
            if i + 1 < a:
                edges.append((v, v + b))
    return Graph.from_edges(a * b, edges)


def hypercube(m: int) -> Graph:
    if m < 0:
        raise ValueError("hypercube dimension must be >= 0")
    n = 1 << m
    return Graph.from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(m) if v < v ^ (1 << i)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# ---------------------------------------------------------------- projective planes


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    """Nonzero vectors of GF(q)^3 whose first nonzero coordinate is 1."""
    pts = []
    for v in product(range(q), repeat=3):
        nz = [c for c in v if c]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def projective_incidence(q: int) -> Graph:
    """Incidence graph of PG(2, q) for prime ``q``.

    Points are the 1-dimensional subspaces of GF(q)^3; lines are the
    2-dimensional ones, each represented by its normal vector, and a point
    lies on a line when the dot product vanishes mod ``q``.
    """
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime (prime powers are not supported)")
    pts = _projective_points(q)
    N = len(pts)
    edges = []
    for i, p in enumerate(pts):
        for j, line in enumerate(pts):
            if sum(a * b for a, b in zip(p, line)) % q == 0:
                edges.append((i, N + j))
    return Graph.from_edges(2 * N, edges)


def meyniel_extremal(n: int) -> Graph:
    """G_n: IG(P_q) for the largest prime q with 2(q^2+q+1) <= n, plus a path.

    The path has order ``k = n - 2(q^2+q+1) + 1`` and is vertex-summed at one
    end onto point vertex 0, so the result has exactly ``n`` vertices.
    """
    q = max((p for p in range(2, n) if is_prime(p) and 2 * (p * p + p + 1) <= n), default=None)
    if q is None:
        raise ValueError("meyniel_extremal needs n >= 14")
    ig = projective_incidence(q)
    k = n - ig.n + 1
    if k == 1:
        return ig
    return vertex_sum(ig, 0, path(k), 0)


# ---------------------------------------------------------------- sums


def clique_sum(g1: Graph, k1: Sequence[int], g2: Graph, k2: Sequence[int]) -> Graph:
    """Glue ``g1`` and ``g2`` identifying ``k1[i]`` with ``k2[i]``.

    Both lists must induce cliques of the same size, and each graph must be
    strictly larger than the clique.
    """
    if len(k1) != len(k2) or not k1:
        raise ValueError("identified vertex lists must be nonempty and equal in size")
    if len(set(k1)) != len(k1) or len(set(k2)) != len(k2):
        raise ValueError("identified vertices must be distinct")
    for g, ks in ((g1, k1), (g2, k2)):
        for i, a in enumerate(ks):
            for b in ks[i + 1:]:
                if not g.adj[a] >> b & 1:
                    raise ValueError(f"vertices {list(ks)} do not induce a clique")
        if g.n <= len(ks):
            raise ValueError("each summand must have order greater than the clique")
    label = {b: a for a, b in zip(k1, k2)}
    nxt = g1.n
    for v in range(g2.n):
        if v not in label:
            label[v] = nxt
            nxt += 1
    edges = set(g1.edges())
    for u, v in g2.edges():
        a, b = sorted((label[u], label[v]))
        edges.add((a, b))
    return Graph.from_edges(nxt, sorted(edges))


def vertex_sum(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    return clique_sum(g1, [v1], g2, [v2])


# ---------------------------------------------------------------- random families


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform labelled tree on ``n`` vertices from a seeded Prüfer sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_unicyclic(n: int, seed: int = 0) -> Graph:
    """A random tree plus one extra edge between a random non-adjacent pair."""
    if n < 3:
        raise ValueError("unicyclic graph needs n >= 3")
    t = random_tree(n, seed)
    rng = random.Random(seed ^ 0x5EED)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not t.adj[u] >> v & 1]
    u, v = rng.choice(pairs)
    return Graph.from_edges(n, t.edges() + [(u, v)])


def random_graph(n: int, p: float, seed: int = 0, connected: bool = True) -> Graph:
    """G(n, p); with ``connected`` a random spanning tree is laid down first."""
    rng = random.Random(seed)
    edges = set(random_tree(n, rng.randrange(1 << 30)).edges()) if connected and n > 1 else set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_subtree(t: Graph, seed: int = 0) -> Graph:
    """A random connected subtree of tree ``t`` (grown from a random root)."""
    rng = random.Random(seed)
    size = rng.randint(1, t.n)
    inside = 1 << rng.randrange(t.n)
    while bin(inside).count("1") < size:
        frontier = 0
        for v in bits(inside):
            frontier |= t.adj[v]
        frontier &= ~inside
        choices = list(bits(frontier))
        inside |= 1 << rng.choice(choices)
    return t.induced(inside)


# ---------------------------------------------------------------- drawn fixtures

def _from_labels(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


# Labels below are the drawing's 1-based labels.
_H7_EDGES = [
    (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7),
    (3, 6), (3, 7), (4, 5), (4, 6), (5, 7),
]
H7_ATTACH = 7  # label of the vertex the path of H_n hangs from


def h7() -> Graph:
    """H_7: cop-win on 7 vertices with one-cop capture time 3; {1, 7} dominates."""
    return _from_labels(7, _H7_EDGES)


def max_capture_Hn(n: int) -> Graph:
    """H_n for n >= 7: H_7 with a path vertex-summed at label 7.

    The path vertices are labelled ``8..n`` going away from H_7, so ``H_n``
    contains ``H_{n-1}`` as the subgraph on labels ``1..n-1``.
    """
    if n < 7:
        raise ValueError("H_n needs n >= 7")
    if n == 7:
        return h7()
    return vertex_sum(h7(), H7_ATTACH - 1, path(n - 6), 0)


def figure2_tree() -> Graph:
    """Tree of order 10 with rad_1..rad_4 = 4, 3, 2, 1 and th_c = 5."""
    return _from_labels(10, [(1, 4), (1, 5), (2, 6), (2, 8), (3, 5), (3, 8), (6, 7), (8, 10), (9, 10)])


def figure3_unicyclic() -> Graph:
    """Unicyclic graph with th_c = 4 < 5 = th_+, gamma = 4 and cops {8, 9}.

    The cycle is 1-2-3-4-5-6-8-1; vertex 7 hangs from 1 and the path
    9-10-11 hangs from 4.
    """
    return _from_labels(11, [
        (1, 2), (1, 7), (1, 8), (2, 3), (3, 4), (4, 5), (4, 9), (5, 6), (6, 8), (9, 10), (10, 11),
    ])


def figure4_tree() -> Graph:
    """Tree on 5 vertices with burning sequence (2, 4), b = 2 and th_+ = 3."""
    return _from_labels(5, [(1, 2), (2, 3), (2, 5), (3, 4)])


def clique_sum_upper_gadget(m: int) -> Graph:
    """Two copies of (K_m with a P_4 glued at a leaf) identified along K_m.

    K_m is ``0..m-1``; each copy's path leaves from vertex 0.
    """
    if m < 1:
        raise ValueError("gadget needs m >= 1")
    part = Graph.from_edges(m + 3, complete(m).edges() + [(0, m), (m, m + 1), (m + 1, m + 2)])
    ks = list(range(m))
    return clique_sum(part, ks, part, ks)


def clique_sum_lower_gadget(m: int) -> Graph:
    """Two copies of (K_m plus a leaf at vertex 0) identified along K_m, 0 to 0."""
    if m < 1:
        raise ValueError("gadget needs m >= 1")
    part = Graph.from_edges(m + 1, complete(m).edges() + [(0, m)])
    ks = list(range(m))
    return clique_sum(part, ks, part, ks)


# ---------------------------------------------------------------- textual specs

_FIXTURES: dict[str, Callable[[], Graph]] = {
    "petersen": petersen,
    "h7": h7,
    "figure2_tree": figure2_tree,
    "figure3_unicyclic": figure3_unicyclic,
    "figure4_tree": figure4_tree,
}

# name -> (generator, positional parameter names)
FAMILIES: dict[str, tuple[Callable[..., Graph], tuple[str, ...]]] = {
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "complete": (complete, ("n",)),
    "empty": (empty, ("n",)),
    "star": (star, ("n",)),
    "complete_bipartite": (complete_bipartite, ("a", "b")),
    "wheel": (wheel, ("m",)),
    "stellated_wheel": (stellated_wheel, ("m",)),
    "full_binary_tree": (full_binary_tree, ("h",)),
    "max_capture_Hn": (max_capture_Hn, ("n",)),
    "grid": (grid, ("a", "b")),
    "hypercube": (hypercube, ("m",)),
    "projective_incidence": (projective_incidence, ("q",)),
    "meyniel_extremal": (meyniel_extremal, ("n",)),
    "random_tree": (random_tree, ("n", "seed")),
    "random_unicyclic": (random_unicyclic, ("n", "seed")),
    "clique_sum_upper_gadget": (clique_sum_upper_gadget, ("m",)),
    "clique_sum_lower_gadget": (clique_sum_lower_gadget, ("m",)),
}
FAMILIES.update({name: (fn, ()) for name, fn in _FIXTURES.items()})


class FamilySpecError(ValueError):
    pass


def parse_family_spec(spec: str | Sequence[str]) -> tuple[str, dict[str, int]]:
    """Parse ``"stellated_wheel m=10"`` (or its token list) into name and parameters.

    ``seed`` defaults to 0 for the random families.
    """
    tokens = spec.split() if isinstance(spec, str) else [t for s in spec for t in s.split()]
    if not tokens:
        raise FamilySpecError("empty family spec")
    name, rest = tokens[0], tokens[1:]
    if name not in FAMILIES:
        raise FamilySpecError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    _, names = FAMILIES[name]
    params: dict[str, int] = {}
    for tok in rest:
        key, sep, val = tok.partition("=")
        if not sep:
            raise FamilySpecError(f"parameter {tok!r} is not of the form key=value")
        if key not in names:
            raise FamilySpecError(f"family {name} takes {list(names)}, got {key!r}")
        try:
            params[key] = int(val)
        except ValueError:
            raise FamilySpecError(f"parameter {key} must be an integer, got {val!r}") from None
    if "seed" in names:
        params.setdefault("seed", 0)
    missing = [k for k in names if k not in params]
    if missing:
        raise FamilySpecError(f"family {name} is missing {missing}")
    return name, params


def build_family(spec: str | Sequence[str]) -> Graph:
    name, params = parse_family_spec(spec)
    fn, _ = FAMILIES[name]
    try:
        return fn(**params)
    except ValueError as exc:
        raise FamilySpecError(str(exc)) from exc
