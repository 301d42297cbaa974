"""Graph corpora for exhaustive and seeded checks."""
from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

from .graph import Graph, encode_graph6, parse_graph6


def _edge_code(g: Graph, perm: tuple[int, ...]) -> int:
    code = 0
    for u, v in g.edges():
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        code |= 1 << (b * (b - 1) // 2 + a)
    return code


def canonical_code(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant code: the least edge code over relabellings.

    Only relabellings that sort vertices by (degree, neighbour degrees) are
    tried, which keeps the search small for the orders used here.
    """
    deg = [g.degree(v) for v in range(g.n)]
    key = [(deg[v], tuple(sorted(deg[w] for w in g.neighbors(v)))) for v in range(g.n)]
    classes: dict[tuple, list[int]] = {}
    for v in sorted(range(g.n), key=lambda v: key[v]):
        classes.setdefault(key[v], []).append(v)
    groups = [classes[k] for k in sorted(classes)]
    best = None
    offsets = []
    pos = 0
    for grp in groups:
        offsets.append(pos)
        pos += len(grp)
    for choice in product(*(permutations(grp) for grp in groups)):
        perm = [0] * g.n
        for off, order in zip(offsets, choice):
            for i, v in enumerate(order):
                perm[v] = off + i
        code = _edge_code(g, tuple(perm))
        if best is None or code < best:
            best = code
    return g.n, best or 0


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class on ``n`` vertices (n <= 7 is practical)."""
    if n < 1:
        return []
    if n == 1:
        return [Graph(1, (0,))]
    seen: dict[tuple[int, int], Graph] = {}
    for h in nonisomorphic_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            edges = h.edges() + [(i, n - 1) for i in range(n - 1) if nbrs >> i & 1]
            g = Graph.from_edges(n, edges)
            seen.setdefault(canonical_code(g), g)
    return [seen[k] for k in sorted(seen)]


def write_graph6_corpus(path, max_n: int) -> int:
    count = 0
    with open(path, "w") as fh:
        for n in range(1, max_n + 1):
            for g in nonisomorphic_graphs(n):
                fh.write(encode_graph6(g) + "\n")
                count += 1
    return count


def read_graph6_corpus(path) -> Iterator[Graph]:
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield parse_graph6(line.strip())
